#pragma once

// Adaptive Simpson quadrature for vector-valued integrands.
//
// All components share one subdivision: an interval is split while any
// component's Simpson error estimate exceeds its share of the tolerance, so
// every component individually meets the absolute target. Accepted panels are
// summed with the (positive) Boole weights, which keeps the map from node
// values to the result monotone under rounding: if one component is <= another
// at every node, its integral is <= as well.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <type_traits>
#include <string>
#include <vector>

#include "fuzzysum/error.hpp"

namespace fuzzysum {

struct SimpsonOptions {
    int min_depth = 0;
    int max_depth = 48;
    std::size_t max_evals = 5'000'000;
};

namespace detail {

template <class Eval>
class VectorSimpson {
public:
    VectorSimpson(Eval& eval, std::size_t dim, const SimpsonOptions& opts)
        : eval_(eval), dim_(dim), opts_(opts),
          work_(static_cast<std::size_t>(opts.max_depth + 1) * 4 * dim) {}

    // result += integral over [a, b]; fa, fb are the integrand values at a and b.
    void integrate(double a, double b, std::span<const double> fa, std::span<const double> fb,
                   double tol, std::span<double> result) {
        evals_ = 0;
        std::vector<double> fm(dim_), whole(dim_);
        const double m = 0.5 * (a + b);
        call(m, fm);
        for (std::size_t k = 0; k < dim_; ++k) whole[k] = (b - a) / 6 * (fa[k] + 4 * fm[k] + fb[k]);
        recurse(a, b, fa, fm, fb, whole, tol, 0, result);
    }

    std::size_t evaluations() const noexcept { return evals_; }

private:
    void call(double x, std::span<double> out) {
        if (++evals_ > opts_.max_evals)
            throw QuadratureError("quadrature node budget exhausted near x=" + std::to_string(x));
        eval_(x, out);
    }

    void recurse(double a, double b, std::span<const double> fa, std::span<const double> fm,
                 std::span<const double> fb, std::span<const double> whole, double tol, int depth,
                 std::span<double> result) {
        std::span<double> buf(work_.data() + static_cast<std::size_t>(depth) * 4 * dim_, 4 * dim_);
        auto flm = buf.subspan(0, dim_);
        auto frm = buf.subspan(dim_, dim_);
        auto left = buf.subspan(2 * dim_, dim_);
        auto right = buf.subspan(3 * dim_, dim_);

        const double m = 0.5 * (a + b);
        call(0.5 * (a + m), flm);
        call(0.5 * (m + b), frm);

        double err = 0.0;
        for (std::size_t k = 0; k < dim_; ++k) {
            left[k] = (m - a) / 6 * (fa[k] + 4 * flm[k] + fm[k]);
            right[k] = (b - m) / 6 * (fm[k] + 4 * frm[k] + fb[k]);
            err = std::max(err, std::abs(left[k] + right[k] - whole[k]));
        }
        if (!std::isfinite(err))
            throw QuadratureError("non-finite integrand on [" + std::to_string(a) + ", " +
                                  std::to_string(b) + "]");

        if (depth >= opts_.min_depth && err <= 15 * tol) {
            const double w = (b - a) / 90;
            for (std::size_t k = 0; k < dim_; ++k)
                result[k] += w * (7 * fa[k] + 32 * flm[k] + 12 * fm[k] + 32 * frm[k] + 7 * fb[k]);
            return;
        }
        if (depth >= opts_.max_depth)
            throw QuadratureError("adaptive Simpson did not converge on [" + std::to_string(a) +
                                  ", " + std::to_string(b) + "]");
        recurse(a, m, fa, flm, fm, left, tol / 2, depth + 1, result);
        recurse(m, b, fm, frm, fb, right, tol / 2, depth + 1, result);
    }

    Eval& eval_;
    std::size_t dim_;
    SimpsonOptions opts_;
    std::vector<double> work_;
    std::size_t evals_ = 0;
};

}  // namespace detail

// Integrates eval: (x, out span of size dim) -> void over [a, b] to absolute
// accuracy tol per component.
template <class Eval>
std::vector<double> adaptive_simpson(Eval&& eval, std::size_t dim, double a, double b, double tol,
                                     const SimpsonOptions& opts = {}) {
    if (!(a <= b)) throw invalid_argument("integration bounds must satisfy a <= b");
    if (!(tol > 0)) throw invalid_argument("quadrature tolerance must be positive");
    std::vector<double> result(dim, 0.0);
    if (a == b) return result;
    std::vector<double> fa(dim), fb(dim);
    eval(a, std::span<double>(fa));
    eval(b, std::span<double>(fb));
    detail::VectorSimpson<std::remove_reference_t<Eval>> q(eval, dim, opts);
    q.integrate(a, b, fa, fb, tol, result);
    return result;
}

// Scalar convenience wrapper.
template <class F>
double adaptive_simpson_scalar(F&& f, double a, double b, double tol, const SimpsonOptions& opts = {}) {
    auto r = adaptive_simpson([&](double x, std::span<double> out) { out[0] = f(x); }, 1, a, b, tol,
                              opts);
    return r[0];
}

}  // namespace fuzzysum
