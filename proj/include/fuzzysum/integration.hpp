#pragma once

// Endpoint-wise fuzzy Riemann integration, the integral function
// s(t) = int_0^t f, its Cesaro means sigma(t) = (1/t) int_0^t s, and the
// deferred means of s over [t, lambda t] and [ell t, t].

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fuzzysum/error.hpp"
#include "fuzzysum/fuzzy_function.hpp"
#include "fuzzysum/fuzzy_number.hpp"
#include "fuzzysum/quadrature.hpp"

namespace fuzzysum {

struct SamplingPlan {
    double t_max = 1000.0;
    std::size_t n_steps = 20000;
    double quad_tol = 1e-9;

    void check() const {
        if (!(t_max > 0) || !std::isfinite(t_max)) throw invalid_argument("plan: t_max must be positive");
        if (n_steps < 2) throw invalid_argument("plan: n_steps must be at least 2");
        if (!(quad_tol > 0)) throw invalid_argument("plan: quad_tol must be positive");
    }

    // Uniform grid 0 = t_0 < ... < t_n = t_max; exact at i = n.
    double t_at(std::size_t i) const {
        return t_max * static_cast<double>(i) / static_cast<double>(n_steps);
    }

    friend bool operator==(const SamplingPlan&, const SamplingPlan&) = default;
};

namespace detail {

template <class Op>
FuzzyNumber endpointwise(const FuzzyNumber& u, const FuzzyNumber& v, Op op) {
    const std::size_t n = u.size();
    std::vector<double> lo(n), up(n);
    for (std::size_t i = 0; i < n; ++i) {
        lo[i] = op(u.lower(i), v.lower(i));
        up[i] = op(u.upper(i), v.upper(i));
    }
    return FuzzyNumber(u.grid(), std::move(lo), std::move(up));
}

inline FuzzyNumber divide(const FuzzyNumber& u, double d) {
    const std::size_t n = u.size();
    std::vector<double> lo(n), up(n);
    for (std::size_t i = 0; i < n; ++i) {
        lo[i] = u.lower(i) / d;
        up[i] = u.upper(i) / d;
    }
    return FuzzyNumber(u.grid(), std::move(lo), std::move(up));
}

inline void require_valid(const FuzzyNumber& u, const std::string& what) {
    if (auto v = validate(u)) throw Error(ErrorCategory::numeric, what + ": " + v->describe(u.grid()));
}

}  // namespace detail

// Samples v(t_i) of a fuzzy-valued path together with C(t_i) = int_0^{t_i} v.
// Between samples C is the cubic Hermite interpolant with C' = v, so window
// integrals and means at arbitrary abscissae are all differences of one C.
class FuzzyPath {
public:
    FuzzyPath(std::vector<double> t, std::vector<FuzzyNumber> value, std::vector<FuzzyNumber> integral)
        : t_(std::move(t)), value_(std::move(value)), integral_(std::move(integral)) {
        if (t_.size() < 2 || value_.size() != t_.size() || integral_.size() != t_.size())
            throw invalid_argument("path needs at least 2 samples with matching arrays");
        for (std::size_t i = 1; i < t_.size(); ++i)
            if (!(t_[i] > t_[i - 1])) throw invalid_argument("path abscissae must be strictly increasing");
    }

    // C by the trapezoid rule; with slopes (v') the endpoint-corrected
    // trapezoid h/2 (v_i + v_{i+1}) + h^2/12 (v'_i - v'_{i+1}), exact for cubics.
    static FuzzyPath from_samples(std::vector<double> t, std::vector<FuzzyNumber> value,
                                  std::span<const FuzzyNumber> slopes = {}) {
        if (value.empty() || value.size() != t.size())
            throw invalid_argument("path needs matching abscissae and values");
        if (!slopes.empty() && slopes.size() != t.size())
            throw invalid_argument("slope samples must match the abscissae");
        const AlphaGrid& grid = value.front().grid();
        const std::size_t L = grid.size();
        std::vector<FuzzyNumber> integral;
        integral.reserve(t.size());
        std::vector<double> lo(L, 0.0), up(L, 0.0);
        integral.emplace_back(grid, lo, up);
        for (std::size_t i = 0; i + 1 < t.size(); ++i) {
            const double h = t[i + 1] - t[i];
            const FuzzyNumber& a = value[i];
            const FuzzyNumber& b = value[i + 1];
            for (std::size_t k = 0; k < L; ++k) {
                double dlo = h / 2 * (a.lower(k) + b.lower(k));
                double dup = h / 2 * (a.upper(k) + b.upper(k));
                if (!slopes.empty()) {
                    dlo += h * h / 12 * (slopes[i].lower(k) - slopes[i + 1].lower(k));
                    dup += h * h / 12 * (slopes[i].upper(k) - slopes[i + 1].upper(k));
                }
                lo[k] += dlo;
                up[k] += dup;
            }
            integral.emplace_back(grid, lo, up);
        }
        return FuzzyPath(std::move(t), std::move(value), std::move(integral));
    }

    std::size_t size() const noexcept { return t_.size(); }
    const AlphaGrid& grid() const { return value_.front().grid(); }
    double t(std::size_t i) const { return t_[i]; }
    std::span<const double> times() const noexcept { return t_; }
    const FuzzyNumber& value(std::size_t i) const { return value_[i]; }
    const FuzzyNumber& integral_at(std::size_t i) const { return integral_[i]; }
    double t_front() const { return t_.front(); }
    double t_back() const { return t_.back(); }

    // Largest i with t_i <= x (x clamped into [t_0, t_n]).
    std::size_t index_at_or_below(double x) const {
        auto it = std::upper_bound(t_.begin(), t_.end(), x);
        if (it == t_.begin()) return 0;
        return static_cast<std::size_t>(it - t_.begin()) - 1;
    }

    // C(x) = int_{t_0}^x v.
    FuzzyNumber integral(double x) const {
        check_range(x);
        const std::size_t i = index_at_or_below(x);
        if (t_[i] == x || i + 1 == t_.size()) return integral_[i];
        const double h = t_[i + 1] - t_[i];
        const double th = (x - t_[i]) / h;
        const double h00 = (1 + 2 * th) * (1 - th) * (1 - th);
        const double h10 = th * (1 - th) * (1 - th);
        const double h01 = th * th * (3 - 2 * th);
        const double h11 = th * th * (th - 1);
        const auto& c0 = integral_[i];
        const auto& c1 = integral_[i + 1];
        const auto& v0 = value_[i];
        const auto& v1 = value_[i + 1];
        const std::size_t L = c0.size();
        std::vector<double> lo(L), up(L);
        for (std::size_t k = 0; k < L; ++k) {
            lo[k] = c0.lower(k) * h00 + h * v0.lower(k) * h10 + c1.lower(k) * h01 + h * v1.lower(k) * h11;
            up[k] = c0.upper(k) * h00 + h * v0.upper(k) * h10 + c1.upper(k) * h01 + h * v1.upper(k) * h11;
        }
        return FuzzyNumber(c0.grid(), std::move(lo), std::move(up));
    }

    // (1/(b - a)) int_a^b v, per endpoint.
    FuzzyNumber window_mean(double a, double b) const {
        if (!(b > a)) throw invalid_argument("window must satisfy a < b");
        return detail::divide(
            detail::endpointwise(integral(b), integral(a), [](double p, double q) { return p - q; }),
            b - a);
    }

    // (1/x) int_0^x v for paths starting at 0.
    FuzzyNumber mean(double x) const {
        if (!(x > 0)) throw invalid_argument("mean needs x > 0");
        return detail::divide(integral(x), x - t_.front());
    }

private:
    void check_range(double x) const {
        const double slack = 1e-12 * std::max(1.0, std::abs(t_.back()));
        if (!(x >= t_.front() - slack && x <= t_.back() + slack))
            throw invalid_argument("abscissa " + std::to_string(x) + " outside the sampled range [" +
                                   std::to_string(t_.front()) + ", " + std::to_string(t_.back()) + "]");
    }

    std::vector<double> t_;
    std::vector<FuzzyNumber> value_;
    std::vector<FuzzyNumber> integral_;
};

// s(t) and sigma(t) sampled on a plan's grid. s_path() carries s with its
// running integral; f_path(), when the trace was built from f, carries f with
// running integral s.
class IntegralTrace {
public:
    IntegralTrace(SamplingPlan plan, std::string f_name, FuzzyPath s_path,
                  std::optional<FuzzyPath> f_path = std::nullopt)
        : plan_(plan), f_name_(std::move(f_name)), s_path_(std::move(s_path)), f_path_(std::move(f_path)) {
        sigma_.reserve(s_path_.size());
        sigma_.emplace_back(std::nullopt);
        for (std::size_t i = 1; i < s_path_.size(); ++i) {
            FuzzyNumber sig = detail::divide(s_path_.integral_at(i), s_path_.t(i));
            detail::require_valid(sig, "Cesaro mean at t=" + std::to_string(s_path_.t(i)));
            sigma_.emplace_back(std::move(sig));
        }
    }

    // A trace from given s samples on the plan grid (trapezoid means).
    static IntegralTrace from_s_samples(const SamplingPlan& plan, std::string name,
                                        std::vector<FuzzyNumber> s) {
        plan.check();
        if (s.size() != plan.n_steps + 1) throw invalid_argument("need n_steps + 1 samples of s");
        std::vector<double> t(s.size());
        for (std::size_t i = 0; i < t.size(); ++i) t[i] = plan.t_at(i);
        return IntegralTrace(plan, std::move(name), FuzzyPath::from_samples(std::move(t), std::move(s)));
    }

    const SamplingPlan& plan() const noexcept { return plan_; }
    const std::string& f_name() const noexcept { return f_name_; }
    const AlphaGrid& grid() const { return s_path_.grid(); }
    std::size_t size() const noexcept { return s_path_.size(); }
    double t(std::size_t i) const { return s_path_.t(i); }
    std::span<const double> times() const noexcept { return s_path_.times(); }
    const FuzzyNumber& s(std::size_t i) const { return s_path_.value(i); }
    // Empty at t = 0.
    const std::optional<FuzzyNumber>& sigma(std::size_t i) const { return sigma_[i]; }
    const FuzzyPath& s_path() const noexcept { return s_path_; }
    const std::optional<FuzzyPath>& f_path() const noexcept { return f_path_; }

private:
    SamplingPlan plan_;
    std::string f_name_;
    FuzzyPath s_path_;
    std::optional<FuzzyPath> f_path_;
    std::vector<std::optional<FuzzyNumber>> sigma_;
};

// int_a^b f per alpha level and endpoint, adaptive Simpson with absolute
// target tol. f is validated at every node.
inline FuzzyNumber integrate_on(const FuzzyFunction& f, double a, double b, double tol) {
    if (!(a >= f.domain_start())) throw invalid_argument("integrate_on: a lies outside the domain");
    if (!(a <= b)) throw invalid_argument("integrate_on: need a <= b");
    if (!(tol > 0)) throw invalid_argument("integrate_on: tol must be positive");
    const std::size_t L = f.grid().size();
    SimpsonOptions opts;
    opts.min_depth = 4;
    auto r = adaptive_simpson(
        [&](double x, std::span<double> out) { f.eval_into(x, out.first(L), out.subspan(L)); }, 2 * L,
        a, b, tol, opts);
    FuzzyNumber out(f.grid(), std::vector<double>(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(L)),
                    std::vector<double>(r.begin() + static_cast<std::ptrdiff_t>(L), r.end()));
    detail::require_valid(out, "integral over [" + std::to_string(a) + ", " + std::to_string(b) + "]");
    return out;
}

// s is accumulated step by step, s(t_{i+1}) = s(t_i) + int_{t_i}^{t_{i+1}} f,
// so the total work is O(n_steps * levels).
inline IntegralTrace build_trace(const FuzzyFunction& f, const SamplingPlan& plan) {
    plan.check();
    if (f.domain_start() > 0) throw invalid_argument("build_trace: f must be defined from 0");
    const AlphaGrid& grid = f.grid();
    const std::size_t L = grid.size();
    const std::size_t n = plan.n_steps;

    auto eval = [&](double x, std::span<double> out) { f.eval_into(x, out.first(L), out.subspan(L)); };
    detail::VectorSimpson<decltype(eval)> quad(eval, 2 * L, SimpsonOptions{});

    auto as_number = [&](const std::vector<double>& v) {
        return FuzzyNumber(grid, std::vector<double>(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(L)),
                           std::vector<double>(v.begin() + static_cast<std::ptrdiff_t>(L), v.end()));
    };

    std::vector<double> t(n + 1);
    std::vector<FuzzyNumber> s, fv;
    s.reserve(n + 1);
    fv.reserve(n + 1);

    std::vector<double> cur(2 * L), next(2 * L), acc(2 * L, 0.0);
    t[0] = plan.t_at(0);
    eval(t[0], cur);
    fv.push_back(as_number(cur));
    s.push_back(as_number(acc));
    for (std::size_t i = 0; i < n; ++i) {
        t[i + 1] = plan.t_at(i + 1);
        eval(t[i + 1], next);
        std::vector<double> inc(2 * L, 0.0);
        quad.integrate(t[i], t[i + 1], cur, next, plan.quad_tol, inc);
        for (std::size_t k = 0; k < 2 * L; ++k) acc[k] += inc[k];
        s.push_back(as_number(acc));
        detail::require_valid(s.back(), "s at t=" + std::to_string(t[i + 1]));
        fv.push_back(as_number(next));
        std::swap(cur, next);
    }

    FuzzyPath s_path = FuzzyPath::from_samples(t, s, fv);
    FuzzyPath f_path(std::move(t), std::move(fv), std::move(s));
    return IntegralTrace(plan, f.name(), std::move(s_path), std::move(f_path));
}

namespace detail {

inline double range_slack(const IntegralTrace& trace) { return 1e-12 * trace.plan().t_max; }

}  // namespace detail

// sigma(t). On a sample this is the stored value; between samples it is
// evaluated from the Hermite interpolant of int_0^t s.
inline FuzzyNumber cesaro_mean_at(const IntegralTrace& trace, double t) {
    if (!(t > 0) || t > trace.plan().t_max + detail::range_slack(trace))
        throw invalid_argument("cesaro_mean_at: t must lie in (0, t_max]");
    const std::size_t i = trace.s_path().index_at_or_below(t);
    if (trace.t(i) == t && trace.sigma(i)) return *trace.sigma(i);
    return trace.s_path().mean(t);
}

// (1/(lambda t - t)) int_t^{lambda t} s(x) dx
inline FuzzyNumber deferred_mean_forward(const IntegralTrace& trace, double t, double lambda) {
    if (!(lambda > 1)) throw invalid_argument("deferred_mean_forward: lambda must exceed 1");
    if (!(t > 0) || lambda * t > trace.plan().t_max + detail::range_slack(trace))
        throw invalid_argument("deferred_mean_forward: need 0 < t and lambda t <= t_max");
    return trace.s_path().window_mean(t, lambda * t);
}

// (1/(t - ell t)) int_{ell t}^t s(x) dx
inline FuzzyNumber deferred_mean_backward(const IntegralTrace& trace, double t, double ell) {
    if (!(ell > 0 && ell < 1)) throw invalid_argument("deferred_mean_backward: ell must lie in (0, 1)");
    if (!(t > 0) || t > trace.plan().t_max + detail::range_slack(trace))
        throw invalid_argument("deferred_mean_backward: t must lie in (0, t_max]");
    return trace.s_path().window_mean(ell * t, t);
}

struct LemmaIdentityReport {
    double t;
    double lambda;
    double ell;
    double tol;
    double forward_residual;   // D(lhs, rhs) of the [t, lambda t] identity
    double backward_residual;  // D(lhs, rhs) of the [ell t, t] identity
    bool forward_ok;
    bool backward_ok;
};

// Evaluates both sides of
//   M(t, lambda t) + sigma(t)/(lambda-1)  =  sigma(lambda t) + sigma(lambda t)/(lambda-1)
//   M(ell t, t) + ell/(1-ell) sigma(ell t) =  sigma(t) + ell/(1-ell) sigma(t)
// where M is the deferred mean, and reports their distance in D.
inline LemmaIdentityReport verify_lemma_identities(const IntegralTrace& trace, double t, double lambda,
                                                   double ell, double tol) {
    if (!(tol >= 0)) throw invalid_argument("verify_lemma_identities: tol must be nonnegative");
    const double k = 1 / (lambda - 1);
    const FuzzyNumber fwd_lhs = deferred_mean_forward(trace, t, lambda) + k * cesaro_mean_at(trace, t);
    const FuzzyNumber sig_lt = cesaro_mean_at(trace, lambda * t);
    const FuzzyNumber fwd_rhs = sig_lt + k * sig_lt;

    const double c = ell / (1 - ell);
    const FuzzyNumber bwd_lhs = deferred_mean_backward(trace, t, ell) + c * cesaro_mean_at(trace, ell * t);
    const FuzzyNumber sig_t = cesaro_mean_at(trace, t);
    const FuzzyNumber bwd_rhs = sig_t + c * sig_t;

    LemmaIdentityReport r{t, lambda, ell, tol, metric_d(fwd_lhs, fwd_rhs), metric_d(bwd_lhs, bwd_rhs),
                          false, false};
    r.forward_ok = r.forward_residual <= tol;
    r.backward_ok = r.backward_residual <= tol;
    return r;
}

}  // namespace fuzzysum
