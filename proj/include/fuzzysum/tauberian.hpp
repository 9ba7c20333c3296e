#pragma once

// Finite-scale falsifiers for the one-sided Tauberian conditions:
//
//   forward average    M(t, lambda t) >= s(t) - eps        (lambda > 1)
//   backward average   M(ell t, t)    <= s(t) + eps        (0 < ell < 1)
//   slow decrease      s(x) >= s(t) - eps   for t0 < t < x <= lambda t
//   backward variant   s(t) >= s(x) - eps   for lambda t < x <= t   (0 < lambda < 1)
//   Landau bound       x f(x) >= u          for x > x0, u a negative constant
//
// M(a, b) is the mean of s over [a, b]. Each checker scans a finite sample grid
// and reports the first violation in scan order; "no counterexample" only means
// none exists at this resolution and range.

#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "fuzzysum/error.hpp"
#include "fuzzysum/fuzzy_function.hpp"
#include "fuzzysum/fuzzy_number.hpp"
#include "fuzzysum/integration.hpp"

namespace fuzzysum {

enum class CheckResult { no_counterexample, counterexample };

struct Witness {
    double t;
    std::optional<double> x;  // second abscissa for pair scans
    double alpha;
    std::string endpoint;     // "lower" or "upper"
    double margin;            // < 0
};

struct CheckerParams {
    double eps = 0.0;
    std::optional<double> lambda;
    std::optional<double> ell;
    double t0 = 0.0;
    double range_lo = 0.0;  // first and last scanned t
    double range_hi = 0.0;
    std::size_t stride = 1;
};

struct CheckerOutcome {
    std::string name;
    CheckerParams params;
    CheckResult outcome = CheckResult::no_counterexample;
    std::optional<Witness> witness;
    std::vector<std::string> notes;
    bool boundary = false;  // accepted only under a boundary reading of a precondition
    // Landau checker: slow-decrease budget H = -u^-_0 and lambda = exp(eps / H).
    std::optional<double> budget_h;
    std::optional<double> implied_lambda;

    bool passed() const noexcept { return outcome == CheckResult::no_counterexample; }
};

struct ScanOptions {
    std::size_t stride = 10;  // t restricted to every stride-th sample
};

namespace detail {

// First level/endpoint where lhs > rhs, with margin rhs - lhs.
inline std::optional<std::pair<std::size_t, bool>> first_leq_failure(const FuzzyNumber& lhs,
                                                                     const FuzzyNumber& rhs,
                                                                     double& margin) {
    for (std::size_t k = 0; k < lhs.size(); ++k) {
        if (!(lhs.lower(k) <= rhs.lower(k))) {
            margin = rhs.lower(k) - lhs.lower(k);
            return std::pair{k, true};
        }
        if (!(lhs.upper(k) <= rhs.upper(k))) {
            margin = rhs.upper(k) - lhs.upper(k);
            return std::pair{k, false};
        }
    }
    return std::nullopt;
}

inline void require_positive_eps(double eps) {
    if (!(eps > 0) || !std::isfinite(eps)) throw invalid_argument("eps must be positive");
}

inline CheckerOutcome start_outcome(std::string name, const FuzzyPath& path, double eps, double t0,
                                    std::size_t stride) {
    if (stride == 0) throw invalid_argument("scan stride must be positive");
    CheckerOutcome out;
    out.name = std::move(name);
    out.params.eps = eps;
    out.params.t0 = t0;
    out.params.stride = stride;
    out.notes.push_back("finite scan over sampled t with spacing " +
                        format_double(path.t(1) - path.t(0)) + "; not a proof of the asymptotic condition");
    return out;
}

inline void record_failure(CheckerOutcome& out, const FuzzyPath& path, double t, std::optional<double> x,
                           std::pair<std::size_t, bool> where, double margin) {
    out.outcome = CheckResult::counterexample;
    out.witness = Witness{t, x, path.grid()[where.first], where.second ? "lower" : "upper", margin};
}

inline void require_nonempty(const CheckerOutcome& out, bool any) {
    if (!any) throw invalid_argument(out.name + ": empty scan range");
}

inline void scan_range(CheckerOutcome& out, double t, bool& any) {
    if (!any) out.params.range_lo = t;
    out.params.range_hi = t;
    any = true;
}

}  // namespace detail

// Forward averaged condition on a sampled path (s, or f for the function-level theorem).
inline CheckerOutcome check_condition_star(const FuzzyPath& path, double eps, double lambda, double t0,
                                           const ScanOptions& scan = {}) {
    detail::require_positive_eps(eps);
    if (!(lambda > 1)) throw invalid_argument("condition (*): lambda must exceed 1");
    auto out = detail::start_outcome("condition-star", path, eps, t0, scan.stride);
    out.params.lambda = lambda;
    const double t_end = path.t_back();
    bool any = false;
    for (std::size_t i = 0; i < path.size(); i += scan.stride) {
        const double t = path.t(i);
        if (!(t > t0) || !(t > 0)) continue;
        if (lambda * t > t_end) break;
        detail::scan_range(out, t, any);
        const FuzzyNumber lhs = shift(path.value(i), -eps);
        const FuzzyNumber rhs = path.window_mean(t, lambda * t);
        double margin = 0.0;
        if (auto fail = detail::first_leq_failure(lhs, rhs, margin)) {
            detail::record_failure(out, path, t, std::nullopt, *fail, margin);
            return out;
        }
    }
    detail::require_nonempty(out, any);
    return out;
}

inline CheckerOutcome check_condition_doublestar(const FuzzyPath& path, double eps, double ell, double t0,
                                                 const ScanOptions& scan = {}) {
    detail::require_positive_eps(eps);
    if (!(ell > 0 && ell < 1)) throw invalid_argument("condition (**): ell must lie in (0, 1)");
    auto out = detail::start_outcome("condition-doublestar", path, eps, t0, scan.stride);
    out.params.ell = ell;
    bool any = false;
    for (std::size_t i = 0; i < path.size(); i += scan.stride) {
        const double t = path.t(i);
        if (!(t > t0) || !(t > 0)) continue;
        detail::scan_range(out, t, any);
        const FuzzyNumber lhs = path.window_mean(ell * t, t);
        const FuzzyNumber rhs = shift(path.value(i), eps);
        double margin = 0.0;
        if (auto fail = detail::first_leq_failure(lhs, rhs, margin)) {
            detail::record_failure(out, path, t, std::nullopt, *fail, margin);
            return out;
        }
    }
    detail::require_nonempty(out, any);
    return out;
}

// Pairs t0 < t < x <= lambda t with x on the sample grid; equivalent to the
// endpoint families being equi-slowly decreasing over the grid levels.
inline CheckerOutcome check_slow_decrease(const FuzzyPath& path, double eps, double lambda, double t0,
                                          const ScanOptions& scan = {}) {
    detail::require_positive_eps(eps);
    if (!(lambda > 1)) throw invalid_argument("slow decrease: lambda must exceed 1");
    auto out = detail::start_outcome("slow-decrease", path, eps, t0, scan.stride);
    out.params.lambda = lambda;
    const std::size_t L = path.grid().size();
    bool any = false;
    for (std::size_t i = 0; i + 1 < path.size(); i += scan.stride) {
        const double t = path.t(i);
        if (!(t > t0) || !(t > 0)) continue;
        detail::scan_range(out, t, any);
        const FuzzyNumber floor = shift(path.value(i), -eps);
        for (std::size_t j = i + 1; j < path.size() && path.t(j) <= lambda * t; ++j) {
            const FuzzyNumber& sx = path.value(j);
            for (std::size_t k = 0; k < L; ++k) {
                if (!(floor.lower(k) <= sx.lower(k))) {
                    detail::record_failure(out, path, t, path.t(j), {k, true}, sx.lower(k) - floor.lower(k));
                    return out;
                }
                if (!(floor.upper(k) <= sx.upper(k))) {
                    detail::record_failure(out, path, t, path.t(j), {k, false}, sx.upper(k) - floor.upper(k));
                    return out;
                }
            }
        }
    }
    detail::require_nonempty(out, any);
    return out;
}

// Pairs lambda t < x <= t (0 < lambda < 1) checking s(x) - eps <= s(t).
inline CheckerOutcome check_backward_slow_decrease(const FuzzyPath& path, double eps, double lambda,
                                                   double t0, const ScanOptions& scan = {}) {
    detail::require_positive_eps(eps);
    if (!(lambda > 0 && lambda < 1)) throw invalid_argument("backward slow decrease: lambda must lie in (0, 1)");
    auto out = detail::start_outcome("backward-slow-decrease", path, eps, t0, scan.stride);
    out.params.lambda = lambda;
    const std::size_t L = path.grid().size();
    bool any = false;
    for (std::size_t i = 0; i < path.size(); i += scan.stride) {
        const double t = path.t(i);
        if (!(t > t0) || !(t > 0)) continue;
        detail::scan_range(out, t, any);
        const FuzzyNumber& st = path.value(i);
        const std::size_t j0 = path.index_at_or_below(lambda * t) + 1;
        for (std::size_t j = j0; j <= i; ++j) {
            const FuzzyNumber& sx = path.value(j);
            for (std::size_t k = 0; k < L; ++k) {
                const double lo = sx.lower(k) - eps;
                const double up = sx.upper(k) - eps;
                if (!(lo <= st.lower(k))) {
                    detail::record_failure(out, path, t, path.t(j), {k, true}, st.lower(k) - lo);
                    return out;
                }
                if (!(up <= st.upper(k))) {
                    detail::record_failure(out, path, t, path.t(j), {k, false}, st.upper(k) - up);
                    return out;
                }
            }
        }
    }
    detail::require_nonempty(out, any);
    return out;
}

// Overloads running the scan on s(t) of a trace.
inline CheckerOutcome check_condition_star(const IntegralTrace& trace, double eps, double lambda, double t0,
                                           const ScanOptions& scan = {}) {
    return check_condition_star(trace.s_path(), eps, lambda, t0, scan);
}
inline CheckerOutcome check_condition_doublestar(const IntegralTrace& trace, double eps, double ell,
                                                 double t0, const ScanOptions& scan = {}) {
    return check_condition_doublestar(trace.s_path(), eps, ell, t0, scan);
}
inline CheckerOutcome check_slow_decrease(const IntegralTrace& trace, double eps, double lambda, double t0,
                                          const ScanOptions& scan = {}) {
    return check_slow_decrease(trace.s_path(), eps, lambda, t0, scan);
}
inline CheckerOutcome check_backward_slow_decrease(const IntegralTrace& trace, double eps, double lambda,
                                                   double t0, const ScanOptions& scan = {}) {
    return check_backward_slow_decrease(trace.s_path(), eps, lambda, t0, scan);
}

// Negative in the strict sense: u^+_alpha < 0 at every level. The zero number
// is accepted as a boundary case (the proof only needs u^-_0 = -H <= 0).
struct Negativity {
    bool strict;
    bool zero;
};

inline Negativity classify_negativity(const FuzzyNumber& u) {
    Negativity n{true, true};
    for (std::size_t k = 0; k < u.size(); ++k) {
        if (!(u.upper(k) < 0)) n.strict = false;
        if (u.lower(k) != 0 || u.upper(k) != 0) n.zero = false;
    }
    return n;
}

// x f(x) >= u on the plan's sample grid for x > x0. eps sets the implied
// slow-decrease window lambda = exp(eps / H) with H = -u^-_0.
inline CheckerOutcome check_landau(const FuzzyFunction& f, const FuzzyNumber& u, double x0,
                                   const SamplingPlan& scan, double eps = 0.5) {
    scan.check();
    detail::require_positive_eps(eps);
    if (!(x0 >= 0)) throw invalid_argument("landau: x0 must be nonnegative");
    if (auto v = validate(u)) throw invalid_argument("landau: u is not a fuzzy number: " + v->describe(u.grid()));
    if (!(u.grid() == f.grid())) throw invalid_argument("alpha grid mismatch");
    const Negativity neg = classify_negativity(u);
    if (!neg.strict && !neg.zero) throw invalid_argument("landau: u must be a negative constant fuzzy number");

    CheckerOutcome out;
    out.name = "landau";
    out.params.eps = eps;
    out.params.t0 = x0;
    out.params.stride = 1;
    out.boundary = !neg.strict;
    const double h = -u.lower(0);
    out.budget_h = h;
    if (h > 0) {
        out.implied_lambda = std::exp(eps / h);
    } else {
        out.notes.push_back("H = 0: the bound gives s(x) >= s(t) for every lambda > 1");
    }
    if (out.boundary)
        out.notes.push_back("u = 0-bar accepted as a boundary case of a negative fuzzy number");
    out.notes.push_back("finite scan over sampled x with spacing " + detail::format_double(scan.t_at(1)) +
                        "; not a proof of the asymptotic condition");

    bool any = false;
    for (std::size_t i = 0; i <= scan.n_steps; ++i) {
        const double x = scan.t_at(i);
        if (!(x > x0)) continue;
        detail::scan_range(out, x, any);
        const FuzzyNumber xf = scale(x, eval_at(f, x));
        double margin = 0.0;
        if (auto fail = detail::first_leq_failure(u, xf, margin)) {
            out.outcome = CheckResult::counterexample;
            out.witness = Witness{x, std::nullopt, f.grid()[fail->first], fail->second ? "lower" : "upper", margin};
            return out;
        }
    }
    if (!any) throw invalid_argument("landau: empty scan range");
    return out;
}

}  // namespace fuzzysum
