#pragma once

// Limit estimation in the metric D and classification of an improper fuzzy
// integral as convergent, Cesaro summable, or neither (at finite scale).

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fuzzysum/error.hpp"
#include "fuzzysum/fuzzy_function.hpp"
#include "fuzzysum/fuzzy_number.hpp"
#include "fuzzysum/integration.hpp"
#include "fuzzysum/tauberian.hpp"

namespace fuzzysum {

inline constexpr double default_limit_tol = 0.05;

struct FuzzySeries {
    std::vector<double> t;
    std::vector<FuzzyNumber> value;
};

enum class LimitStatus { converged, diverged, inconclusive };

inline const char* to_string(LimitStatus s) {
    switch (s) {
    case LimitStatus::converged: return "converged";
    case LimitStatus::diverged: return "diverged";
    case LimitStatus::inconclusive: return "inconclusive";
    }
    return "?";
}

struct LimitEstimate {
    LimitStatus status = LimitStatus::inconclusive;
    std::optional<FuzzyNumber> value;  // present iff converged
    double residual = 0.0;             // D between the last two checkpoints
    double scale = 0.0;                // largest t examined
    std::vector<double> checkpoints;   // ascending
    std::vector<double> increments;    // D between consecutive checkpoints
};

struct LimitOptions {
    double divergence_threshold = 1e6;
    // Increment growth only counts as divergence when the magnitude at the last
    // checkpoint exceeds this multiple of every earlier checkpoint magnitude.
    double growth_factor = 1.5;
};

// Checkpoints are t_last, t_last/2, t_last/4, ... (snapped to the sample at or
// below). converged: last increment <= tol and not larger than the one before.
// diverged: magnitude past the threshold and non-decreasing over the last three
// checkpoints, or increments growing across the last three checkpoints while
// the magnitude sets a new record by growth_factor. Anything else (bounded
// oscillation in particular) is inconclusive.
inline LimitEstimate estimate_limit(const FuzzySeries& series, double tol, const LimitOptions& opts = {}) {
    if (series.t.size() != series.value.size()) throw invalid_argument("series arrays differ in length");
    if (series.t.size() < 8) throw invalid_argument("estimate_limit needs at least 8 samples");
    if (!(tol > 0)) throw invalid_argument("estimate_limit: tol must be positive");
    for (std::size_t i = 1; i < series.t.size(); ++i)
        if (!(series.t[i] > series.t[i - 1])) throw invalid_argument("series t must be strictly increasing");

    std::vector<std::size_t> idx;
    const auto& t = series.t;
    for (double target = t.back(); target >= t.front(); target /= 2) {
        const auto it = std::upper_bound(t.begin(), t.end(), target);
        const std::size_t i = static_cast<std::size_t>(it - t.begin()) - 1;
        if (idx.empty() || idx.back() != i) idx.push_back(i);
        if (!(target > 0)) break;
    }
    std::reverse(idx.begin(), idx.end());

    LimitEstimate est;
    est.scale = t.back();
    std::vector<double> norms;
    for (std::size_t i : idx) {
        est.checkpoints.push_back(t[i]);
        norms.push_back(sup_norm(series.value[i]));
    }
    for (std::size_t k = 0; k + 1 < idx.size(); ++k)
        est.increments.push_back(metric_d(series.value[idx[k]], series.value[idx[k + 1]]));
    if (est.increments.empty()) return est;
    est.residual = est.increments.back();
    if (idx.size() < 3) return est;

    const std::size_t m = idx.size();
    const auto& d = est.increments;
    const double d_last = d[m - 2];
    const double d_prev = d[m - 3];
    if (d_last <= tol && d_last <= d_prev) {
        est.status = LimitStatus::converged;
        est.value = series.value.back();
        return est;
    }
    const bool norm_nondecreasing = norms[m - 3] <= norms[m - 2] && norms[m - 2] <= norms[m - 1];
    const double earlier_max = *std::max_element(norms.begin(), norms.end() - 1);
    const bool record_growth = norms[m - 1] >= opts.growth_factor * earlier_max && norms[m - 1] > 0;
    if ((norms[m - 1] > opts.divergence_threshold && norm_nondecreasing) ||
        (d_prev < d_last && record_growth))
        est.status = LimitStatus::diverged;
    return est;
}

inline FuzzySeries s_series(const IntegralTrace& trace) {
    FuzzySeries out;
    for (std::size_t i = 1; i < trace.size(); ++i) {
        out.t.push_back(trace.t(i));
        out.value.push_back(trace.s(i));
    }
    return out;
}

inline FuzzySeries sigma_series(const IntegralTrace& trace) {
    FuzzySeries out;
    for (std::size_t i = 1; i < trace.size(); ++i) {
        out.t.push_back(trace.t(i));
        out.value.push_back(*trace.sigma(i));
    }
    return out;
}

// (1/t) int_0^t f(x) dx at every positive sample: the Cesaro mean of f itself.
inline FuzzySeries cesaro_mean_of_function(const IntegralTrace& trace) {
    FuzzySeries out;
    for (std::size_t i = 1; i < trace.size(); ++i) {
        out.t.push_back(trace.t(i));
        out.value.push_back(detail::divide(trace.s(i), trace.t(i)));
    }
    return out;
}

inline FuzzySeries cesaro_mean_of_function(const FuzzyFunction& f, const SamplingPlan& plan) {
    return cesaro_mean_of_function(build_trace(f, plan));
}

struct AnalysisReport {
    std::string function;
    SamplingPlan plan;
    std::size_t grid_size = 0;
    double tol = default_limit_tol;
    LimitEstimate integral_limit;
    LimitEstimate cesaro_limit;
    std::vector<CheckerOutcome> checkers;
};

namespace detail {

// Convergent integrals must be Cesaro summable to the same value.
inline CheckerOutcome regularity_record(const LimitEstimate& s, const LimitEstimate& sigma, double tol) {
    CheckerOutcome out;
    out.name = "regularity";
    out.params.eps = 2 * tol;
    out.params.range_hi = s.scale;
    if (s.status != LimitStatus::converged || sigma.status != LimitStatus::converged) {
        out.notes.push_back("not applicable: the integral limit and the Cesaro limit did not both converge");
        return out;
    }
    const FuzzyNumber& a = *s.value;
    const FuzzyNumber& b = *sigma.value;
    double worst = 0.0;
    std::size_t level = 0;
    bool lower = true;
    auto consider = [&](double diff, std::size_t k, bool is_lower) {
        if (diff > worst) {
            worst = diff;
            level = k;
            lower = is_lower;
        }
    };
    for (std::size_t k = 0; k < a.size(); ++k) {
        consider(std::abs(a.lower(k) - b.lower(k)), k, true);
        consider(std::abs(a.upper(k) - b.upper(k)), k, false);
    }
    out.notes.push_back("D(integral limit, Cesaro limit) = " + format_double(worst));
    if (worst > 2 * tol) {
        out.outcome = CheckResult::counterexample;
        out.witness = Witness{s.scale, std::nullopt, a.grid()[level], lower ? "lower" : "upper", 2 * tol - worst};
    }
    return out;
}

}  // namespace detail

inline AnalysisReport classify(const IntegralTrace& trace, double tol, const LimitOptions& opts = {}) {
    AnalysisReport r;
    r.function = trace.f_name();
    r.plan = trace.plan();
    r.grid_size = trace.grid().size();
    r.tol = tol;
    r.integral_limit = estimate_limit(s_series(trace), tol, opts);
    r.cesaro_limit = estimate_limit(sigma_series(trace), tol, opts);
    r.checkers.push_back(detail::regularity_record(r.integral_limit, r.cesaro_limit, tol));
    return r;
}

inline AnalysisReport classify(const FuzzyFunction& f, const SamplingPlan& plan, double tol,
                               const LimitOptions& opts = {}) {
    return classify(build_trace(f, plan), tol, opts);
}

}  // namespace fuzzysum
