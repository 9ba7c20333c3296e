#pragma once

// JSON and CSV views of the library's values. Doubles are written in their
// shortest round-trip form, so identical inputs give byte-identical output.

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "fuzzysum/error.hpp"
#include "fuzzysum/expr.hpp"
#include "fuzzysum/fuzzy_function.hpp"
#include "fuzzysum/fuzzy_number.hpp"
#include "fuzzysum/integration.hpp"
#include "fuzzysum/summability.hpp"
#include "fuzzysum/tauberian.hpp"

namespace fuzzysum {

using json = nlohmann::ordered_json;

inline json to_json(const FuzzyNumber& u) {
    json j;
    j["alpha"] = std::vector<double>(u.grid().levels().begin(), u.grid().levels().end());
    j["lower"] = std::vector<double>(u.lower().begin(), u.lower().end());
    j["upper"] = std::vector<double>(u.upper().begin(), u.upper().end());
    return j;
}

// {alpha, lower, upper} with index-aligned arrays. Shape errors are invalid input;
// the fuzzy-number invariants are left to validate().
inline FuzzyNumber fuzzy_number_from_json(const json& j) {
    try {
        auto alpha = j.at("alpha").get<std::vector<double>>();
        auto lower = j.at("lower").get<std::vector<double>>();
        auto upper = j.at("upper").get<std::vector<double>>();
        return FuzzyNumber(AlphaGrid(std::move(alpha)), std::move(lower), std::move(upper));
    } catch (const json::exception& e) {
        throw invalid_argument(std::string("malformed fuzzy number JSON: ") + e.what());
    }
}

inline json to_json(const SamplingPlan& p) {
    return json{{"t_max", p.t_max}, {"n_steps", p.n_steps}, {"quad_tol", p.quad_tol}};
}

inline json to_json(const LimitEstimate& e) {
    json j;
    j["status"] = to_string(e.status);
    if (e.value) j["value"] = to_json(*e.value);
    j["residual"] = e.residual;
    j["scale"] = e.scale;
    j["checkpoints"] = e.checkpoints;
    j["increments"] = e.increments;
    return j;
}

inline const char* to_string(CheckResult r) {
    return r == CheckResult::no_counterexample ? "no-counterexample" : "counterexample";
}

inline json to_json(const CheckerOutcome& c) {
    json params;
    params["eps"] = c.params.eps;
    if (c.params.lambda) params["lambda"] = *c.params.lambda;
    if (c.params.ell) params["ell"] = *c.params.ell;
    params["t0"] = c.params.t0;
    params["range"] = {c.params.range_lo, c.params.range_hi};
    params["stride"] = c.params.stride;

    json j;
    j["name"] = c.name;
    j["params"] = params;
    j["outcome"] = to_string(c.outcome);
    if (c.witness) {
        json w;
        w["t"] = c.witness->t;
        if (c.witness->x) w["x"] = *c.witness->x;
        w["alpha"] = c.witness->alpha;
        w["endpoint"] = c.witness->endpoint;
        w["margin"] = c.witness->margin;
        j["witness"] = w;
    }
    j["notes"] = c.notes;
    if (c.boundary) j["boundary"] = true;
    if (c.budget_h) j["H"] = *c.budget_h;
    if (c.budget_h) j["implied_lambda"] = c.implied_lambda ? json(*c.implied_lambda) : json(nullptr);
    return j;
}

inline json to_json(const AnalysisReport& r) {
    json plan = to_json(r.plan);
    plan["grid"] = r.grid_size;
    plan["tol"] = r.tol;
    json j;
    j["function"] = r.function;
    j["plan"] = plan;
    j["integral_limit"] = to_json(r.integral_limit);
    j["cesaro_limit"] = to_json(r.cesaro_limit);
    json checkers = json::array();
    for (const auto& c : r.checkers) checkers.push_back(to_json(c));
    j["checkers"] = checkers;
    return j;
}

inline json catalog_manifest() {
    json list = json::array();
    for (const auto& e : catalog()) {
        json j;
        j["name"] = e.name;
        j["lower_expr"] = e.exprs.lower;
        j["upper_expr"] = e.exprs.upper;
        j["notes"] = e.notes;
        if (e.closed_form_s) j["closed_form_s"] = {{"lower", e.closed_form_s->lower}, {"upper", e.closed_form_s->upper}};
        if (e.closed_form_sigma)
            j["closed_form_sigma"] = {{"lower", e.closed_form_sigma->lower}, {"upper", e.closed_form_sigma->upper}};
        list.push_back(j);
    }
    return list;
}

// One row per (t, alpha). sigma is left empty at t = 0 where it is undefined.
inline void write_trace_csv(std::ostream& os, const IntegralTrace& trace) {
    os << "t,alpha,s_lower,s_upper,sigma_lower,sigma_upper\n";
    const AlphaGrid& grid = trace.grid();
    std::string line;
    for (std::size_t i = 0; i < trace.size(); ++i) {
        const std::string t = detail::format_double(trace.t(i));
        const FuzzyNumber& s = trace.s(i);
        const auto& sig = trace.sigma(i);
        for (std::size_t k = 0; k < grid.size(); ++k) {
            line = t;
            line += ',';
            line += detail::format_double(grid[k]);
            line += ',';
            line += detail::format_double(s.lower(k));
            line += ',';
            line += detail::format_double(s.upper(k));
            line += ',';
            if (sig) line += detail::format_double(sig->lower(k));
            line += ',';
            if (sig) line += detail::format_double(sig->upper(k));
            line += '\n';
            os << line;
        }
    }
}

inline json trace_to_json(const IntegralTrace& trace) {
    json j;
    j["function"] = trace.f_name();
    j["plan"] = to_json(trace.plan());
    j["alpha"] = std::vector<double>(trace.grid().levels().begin(), trace.grid().levels().end());
    json samples = json::array();
    for (std::size_t i = 0; i < trace.size(); ++i) {
        const FuzzyNumber& s = trace.s(i);
        json row;
        row["t"] = trace.t(i);
        row["s"] = {{"lower", std::vector<double>(s.lower().begin(), s.lower().end())},
                    {"upper", std::vector<double>(s.upper().begin(), s.upper().end())}};
        if (const auto& sig = trace.sigma(i))
            row["sigma"] = {{"lower", std::vector<double>(sig->lower().begin(), sig->lower().end())},
                            {"upper", std::vector<double>(sig->upper().begin(), sig->upper().end())}};
        else
            row["sigma"] = nullptr;
        samples.push_back(std::move(row));
    }
    j["samples"] = std::move(samples);
    return j;
}

}  // namespace fuzzysum
