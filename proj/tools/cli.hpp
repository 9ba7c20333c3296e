#pragma once

// fuzzysum command-line front end.
//
//   fuzzysum analyze  (--catalog NAME | --lower EXPR --upper EXPR) [globals]
//   fuzzysum check    (selector) [--slow-decrease] [--backward-slow-decrease]
//                     [--star] [--doublestar] [--landau] [checker params] [globals]
//   fuzzysum export   (selector) --out PATH [globals]
//   fuzzysum catalog  [--out PATH]
//
// Globals: --grid N, --t-max, --n-steps, --quad-tol, --tol,
//          --format json|csv|both, --out PATH
//
// Exit codes: 0 ok, 2 configuration/validation error, 3 numeric failure,
// 4 I/O error. Checker verdicts and limit statuses never change the exit code.

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "fuzzysum/fuzzysum.hpp"

namespace fuzzysum::cli {

enum ExitCode : int { ok = 0, config_error = 2, numeric_error = 3, io_error = 4 };

struct RunConfig {
    std::string catalog_name;
    std::string lower_expr;
    std::string upper_expr;
    std::size_t grid = AlphaGrid::default_size;
    SamplingPlan plan;
    double tol = default_limit_tol;
    std::string format = "json";
    std::string out;

    // checker selection and parameters
    bool slow_decrease = false;
    bool backward_slow_decrease = false;
    bool star = false;
    bool doublestar = false;
    bool landau = false;
    double eps = 0.5;
    double lambda = 1.5;
    double backward_lambda = 0.7;
    double star_lambda = 2.0;
    double ell = 0.5;
    double t0 = 0.0;
    double u0 = 0.0;
    std::size_t stride = 10;
};

namespace detail {

inline void require(bool cond, const std::string& what) {
    if (!cond) throw invalid_argument(what);
}

inline void validate_common(const RunConfig& c, bool needs_function) {
    if (needs_function) {
        const bool by_name = !c.catalog_name.empty();
        const bool by_expr = !c.lower_expr.empty() || !c.upper_expr.empty();
        require(by_name != by_expr, "select a function with either --catalog or --lower/--upper");
        require(by_name || (!c.lower_expr.empty() && !c.upper_expr.empty()),
                "--lower and --upper must be given together");
    }
    require(c.grid >= 2, "--grid must be at least 2");
    c.plan.check();
    require(c.tol > 0, "--tol must be positive");
    require(c.format == "json" || c.format == "csv" || c.format == "both",
            "--format must be json, csv or both");
    require(c.format != "both" || !c.out.empty(), "--format both requires --out");
}

inline void validate_checks(const RunConfig& c) {
    require(c.eps > 0 && std::isfinite(c.eps), "--eps must be positive");
    require(c.lambda > 1, "--lambda must exceed 1");
    require(c.star_lambda > 1, "--star-lambda must exceed 1");
    require(c.backward_lambda > 0 && c.backward_lambda < 1, "--backward-lambda must lie in (0, 1)");
    require(c.ell > 0 && c.ell < 1, "--ell must lie in (0, 1)");
    require(c.t0 >= 0, "--t0 must be nonnegative");
    require(c.stride >= 1, "--stride must be positive");
    require(std::isfinite(c.u0), "--u0 must be finite");
}

inline FuzzyFunction select_function(const RunConfig& c) {
    const AlphaGrid grid = AlphaGrid::uniform(c.grid);
    if (!c.catalog_name.empty()) return catalog_function(c.catalog_name, grid);
    return from_exprs(c.lower_expr, c.upper_expr, grid);
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw Error(ErrorCategory::io, "cannot open '" + path + "' for writing");
    os << content;
    os.flush();
    if (!os) throw Error(ErrorCategory::io, "failed writing '" + path + "'");
}

inline std::string csv_number(const std::optional<double>& v) {
    return v ? fuzzysum::detail::format_double(*v) : std::string();
}

inline std::string checkers_csv(const std::vector<CheckerOutcome>& checks) {
    std::ostringstream os;
    os << "name,outcome,eps,lambda,ell,t0,range_lo,range_hi,stride,witness_t,witness_x,witness_alpha,"
          "witness_endpoint,witness_margin\n";
    for (const auto& c : checks) {
        os << c.name << ',' << to_string(c.outcome) << ',' << csv_number(c.params.eps) << ','
           << csv_number(c.params.lambda) << ',' << csv_number(c.params.ell) << ','
           << csv_number(c.params.t0) << ',' << csv_number(c.params.range_lo) << ','
           << csv_number(c.params.range_hi) << ',' << c.params.stride << ',';
        if (c.witness)
            os << csv_number(c.witness->t) << ',' << csv_number(c.witness->x) << ','
               << csv_number(c.witness->alpha) << ',' << c.witness->endpoint << ','
               << csv_number(c.witness->margin);
        else
            os << ",,,,";
        os << '\n';
    }
    return os.str();
}

inline std::string report_csv(const AnalysisReport& r) {
    std::ostringstream os;
    os << "quantity,status,residual,scale\n";
    for (const auto* e : {&r.integral_limit, &r.cesaro_limit})
        os << (e == &r.integral_limit ? "integral" : "cesaro") << ',' << to_string(e->status) << ','
           << fuzzysum::detail::format_double(e->residual) << ','
           << fuzzysum::detail::format_double(e->scale) << '\n';
    return os.str();
}

// Machine output goes to --out (or stdout); the human summary goes to stdout
// when a file was written and to stderr otherwise.
inline void emit(const RunConfig& c, const std::string& json_text, const std::string& csv_text,
                 const std::string& summary, std::ostream& out, std::ostream& err) {
    if (c.out.empty()) {
        out << (c.format == "csv" ? csv_text : json_text);
        err << summary;
        return;
    }
    if (c.format == "both") {
        write_file(c.out + ".json", json_text);
        write_file(c.out + ".csv", csv_text);
    } else {
        write_file(c.out, c.format == "csv" ? csv_text : json_text);
    }
    out << summary;
}

inline std::string endpoints_at(const FuzzyNumber& u, std::size_t k) {
    return "[" + fuzzysum::detail::format_double(u.lower(k)) + ", " +
           fuzzysum::detail::format_double(u.upper(k)) + "]";
}

inline std::string limit_line(const char* label, const LimitEstimate& e) {
    std::ostringstream os;
    os << label << to_string(e.status) << "  residual=" << fuzzysum::detail::format_double(e.residual)
       << "  scale=" << fuzzysum::detail::format_double(e.scale);
    if (e.value)
        os << "  alpha=0 " << endpoints_at(*e.value, 0) << "  alpha=1 "
           << endpoints_at(*e.value, e.value->size() - 1);
    os << '\n';
    return os.str();
}

inline std::string checker_line(const CheckerOutcome& c) {
    std::ostringstream os;
    os << "  " << c.name << ": " << to_string(c.outcome);
    if (c.witness) {
        os << "  witness t=" << fuzzysum::detail::format_double(c.witness->t);
        if (c.witness->x) os << " x=" << fuzzysum::detail::format_double(*c.witness->x);
        os << " alpha=" << fuzzysum::detail::format_double(c.witness->alpha) << " " << c.witness->endpoint
           << " margin=" << fuzzysum::detail::format_double(c.witness->margin);
    }
    if (c.boundary) os << "  [boundary]";
    os << '\n';
    return os.str();
}

inline int cmd_analyze(const RunConfig& c, std::ostream& out, std::ostream& err) {
    validate_common(c, true);
    const AnalysisReport r = classify(select_function(c), c.plan, c.tol);
    std::ostringstream summary;
    summary << "function        " << r.function << '\n'
            << "plan            t_max=" << fuzzysum::detail::format_double(r.plan.t_max)
            << " n_steps=" << r.plan.n_steps << " quad_tol=" << fuzzysum::detail::format_double(r.plan.quad_tol)
            << " grid=" << r.grid_size << " tol=" << fuzzysum::detail::format_double(r.tol) << '\n'
            << limit_line("integral limit  ", r.integral_limit) << limit_line("cesaro limit    ", r.cesaro_limit);
    for (const auto& ch : r.checkers) summary << checker_line(ch);
    emit(c, to_json(r).dump(2) + "\n", report_csv(r), summary.str(), out, err);
    return ok;
}

inline int cmd_check(const RunConfig& c, std::ostream& out, std::ostream& err) {
    validate_common(c, true);
    validate_checks(c);
    const FuzzyFunction f = select_function(c);
    const bool all = !(c.slow_decrease || c.backward_slow_decrease || c.star || c.doublestar || c.landau);
    // Landau preconditions are checked before the trace is built.
    const FuzzyNumber u = make_crisp(c.u0, f.grid());
    if (all || c.landau) {
        const auto neg = classify_negativity(u);
        require(neg.strict || neg.zero, "--u0 must be negative (or 0 for the boundary case)");
    }
    const IntegralTrace trace = build_trace(f, c.plan);
    const ScanOptions scan{c.stride};
    std::vector<CheckerOutcome> results;
    if (all || c.star) results.push_back(check_condition_star(trace, c.eps, c.star_lambda, c.t0, scan));
    if (all || c.doublestar) results.push_back(check_condition_doublestar(trace, c.eps, c.ell, c.t0, scan));
    if (all || c.slow_decrease) results.push_back(check_slow_decrease(trace, c.eps, c.lambda, c.t0, scan));
    if (all || c.backward_slow_decrease)
        results.push_back(check_backward_slow_decrease(trace, c.eps, c.backward_lambda, c.t0, scan));
    if (all || c.landau) results.push_back(check_landau(f, u, c.t0, c.plan, c.eps));

    json j;
    j["function"] = f.name();
    json plan = to_json(c.plan);
    plan["grid"] = c.grid;
    j["plan"] = plan;
    json arr = json::array();
    for (const auto& r : results) arr.push_back(to_json(r));
    j["checkers"] = arr;

    std::ostringstream summary;
    summary << "function " << f.name() << '\n';
    for (const auto& r : results) summary << checker_line(r);
    emit(c, j.dump(2) + "\n", checkers_csv(results), summary.str(), out, err);
    return ok;
}

inline int cmd_export(const RunConfig& c, std::ostream& out, std::ostream&) {
    validate_common(c, true);
    require(!c.out.empty(), "export requires --out");
    const IntegralTrace trace = build_trace(select_function(c), c.plan);
    auto csv = [&] {
        std::ostringstream os;
        write_trace_csv(os, trace);
        return os.str();
    };
    if (c.format == "csv") write_file(c.out, csv());
    else if (c.format == "json") write_file(c.out, trace_to_json(trace).dump() + "\n");
    else {
        write_file(c.out + ".csv", csv());
        write_file(c.out + ".json", trace_to_json(trace).dump() + "\n");
    }
    out << "wrote " << trace.size() << " samples x " << trace.grid().size() << " levels of " << trace.f_name()
        << '\n';
    return ok;
}

inline int cmd_catalog(const RunConfig& c, std::ostream& out, std::ostream&) {
    const std::string text = catalog_manifest().dump(2) + "\n";
    if (c.out.empty()) out << text;
    else write_file(c.out, text);
    return ok;
}

inline int exit_code_for(const Error& e) {
    switch (e.category()) {
    case ErrorCategory::invalid_input: return config_error;
    case ErrorCategory::numeric: return numeric_error;
    case ErrorCategory::io: return io_error;
    }
    return numeric_error;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig c;
    CLI::App app{"Cesaro summability of improper integrals of fuzzy-number-valued functions", "fuzzysum"};
    app.require_subcommand(1);
    app.fallthrough();

    app.add_option("--grid", c.grid, "number of alpha levels (uniform on [0,1])")->capture_default_str();
    app.add_option("--t-max", c.plan.t_max, "largest sampled t")->capture_default_str();
    app.add_option("--n-steps", c.plan.n_steps, "number of uniform t steps")->capture_default_str();
    app.add_option("--quad-tol", c.plan.quad_tol, "absolute quadrature tolerance per step")->capture_default_str();
    app.add_option("--tol", c.tol, "limit tolerance in the metric D")->capture_default_str();
    app.add_option("--format", c.format, "json, csv or both")->capture_default_str();
    app.add_option("--out", c.out, "output path");

    auto add_selector = [&](CLI::App* sub) {
        auto* cat = sub->add_option("--catalog", c.catalog_name, "built-in function name");
        auto* lo = sub->add_option("--lower", c.lower_expr, "lower endpoint f^-(x, alpha)");
        auto* up = sub->add_option("--upper", c.upper_expr, "upper endpoint f^+(x, alpha)");
        cat->excludes(lo)->excludes(up);
    };

    auto* analyze = app.add_subcommand("analyze", "classify the integral and its Cesaro means");
    add_selector(analyze);

    auto* check = app.add_subcommand("check", "run Tauberian condition checkers (all when none is named)");
    add_selector(check);
    check->add_flag("--slow-decrease", c.slow_decrease);
    check->add_flag("--backward-slow-decrease", c.backward_slow_decrease);
    check->add_flag("--star", c.star, "forward averaged condition");
    check->add_flag("--doublestar", c.doublestar, "backward averaged condition");
    check->add_flag("--landau", c.landau, "x f(x) >= u-bar with u = --u0");
    check->add_option("--eps", c.eps)->capture_default_str();
    check->add_option("--lambda", c.lambda, "slow-decrease window factor (> 1)")->capture_default_str();
    check->add_option("--star-lambda", c.star_lambda, "forward averaging factor (> 1)")->capture_default_str();
    check->add_option("--backward-lambda", c.backward_lambda, "backward window factor in (0,1)")->capture_default_str();
    check->add_option("--ell", c.ell, "backward averaging factor in (0,1)")->capture_default_str();
    check->add_option("--t0", c.t0, "scan starts after t0 (x0 for --landau)")->capture_default_str();
    check->add_option("--u0", c.u0, "crisp Landau bound u")->capture_default_str();
    check->add_option("--stride", c.stride, "scan every stride-th sample of t")->capture_default_str();

    auto* exp = app.add_subcommand("export", "write the sampled s and sigma trace");
    add_selector(exp);
    app.add_subcommand("catalog", "list built-in functions as JSON");

    std::vector<const char*> argv{"fuzzysum"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return config_error;
    }

    // export defaults to CSV
    if (exp->parsed() && app.get_option("--format")->count() == 0) c.format = "csv";

    try {
        if (analyze->parsed()) return detail::cmd_analyze(c, out, err);
        if (check->parsed()) return detail::cmd_check(c, out, err);
        if (exp->parsed()) return detail::cmd_export(c, out, err);
        return detail::cmd_catalog(c, out, err);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return detail::exit_code_for(e);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return numeric_error;
    }
}

}  // namespace fuzzysum::cli
