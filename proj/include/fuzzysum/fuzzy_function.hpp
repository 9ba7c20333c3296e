#pragma once

// Fuzzy-number-valued functions f: [x0, inf) -> E^1 given by their endpoint
// functions f^-_alpha(x), f^+_alpha(x), and a catalog of built-in examples.

#include <charconv>
#include <cmath>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fuzzysum/error.hpp"
#include "fuzzysum/expr.hpp"
#include "fuzzysum/fuzzy_number.hpp"

namespace fuzzysum {

// (x, alpha) -> endpoint value. Must be pure and reentrant.
using EndpointFn = std::function<double(double, double)>;

class FuzzyFunction {
public:
    FuzzyFunction(std::string name, AlphaGrid grid, EndpointFn lower, EndpointFn upper,
                  double domain_start = 0.0)
        : name_(std::move(name)), grid_(std::move(grid)), lower_(std::move(lower)),
          upper_(std::move(upper)), domain_start_(domain_start) {}

    const std::string& name() const noexcept { return name_; }
    const AlphaGrid& grid() const noexcept { return grid_; }
    double domain_start() const noexcept { return domain_start_; }

    double lower(double x, double alpha) const { return lower_(x, alpha); }
    double upper(double x, double alpha) const { return upper_(x, alpha); }

    // Fills lo/up with the endpoints at every grid level and checks that they
    // form a fuzzy number. Throws InvariantViolation naming x and alpha.
    void eval_into(double x, std::span<double> lo, std::span<double> up) const {
        if (!(x >= domain_start_))
            throw invalid_argument(name_ + ": x=" + std::to_string(x) + " is outside the domain");
        const std::size_t n = grid_.size();
        for (std::size_t i = 0; i < n; ++i) {
            lo[i] = lower_(x, grid_[i]);
            up[i] = upper_(x, grid_[i]);
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (!std::isfinite(lo[i]) || !std::isfinite(up[i]))
                throw InvariantViolation(x, grid_[i], "non-finite endpoint");
            if (lo[i] > up[i]) throw InvariantViolation(x, grid_[i], "lower > upper");
            if (i > 0 && lo[i] < lo[i - 1])
                throw InvariantViolation(x, grid_[i], "lower endpoint decreasing in alpha");
            if (i > 0 && up[i] > up[i - 1])
                throw InvariantViolation(x, grid_[i], "upper endpoint increasing in alpha");
        }
    }

private:
    std::string name_;
    AlphaGrid grid_;
    EndpointFn lower_;
    EndpointFn upper_;
    double domain_start_;
};

inline FuzzyNumber eval_at(const FuzzyFunction& f, double x) {
    const std::size_t n = f.grid().size();
    std::vector<double> lo(n), up(n);
    f.eval_into(x, lo, up);
    return FuzzyNumber(f.grid(), std::move(lo), std::move(up));
}

// Evaluators call Expr::eval; validity is checked wherever the function is sampled.
inline FuzzyFunction from_exprs(const Expr& lower, const Expr& upper, const AlphaGrid& grid,
                                std::string name = "expr") {
    return FuzzyFunction(
        std::move(name), grid, [lower](double x, double a) { return lower.eval(x, a); },
        [upper](double x, double a) { return upper.eval(x, a); });
}

inline FuzzyFunction from_exprs(std::string_view lower, std::string_view upper,
                                const AlphaGrid& grid) {
    return from_exprs(parse_expr(lower), parse_expr(upper), grid,
                      "[" + std::string(lower) + ", " + std::string(upper) + "]");
}

// Endpoint formulas in x and alpha; for closed forms of s and sigma, x stands for t.
struct EndpointForms {
    std::string lower;
    std::string upper;
};

struct CatalogEntry {
    std::string name;
    EndpointForms exprs;
    std::string notes;
    std::optional<EndpointForms> closed_form_s;
    std::optional<EndpointForms> closed_form_sigma;
    EndpointFn lower;
    EndpointFn upper;

    FuzzyFunction function(const AlphaGrid& grid) const {
        return FuzzyFunction(name, grid, lower, upper);
    }
};

namespace detail {

inline CatalogEntry crisp_constant_entry(double c) {
    const std::string cs = format_double(c);
    return {"crisp-constant(" + cs + ")",
            {cs, cs},
            "crisp constant integrand; s(t) = c t diverges unless c = 0",
            EndpointForms{cs + "*x", cs + "*x"},
            EndpointForms{cs + "*x/2", cs + "*x/2"},
            [c](double, double) { return c; },
            [c](double, double) { return c; }};
}

}  // namespace detail

inline std::vector<CatalogEntry> catalog() {
    std::vector<CatalogEntry> entries;
    entries.push_back(
        {"paper-example-1",
         {"cos(x) + alpha/(x+1)^2", "cos(x) + (2-alpha)/(x+1)^2"},
         "divergent integral, Cesaro summable to the triangular number [alpha, 2-alpha]",
         EndpointForms{"sin(x) + alpha*(1 - 1/(x+1))", "sin(x) + (2-alpha)*(1 - 1/(x+1))"},
         EndpointForms{"-cos(x)/x + 1/x + alpha*(1 - ln(x+1)/x)",
                       "-cos(x)/x + 1/x + (2-alpha)*(1 - ln(x+1)/x)"},
         [](double x, double a) { return std::cos(x) + a / ((x + 1) * (x + 1)); },
         [](double x, double a) { return std::cos(x) + (2 - a) / ((x + 1) * (x + 1)); }});
    entries.push_back(
        {"paper-example-2",
         {"(2 - sin(x))*alpha", "(2 - sin(x))*(2-alpha)"},
         "nonnegative integrand, x f(x) >= 0-bar; s(t) grows like 2t",
         EndpointForms{"alpha*(2*x + cos(x) - 1)", "(2-alpha)*(2*x + cos(x) - 1)"},
         EndpointForms{"alpha*(x + sin(x)/x - 1)", "(2-alpha)*(x + sin(x)/x - 1)"},
         [](double x, double a) { return (2 - std::sin(x)) * a; },
         [](double x, double a) { return (2 - std::sin(x)) * (2 - a); }});
    entries.push_back(
        {"convergent-1",
         {"alpha/(1+x)^2", "(2-alpha)/(1+x)^2"},
         "convergent integral with limit [alpha, 2-alpha]",
         EndpointForms{"alpha*(1 - 1/(1+x))", "(2-alpha)*(1 - 1/(1+x))"},
         EndpointForms{"alpha*(1 - ln(1+x)/x)", "(2-alpha)*(1 - ln(1+x)/x)"},
         [](double x, double a) { return a / ((1 + x) * (1 + x)); },
         [](double x, double a) { return (2 - a) / ((1 + x) * (1 + x)); }});
    entries.push_back(
        {"mean-convergent",
         {"alpha + 1/(1+x)", "2 - alpha + 1/(1+x)"},
         "f(x) tends to [alpha, 2-alpha]; its own Cesaro mean has the same limit",
         EndpointForms{"alpha*x + ln(1+x)", "(2-alpha)*x + ln(1+x)"},
         EndpointForms{"alpha*x/2 + ((1+x)*ln(1+x) - x)/x",
                       "(2-alpha)*x/2 + ((1+x)*ln(1+x) - x)/x"},
         [](double x, double a) { return a + 1 / (1 + x); },
         [](double x, double a) { return 2 - a + 1 / (1 + x); }});
    entries.push_back(
        {"landau-negative",
         {"-1/(1+x)", "-1/(1+x)"},
         "crisp, x f(x) >= -1-bar; s(t) = -ln(1+t) is slowly decreasing",
         EndpointForms{"-ln(1+x)", "-ln(1+x)"},
         EndpointForms{"-((1+x)*ln(1+x) - x)/x", "-((1+x)*ln(1+x) - x)/x"},
         [](double x, double) { return -1 / (1 + x); },
         [](double x, double) { return -1 / (1 + x); }});
    entries.push_back(detail::crisp_constant_entry(0.0));
    entries.push_back(detail::crisp_constant_entry(1.0));
    return entries;
}

// Looks up a built-in by name; "crisp-constant(<c>)" accepts any finite c.
inline std::optional<CatalogEntry> find_catalog_entry(std::string_view name) {
    for (auto& e : catalog())
        if (e.name == name) return e;
    constexpr std::string_view prefix = "crisp-constant(";
    if (name.size() > prefix.size() + 1 && name.substr(0, prefix.size()) == prefix &&
        name.back() == ')') {
        const std::string_view arg = name.substr(prefix.size(), name.size() - prefix.size() - 1);
        double c = 0.0;
        auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), c);
        if (ec == std::errc() && ptr == arg.data() + arg.size() && std::isfinite(c))
            return detail::crisp_constant_entry(c);
    }
    return std::nullopt;
}

inline FuzzyFunction catalog_function(std::string_view name, const AlphaGrid& grid) {
    auto e = find_catalog_entry(name);
    if (!e) throw invalid_argument("unknown catalog function '" + std::string(name) + "'");
    return e->function(grid);
}

}  // namespace fuzzysum
