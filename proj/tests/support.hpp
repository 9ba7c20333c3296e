#pragma once

// Generators and oracles shared by the test suites.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "fuzzysum/fuzzysum.hpp"

namespace fuzzysum::support {

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
    std::size_t index(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }
    bool coin() { return index(2) == 1; }

    // Strictly increasing levels with 0 and 1 at the ends.
    AlphaGrid grid() {
        if (coin()) return AlphaGrid::uniform(2 + index(40));
        std::vector<double> inner;
        const std::size_t n = index(20);
        for (std::size_t i = 0; i < n; ++i) inner.push_back(uniform(0.001, 0.999));
        std::sort(inner.begin(), inner.end());
        inner.erase(std::unique(inner.begin(), inner.end()), inner.end());
        std::vector<double> levels{0.0};
        levels.insert(levels.end(), inner.begin(), inner.end());
        levels.push_back(1.0);
        return AlphaGrid(levels);
    }

    // A valid fuzzy number: core [a, b] widened outward as alpha decreases.
    // Some draws are crisp, some have flat stretches, to hit equality edges.
    FuzzyNumber number(const AlphaGrid& g, double spread = 10.0) {
        const std::size_t n = g.size();
        const double c = uniform(-spread, spread);
        if (index(10) == 0) return make_crisp(c, g);
        const double w = coin() ? uniform(0, spread / 4) : 0.0;
        std::vector<double> lo(n), up(n);
        lo[n - 1] = c - w;
        up[n - 1] = c + w;
        for (std::size_t k = n - 1; k-- > 0;) {
            lo[k] = lo[k + 1] - (index(4) == 0 ? 0.0 : uniform(0, spread / n));
            up[k] = up[k + 1] + (index(4) == 0 ? 0.0 : uniform(0, spread / n));
        }
        return FuzzyNumber(g, lo, up);
    }

private:
    std::mt19937_64 rng_;
};

// Independent oracle for D: direct sup over levels of the Hausdorff distance
// between the two alpha-cut intervals.
inline double hausdorff_sup(const FuzzyNumber& u, const FuzzyNumber& v) {
    double d = 0.0;
    for (std::size_t k = 0; k < u.size(); ++k) {
        const double a = std::fabs(u.lower(k) - v.lower(k));
        const double b = std::fabs(u.upper(k) - v.upper(k));
        d = std::max(d, std::max(a, b));
    }
    return d;
}

inline bool near(const FuzzyNumber& u, const FuzzyNumber& v, double tol = 1e-12) {
    if (u.size() != v.size()) return false;
    for (std::size_t k = 0; k < u.size(); ++k)
        if (std::fabs(u.lower(k) - v.lower(k)) > tol || std::fabs(u.upper(k) - v.upper(k)) > tol) return false;
    return true;
}

inline FuzzyNumber from_levels(const AlphaGrid& g, double (*lo)(double), double (*up)(double)) {
    std::vector<double> l(g.size()), u(g.size());
    for (std::size_t k = 0; k < g.size(); ++k) {
        l[k] = lo(g[k]);
        u[k] = up(g[k]);
    }
    return FuzzyNumber(g, l, u);
}

// [alpha, 2 - alpha], the triangular number of both worked examples.
inline FuzzyNumber triangular(const AlphaGrid& g) {
    return from_levels(g, [](double a) { return a; }, [](double a) { return 2 - a; });
}

// Closed forms evaluated directly (no expression parser involved).
inline double ex1_s(double t, double a) { return std::sin(t) + a * (1 - 1 / (t + 1)); }
inline double ex1_sigma(double t, double a) {
    return -std::cos(t) / t + 1 / t + a * (1 - std::log(t + 1) / t);
}
inline double ex2_s(double t, double a) { return a * (2 * t + std::cos(t) - 1); }
inline double conv1_s(double t, double a) { return a * (1 - 1 / (1 + t)); }

}  // namespace fuzzysum::support
