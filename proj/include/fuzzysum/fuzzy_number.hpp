#pragma once

// Fuzzy numbers represented by their alpha-level sets [lower(a), upper(a)] on a
// shared, finite grid of membership levels.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fuzzysum/error.hpp"

namespace fuzzysum {

// Strictly increasing membership levels from 0 to 1. Copies share storage.
class AlphaGrid {
public:
    static constexpr std::size_t default_size = 33;

    explicit AlphaGrid(std::vector<double> levels)
        : levels_(std::make_shared<const std::vector<double>>(std::move(levels))) {
        const auto& l = *levels_;
        if (l.size() < 2) throw invalid_argument("alpha grid needs at least 2 levels");
        if (l.front() != 0.0 || l.back() != 1.0)
            throw invalid_argument("alpha grid must start at 0 and end at 1");
        for (std::size_t i = 1; i < l.size(); ++i)
            if (!(l[i] > l[i - 1]))
                throw invalid_argument("alpha grid must be strictly increasing");
    }

    static AlphaGrid uniform(std::size_t n = default_size) {
        if (n < 2) throw invalid_argument("alpha grid needs at least 2 levels");
        std::vector<double> l(n);
        for (std::size_t i = 0; i < n; ++i)
            l[i] = static_cast<double>(i) / static_cast<double>(n - 1);
        return AlphaGrid(std::move(l));
    }

    std::size_t size() const noexcept { return levels_->size(); }
    double operator[](std::size_t i) const { return (*levels_)[i]; }
    std::span<const double> levels() const noexcept { return *levels_; }

    friend bool operator==(const AlphaGrid& a, const AlphaGrid& b) {
        return a.levels_ == b.levels_ || *a.levels_ == *b.levels_;
    }

private:
    std::shared_ptr<const std::vector<double>> levels_;
};

// Discretized u in E^1: lower[i] = u^-_{alpha_i}, upper[i] = u^+_{alpha_i}.
// Construction only checks shapes; use validate() for the fuzzy-number invariants.
class FuzzyNumber {
public:
    FuzzyNumber(AlphaGrid grid, std::vector<double> lower, std::vector<double> upper)
        : grid_(std::move(grid)), lower_(std::move(lower)), upper_(std::move(upper)) {
        if (lower_.size() != grid_.size() || upper_.size() != grid_.size())
            throw invalid_argument("endpoint arrays must match the alpha grid size");
    }

    const AlphaGrid& grid() const noexcept { return grid_; }
    std::size_t size() const noexcept { return lower_.size(); }
    std::span<const double> lower() const noexcept { return lower_; }
    std::span<const double> upper() const noexcept { return upper_; }
    double lower(std::size_t i) const { return lower_[i]; }
    double upper(std::size_t i) const { return upper_[i]; }

    // Endpoint-array equality; grids must match as well.
    friend bool operator==(const FuzzyNumber& a, const FuzzyNumber& b) {
        return a.grid_ == b.grid_ && a.lower_ == b.lower_ && a.upper_ == b.upper_;
    }

private:
    AlphaGrid grid_;
    std::vector<double> lower_;
    std::vector<double> upper_;
};

namespace detail {

inline void require_same_grid(const FuzzyNumber& u, const FuzzyNumber& v) {
    if (!(u.grid() == v.grid())) throw invalid_argument("alpha grid mismatch");
}

inline void require_finite(double r, const char* what) {
    if (!std::isfinite(r)) throw invalid_argument(std::string(what) + " must be finite");
}

}  // namespace detail

// The crisp number r-bar: every alpha-cut is {r}.
inline FuzzyNumber make_crisp(double r, const AlphaGrid& grid) {
    detail::require_finite(r, "crisp value");
    return FuzzyNumber(grid, std::vector<double>(grid.size(), r),
                       std::vector<double>(grid.size(), r));
}

inline FuzzyNumber add(const FuzzyNumber& u, const FuzzyNumber& v) {
    detail::require_same_grid(u, v);
    const std::size_t n = u.size();
    std::vector<double> lo(n), up(n);
    for (std::size_t i = 0; i < n; ++i) {
        lo[i] = u.lower(i) + v.lower(i);
        up[i] = u.upper(i) + v.upper(i);
    }
    return FuzzyNumber(u.grid(), std::move(lo), std::move(up));
}

// k*[a, b] = [k a, k b] for k >= 0 and [k b, k a] for k < 0.
inline FuzzyNumber scale(double k, const FuzzyNumber& u) {
    detail::require_finite(k, "scale factor");
    const std::size_t n = u.size();
    std::vector<double> lo(n), up(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (k >= 0) {
            lo[i] = k * u.lower(i);
            up[i] = k * u.upper(i);
        } else {
            lo[i] = k * u.upper(i);
            up[i] = k * u.lower(i);
        }
    }
    return FuzzyNumber(u.grid(), std::move(lo), std::move(up));
}

inline FuzzyNumber operator+(const FuzzyNumber& u, const FuzzyNumber& v) { return add(u, v); }
inline FuzzyNumber operator*(double k, const FuzzyNumber& u) { return scale(k, u); }

// u + r-bar, i.e. both endpoints shifted by r.
inline FuzzyNumber shift(const FuzzyNumber& u, double r) {
    return add(u, make_crisp(r, u.grid()));
}

// D(u, v) = sup_alpha max(|u^- - v^-|, |u^+ - v^+|), taken over the grid levels.
inline double metric_d(const FuzzyNumber& u, const FuzzyNumber& v) {
    detail::require_same_grid(u, v);
    double d = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        d = std::max(d, std::abs(u.lower(i) - v.lower(i)));
        d = std::max(d, std::abs(u.upper(i) - v.upper(i)));
    }
    return d;
}

// Partial order: false for incomparable pairs.
inline bool leq(const FuzzyNumber& u, const FuzzyNumber& v) {
    detail::require_same_grid(u, v);
    for (std::size_t i = 0; i < u.size(); ++i)
        if (!(u.lower(i) <= v.lower(i)) || !(u.upper(i) <= v.upper(i))) return false;
    return true;
}

// u <= v + eps-bar
inline bool leq_eps(const FuzzyNumber& u, const FuzzyNumber& v, double eps) {
    if (!(eps >= 0)) throw invalid_argument("eps must be nonnegative");
    return leq(u, shift(v, eps));
}

// Largest |endpoint|, i.e. D(u, 0-bar).
inline double sup_norm(const FuzzyNumber& u) {
    double m = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i)
        m = std::max({m, std::abs(u.lower(i)), std::abs(u.upper(i))});
    return m;
}

struct Violation {
    enum class Kind { non_finite, lower_decreasing, upper_increasing, lower_above_upper };
    Kind kind;
    std::size_t level;  // index into the alpha grid

    std::string describe(const AlphaGrid& grid) const {
        static constexpr const char* names[] = {"non-finite endpoint", "lower endpoint decreasing",
                                                "upper endpoint increasing", "lower > upper"};
        return std::string(names[static_cast<int>(kind)]) + " at alpha=" +
               std::to_string(grid[level]) + " (level " + std::to_string(level) + ")";
    }
};

// First violated invariant in level order, or nullopt when u is a valid fuzzy number.
inline std::optional<Violation> validate(const FuzzyNumber& u) {
    using K = Violation::Kind;
    const std::size_t n = u.size();
    for (std::size_t i = 0; i < n; ++i)
        if (!std::isfinite(u.lower(i)) || !std::isfinite(u.upper(i)))
            return Violation{K::non_finite, i};
    for (std::size_t i = 1; i < n; ++i) {
        if (u.lower(i) < u.lower(i - 1)) return Violation{K::lower_decreasing, i};
        if (u.upper(i) > u.upper(i - 1)) return Violation{K::upper_increasing, i};
    }
    for (std::size_t i = 0; i < n; ++i)
        if (u.lower(i) > u.upper(i)) return Violation{K::lower_above_upper, i};
    return std::nullopt;
}

}  // namespace fuzzysum
