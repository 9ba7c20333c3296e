#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "fuzzysum/fuzzy_number.hpp"
#include "support.hpp"

using namespace fuzzysum;
using fuzzysum::support::Gen;
using fuzzysum::support::hausdorff_sup;
using fuzzysum::support::near;
using fuzzysum::support::triangular;

namespace {

constexpr int kTrials = 1000;

FuzzyNumber constant_levels(const AlphaGrid& g, double lo, double up) {
    return FuzzyNumber(g, std::vector<double>(g.size(), lo), std::vector<double>(g.size(), up));
}

}  // namespace

TEST(AlphaGrid, UniformHasEndpoints) {
    const auto g = AlphaGrid::uniform();
    ASSERT_EQ(g.size(), 33u);
    EXPECT_EQ(g[0], 0.0);
    EXPECT_EQ(g[32], 1.0);
    EXPECT_DOUBLE_EQ(g[16], 0.5);
}

TEST(AlphaGrid, RejectsBadLevels) {
    EXPECT_THROW(AlphaGrid({0.0}), Error);
    EXPECT_THROW(AlphaGrid({0.1, 1.0}), Error);
    EXPECT_THROW(AlphaGrid({0.0, 0.9}), Error);
    EXPECT_THROW(AlphaGrid({0.0, 0.5, 0.5, 1.0}), Error);
    EXPECT_THROW(AlphaGrid::uniform(1), Error);
}

TEST(FuzzyNumber, ShapeMismatchIsRejected) {
    const auto g = AlphaGrid::uniform(3);
    EXPECT_THROW(FuzzyNumber(g, {0, 0}, {0, 0, 0}), Error);
}

TEST(MakeCrisp, AllEndpointsEqual) {
    const auto g = AlphaGrid::uniform();
    for (double r : {0.0, 1.0, -3.5}) {
        const auto u = make_crisp(r, g);
        for (std::size_t k = 0; k < g.size(); ++k) {
            EXPECT_EQ(u.lower(k), r);
            EXPECT_EQ(u.upper(k), r);
        }
        EXPECT_FALSE(validate(u));
    }
    EXPECT_THROW(make_crisp(std::numeric_limits<double>::infinity(), g), Error);
    EXPECT_THROW(make_crisp(std::nan(""), g), Error);
}

TEST(MakeCrisp, RandomValuesValidate) {
    Gen gen(11);
    for (int i = 0; i < kTrials; ++i) EXPECT_FALSE(validate(make_crisp(gen.uniform(-1e6, 1e6), gen.grid())));
}

TEST(Add, Examples) {
    const auto g = AlphaGrid::uniform();
    const auto u = triangular(g);
    EXPECT_EQ(u + make_crisp(0, g), u);
    const auto uu = u + u;
    for (std::size_t k = 0; k < g.size(); ++k) {
        EXPECT_NEAR(uu.lower(k), 2 * g[k], 1e-12);
        EXPECT_NEAR(uu.upper(k), 4 - 2 * g[k], 1e-12);
    }
    EXPECT_EQ(make_crisp(1, g) + make_crisp(2, g), make_crisp(3, g));
    EXPECT_THROW(add(u, make_crisp(0, AlphaGrid::uniform(5))), Error);
}

TEST(Scale, Examples) {
    const auto g = AlphaGrid::uniform();
    const auto u = triangular(g);
    EXPECT_EQ(scale(1, u), u);
    EXPECT_TRUE(near(scale(0, u), make_crisp(0, g)));
    const auto neg = scale(-1, u);
    for (std::size_t k = 0; k < g.size(); ++k) {
        EXPECT_NEAR(neg.lower(k), g[k] - 2, 1e-12);
        EXPECT_NEAR(neg.upper(k), -g[k], 1e-12);
    }
    EXPECT_THROW(scale(std::numeric_limits<double>::infinity(), u), Error);
}

TEST(MetricD, Examples) {
    const auto g = AlphaGrid::uniform();
    const auto u = triangular(g);
    EXPECT_EQ(metric_d(u, u), 0.0);
    EXPECT_EQ(metric_d(make_crisp(0, g), make_crisp(1, g)), 1.0);
    EXPECT_DOUBLE_EQ(metric_d(u, make_crisp(0, g)), 2.0);
}

TEST(Leq, Examples) {
    const auto g = AlphaGrid::uniform();
    EXPECT_TRUE(leq(make_crisp(0, g), make_crisp(1, g)));
    EXPECT_TRUE(leq(triangular(g), triangular(g)));
    const auto u = constant_levels(g, 0, 2);
    const auto v = constant_levels(g, -1, 3);
    EXPECT_FALSE(leq(u, v));
    EXPECT_FALSE(leq(v, u));
}

TEST(LeqEps, Examples) {
    const auto g = AlphaGrid::uniform();
    const auto u = triangular(g);
    EXPECT_TRUE(leq_eps(u, u, 0));
    EXPECT_FALSE(leq_eps(make_crisp(1, g), make_crisp(0, g), 0.5));
    EXPECT_TRUE(leq_eps(make_crisp(1, g), make_crisp(0, g), 1.0));
    EXPECT_THROW(leq_eps(u, u, -1e-9), Error);
}

TEST(Validate, ReportsFirstViolation) {
    const AlphaGrid g({0.0, 1.0});
    EXPECT_FALSE(validate(FuzzyNumber(g, {0, 0}, {0, 0})));

    auto v = validate(FuzzyNumber(g, {0, 0.5}, {0.4, 0.6}));
    ASSERT_TRUE(v);
    EXPECT_EQ(v->kind, Violation::Kind::upper_increasing);
    EXPECT_EQ(v->level, 1u);

    v = validate(FuzzyNumber(g, {0, 1}, {2, 0.5}));
    ASSERT_TRUE(v);
    EXPECT_EQ(v->kind, Violation::Kind::lower_above_upper);
    EXPECT_EQ(v->level, 1u);
    EXPECT_NE(v->describe(g).find("alpha=1"), std::string::npos);

    v = validate(FuzzyNumber(g, {1, 0}, {2, 2}));
    ASSERT_TRUE(v);
    EXPECT_EQ(v->kind, Violation::Kind::lower_decreasing);

    v = validate(FuzzyNumber(g, {0, std::nan("")}, {1, 1}));
    ASSERT_TRUE(v);
    EXPECT_EQ(v->kind, Violation::Kind::non_finite);
}

// ---- properties over random valid numbers ----

TEST(FuzzyNumberProperty, GeneratorProducesValidNumbers) {
    Gen gen(1);
    for (int i = 0; i < kTrials; ++i) {
        const auto g = gen.grid();
        EXPECT_FALSE(validate(gen.number(g)));
    }
}

TEST(FuzzyNumberProperty, MetricAxioms) {
    Gen gen(2);
    for (int i = 0; i < kTrials; ++i) {
        const auto g = gen.grid();
        const auto u = gen.number(g), v = gen.number(g), w = gen.number(g);
        const double uv = metric_d(u, v);
        EXPECT_EQ(uv, hausdorff_sup(u, v));
        EXPECT_EQ(uv, metric_d(v, u));
        EXPECT_GE(uv, 0.0);
        EXPECT_EQ(metric_d(u, u), 0.0);
        EXPECT_LE(metric_d(u, w), uv + metric_d(v, w) + 1e-12);
        EXPECT_EQ(uv == 0.0, u == v);
    }
}

TEST(FuzzyNumberProperty, AbsoluteHomogeneity) {
    Gen gen(3);
    for (int i = 0; i < kTrials; ++i) {
        const auto g = gen.grid();
        const auto u = gen.number(g), v = gen.number(g);
        const double k = gen.uniform(-5, 5);
        const double lhs = metric_d(scale(k, u), scale(k, v));
        const double rhs = std::fabs(k) * metric_d(u, v);
        EXPECT_NEAR(lhs, rhs, 1e-12 * (1 + rhs));
    }
}

TEST(FuzzyNumberProperty, TranslationInvariance) {
    Gen gen(4);
    for (int i = 0; i < kTrials; ++i) {
        const auto g = gen.grid();
        const auto u = gen.number(g), v = gen.number(g), w = gen.number(g);
        EXPECT_NEAR(metric_d(u + v, w + v), metric_d(u, w), 1e-12);
    }
}

TEST(FuzzyNumberProperty, SubadditivityOfSums) {
    Gen gen(5);
    for (int i = 0; i < kTrials; ++i) {
        const auto g = gen.grid();
        const auto u = gen.number(g), v = gen.number(g), w = gen.number(g), z = gen.number(g);
        EXPECT_LE(metric_d(u + v, w + z), metric_d(u, w) + metric_d(v, z) + 1e-12);
    }
}

TEST(FuzzyNumberProperty, DistanceToZeroBounds) {
    Gen gen(6);
    for (int i = 0; i < kTrials; ++i) {
        const auto g = gen.grid();
        const auto u = gen.number(g), v = gen.number(g);
        const auto zero = make_crisp(0, g);
        const double du = metric_d(u, zero), dv = metric_d(v, zero), uv = metric_d(u, v);
        EXPECT_LE(std::fabs(du - dv), uv + 1e-12);
        EXPECT_LE(uv, du + dv + 1e-12);
    }
}

TEST(FuzzyNumberProperty, MetricBallMatchesTwoSidedOrder) {
    Gen gen(7);
    for (int i = 0; i < kTrials; ++i) {
        const auto g = gen.grid();
        const auto u = gen.number(g), v = gen.number(g);
        const double d = metric_d(u, v);
        // Keep clear of the boundary where rounding in v + eps decides the answer.
        double eps = gen.uniform(0, 2 * d + 1);
        if (std::fabs(eps - d) <= 1e-9 * (1 + d)) continue;
        const bool ball = d <= eps;
        const bool order = leq_eps(u, v, eps) && leq_eps(v, u, eps);
        EXPECT_EQ(ball, order) << "d=" << d << " eps=" << eps;
        // u - eps <= v <= u + eps, written with shifts
        EXPECT_EQ(ball, leq(shift(u, -eps), v) && leq(v, shift(u, eps)));
    }
}

TEST(FuzzyNumberProperty, OrderTransitivity) {
    Gen gen(8);
    for (int i = 0; i < kTrials; ++i) {
        const auto g = gen.grid();
        const auto u = gen.number(g);
        // Build v >= u and w >= v by adding numbers with nonnegative endpoints.
        const auto bump = [&] { return shift(gen.number(g, 1.0), 2.0); };
        const auto v = u + bump();
        const auto w = v + bump();
        ASSERT_TRUE(leq(u, v));
        ASSERT_TRUE(leq(v, w));
        EXPECT_TRUE(leq(u, w));
        // Random triples: whenever the premises hold, so does the conclusion.
        const auto a = gen.number(g), b = gen.number(g), c = gen.number(g);
        if (leq(a, b) && leq(b, c)) {
            EXPECT_TRUE(leq(a, c));
        }
    }
}

TEST(FuzzyNumberProperty, OrderIsAdditive) {
    Gen gen(9);
    for (int i = 0; i < kTrials; ++i) {
        const auto g = gen.grid();
        const auto u = gen.number(g), v = gen.number(g);
        const auto w = u + shift(gen.number(g, 1.0), 2.0);
        const auto e = v + shift(gen.number(g, 1.0), 2.0);
        ASSERT_TRUE(leq(u, w) && leq(v, e));
        EXPECT_TRUE(leq(u + v, w + e));
    }
}

TEST(FuzzyNumberProperty, OrderCancellation) {
    Gen gen(10);
    int premises = 0;
    for (int i = 0; i < kTrials; ++i) {
        const auto g = gen.grid();
        const auto u = gen.number(g), w = gen.number(g);
        const auto v = gen.coin() ? u + shift(gen.number(g, 1.0), 2.0) : gen.number(g);
        if (leq(u + w, v + w)) {
            ++premises;
            EXPECT_TRUE(leq(u, v));
        }
        EXPECT_EQ(leq(u + w, v + w), leq(u, v));
    }
    EXPECT_GT(premises, kTrials / 4);
}

TEST(FuzzyNumberProperty, SameSignScalarDistributivity) {
    Gen gen(12);
    for (int i = 0; i < kTrials; ++i) {
        const auto g = gen.grid();
        const auto u = gen.number(g);
        double a = gen.uniform(0, 5), b = gen.uniform(0, 5);
        if (gen.coin()) {
            a = -a;
            b = -b;
        }
        const auto lhs = scale(a + b, u);
        const auto rhs = scale(a, u) + scale(b, u);
        EXPECT_TRUE(near(lhs, rhs, 1e-12 * (1 + sup_norm(lhs)))) << "a=" << a << " b=" << b;
    }
}

TEST(FuzzyNumberProperty, MixedSignDistributivityFails) {
    Gen gen(13);
    int non_crisp = 0;
    for (int i = 0; i < kTrials; ++i) {
        const auto g = gen.grid();
        const auto u = gen.number(g);
        const auto lhs = scale(0, u);
        const auto rhs = scale(1, u) + scale(-1, u);
        for (std::size_t k = 0; k < g.size(); ++k) {
            EXPECT_DOUBLE_EQ(rhs.lower(k), u.lower(k) - u.upper(k));
            EXPECT_DOUBLE_EQ(rhs.upper(k), u.upper(k) - u.lower(k));
        }
        const bool crisp = u.lower(0) == u.upper(0);
        if (!crisp) {
            ++non_crisp;
            EXPECT_GT(metric_d(lhs, rhs), 0.0);
        }
    }
    EXPECT_GT(non_crisp, kTrials / 2);
}

TEST(FuzzyNumberProperty, OperationsPreserveValidity) {
    Gen gen(14);
    for (int i = 0; i < kTrials; ++i) {
        const auto g = gen.grid();
        const auto u = gen.number(g), v = gen.number(g);
        EXPECT_FALSE(validate(u + v));
        EXPECT_FALSE(validate(scale(gen.uniform(-10, 10), u)));
        EXPECT_FALSE(validate(shift(u, gen.uniform(-10, 10))));
    }
}

TEST(FuzzyNumberProperty, ScalarAssociativityAndDistributivityOverSums) {
    Gen gen(15);
    for (int i = 0; i < kTrials; ++i) {
        const auto g = gen.grid();
        const auto u = gen.number(g), v = gen.number(g);
        const double a = gen.uniform(-4, 4), b = gen.uniform(-4, 4);
        EXPECT_TRUE(near(scale(a, u + v), scale(a, u) + scale(a, v), 1e-11));
        EXPECT_TRUE(near(scale(a, scale(b, u)), scale(a * b, u), 1e-11));
    }
}
