#include <gtest/gtest.h>

#include <bit>
#include <cmath>
#include <cstdint>
#include <string>

#include "fuzzysum/expr.hpp"
#include "support.hpp"

using namespace fuzzysum;

namespace {

std::size_t parse_error_offset(std::string_view text) {
    try {
        parse_expr(text);
    } catch (const ParseError& e) {
        return e.offset();
    }
    ADD_FAILURE() << "expected a parse error for '" << text << "'";
    return std::string::npos;
}

// Random trees in the shape the parser itself produces: literals are
// nonnegative (a leading minus is always unary).
Expr random_expr(support::Gen& gen, int depth) {
    if (depth == 0 || gen.index(4) == 0) {
        switch (gen.index(3)) {
        case 0: return Expr::x();
        case 1: return Expr::alpha();
        default: return Expr::number(gen.coin() ? double(gen.index(10)) : gen.uniform(0, 1e3));
        }
    }
    switch (gen.index(4)) {
    case 0: return Expr::negate(random_expr(gen, depth - 1));
    case 1: return Expr::call(static_cast<ExprFunc>(gen.index(6)), random_expr(gen, depth - 1));
    default: {
        static constexpr ExprKind ops[] = {ExprKind::add, ExprKind::sub, ExprKind::mul, ExprKind::div,
                                           ExprKind::pow};
        return Expr::binary(ops[gen.index(5)], random_expr(gen, depth - 1), random_expr(gen, depth - 1));
    }
    }
}

}  // namespace

TEST(Parse, PaperEndpointFormulas) {
    EXPECT_NO_THROW(parse_expr("cos(x) + alpha/(x+1)^2"));
    EXPECT_NO_THROW(parse_expr("(2 - sin(x))*alpha"));
}

TEST(Parse, SyntaxErrorsCarryOffsets) {
    EXPECT_EQ(parse_error_offset("("), 0u);
    EXPECT_EQ(parse_error_offset("  (x"), 2u);
    EXPECT_EQ(parse_error_offset("sin(x"), 0u);
    EXPECT_EQ(parse_error_offset("x +"), 3u);
    EXPECT_EQ(parse_error_offset("x y"), 2u);
    EXPECT_EQ(parse_error_offset("x)"), 1u);
    EXPECT_EQ(parse_error_offset("foo(x)"), 0u);
    EXPECT_EQ(parse_error_offset("1 + beta"), 4u);
    EXPECT_EQ(parse_error_offset("sin x"), 4u);
    EXPECT_EQ(parse_error_offset("1..2"), 0u);
    EXPECT_EQ(parse_error_offset(""), 0u);
    EXPECT_EQ(parse_error_offset("x # 2"), 2u);
}

TEST(Parse, ParseErrorIsInvalidInput) {
    try {
        parse_expr("(");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.category(), ErrorCategory::invalid_input);
        EXPECT_NE(std::string(e.what()).find("offset 0"), std::string::npos);
    }
}

TEST(Parse, Precedence) {
    EXPECT_EQ(parse_expr("x+alpha*2"), parse_expr("x+(alpha*2)"));
    EXPECT_EQ(parse_expr("x-alpha-2"), parse_expr("(x-alpha)-2"));
    EXPECT_EQ(parse_expr("x/alpha/2"), parse_expr("(x/alpha)/2"));
    EXPECT_EQ(parse_expr("2^3^x"), parse_expr("2^(3^x)"));
    EXPECT_EQ(parse_expr("-x^2"), parse_expr("-(x^2)"));
    EXPECT_EQ(parse_expr("-x*2"), parse_expr("(-x)*2"));
    EXPECT_EQ(parse_expr("2^-x"), parse_expr("2^(-x)"));
    EXPECT_FALSE(parse_expr("x+alpha*2") == parse_expr("(x+alpha)*2"));
}

TEST(Parse, WhitespaceInsensitive) {
    EXPECT_EQ(parse_expr(" cos( x )+alpha /( x + 1 ) ^ 2 "), parse_expr("cos(x)+alpha/(x+1)^2"));
    EXPECT_EQ(parse_expr("\t1e-3 *\nx"), parse_expr("0.001*x"));
}

TEST(Eval, Examples) {
    EXPECT_EQ(parse_expr("cos(x)+alpha/(x+1)^2").eval(0, 1), 2.0);
    EXPECT_EQ(parse_expr("2 - sin(x)").eval(0, 0), 2.0);
    EXPECT_EQ(parse_expr("x").eval(7, 0.3), 7.0);
    EXPECT_EQ(parse_expr("alpha").eval(7, 0.3), 0.3);
    EXPECT_EQ(parse_expr("-2^2").eval(0, 0), -4.0);
    EXPECT_EQ(parse_expr("(-2)^3").eval(0, 0), -8.0);
    EXPECT_DOUBLE_EQ(parse_expr("exp(ln(x)) + sqrt(abs(-9))").eval(5, 0), 8.0);
}

TEST(Eval, DomainErrorsNameTheSubexpression) {
    auto subexpr_of = [](std::string_view text, double x) {
        try {
            parse_expr(text).eval(x, 0.5);
        } catch (const DomainError& e) {
            EXPECT_EQ(e.category(), ErrorCategory::invalid_input);
            return e.subexpression();
        }
        ADD_FAILURE() << "expected a domain error for '" << text << "'";
        return std::string();
    };
    EXPECT_EQ(subexpr_of("1 + ln(x - 5)", 1), "ln(x - 5)");
    EXPECT_EQ(subexpr_of("sqrt(x - 5)", 1), "sqrt(x - 5)");
    EXPECT_EQ(subexpr_of("2 + alpha/(x - 1)", 1), "alpha/(x - 1)");
    EXPECT_EQ(subexpr_of("(x - 3)^alpha", 1), "(x - 3)^alpha");
    EXPECT_EQ(subexpr_of("exp(x)", 1000), "exp(x)");
    EXPECT_EQ(subexpr_of("ln(x)", 0), "ln(x)");
}

TEST(Expr, PrintsMinimalParentheses) {
    EXPECT_EQ(parse_expr("cos(x) + alpha/(x+1)^2").to_string(), "cos(x) + alpha/(x + 1)^2");
    EXPECT_EQ(parse_expr("((x))*((alpha))").to_string(), "x*alpha");
    EXPECT_EQ(parse_expr("x-(alpha-1)").to_string(), "x - (alpha - 1)");
    EXPECT_EQ(parse_expr("(-x)^2").to_string(), "(-x)^2");
    EXPECT_EQ(parse_expr("(2^3)^x").to_string(), "(2^3)^x");
}

TEST(ExprProperty, RoundTrip) {
    support::Gen gen(21);
    for (int i = 0; i < 2000; ++i) {
        const Expr e = random_expr(gen, 5);
        const std::string text = e.to_string();
        Expr back = Expr::number(0);
        ASSERT_NO_THROW(back = parse_expr(text)) << text;
        EXPECT_EQ(back, e) << text;
        EXPECT_EQ(back.to_string(), text);
    }
}

TEST(ExprProperty, PrecedenceOfRandomOperands) {
    support::Gen gen(22);
    for (int i = 0; i < 500; ++i) {
        const std::string a = random_expr(gen, 2).to_string();
        const std::string b = random_expr(gen, 2).to_string();
        const std::string c = random_expr(gen, 2).to_string();
        EXPECT_EQ(parse_expr("(" + a + ")+(" + b + ")*(" + c + ")"),
                  parse_expr("(" + a + ")+((" + b + ")*(" + c + "))"));
    }
}

TEST(ExprProperty, EvalIsPure) {
    support::Gen gen(23);
    int evaluated = 0;
    for (int i = 0; i < 1000; ++i) {
        const Expr e = random_expr(gen, 4);
        const double x = gen.uniform(0, 50), a = gen.uniform(0, 1);
        try {
            const double first = e.eval(x, a);
            for (int r = 0; r < 3; ++r)
                EXPECT_EQ(std::bit_cast<std::uint64_t>(e.eval(x, a)), std::bit_cast<std::uint64_t>(first));
            ++evaluated;
        } catch (const DomainError&) {
            EXPECT_THROW(e.eval(x, a), DomainError);
        }
    }
    EXPECT_GT(evaluated, 300);
}
