#pragma once

// A small arithmetic language for endpoint formulas in x and alpha.
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' unary)?          (right associative)
//   primary := number | 'x' | 'alpha' | func '(' expr ')' | '(' expr ')'
//   func    := sin | cos | ln | exp | sqrt | abs

#include <array>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "fuzzysum/error.hpp"

namespace fuzzysum {

enum class ExprKind { number, var_x, var_alpha, neg, add, sub, mul, div, pow, func };
enum class ExprFunc { sin, cos, ln, exp, sqrt, abs };

namespace detail {

inline constexpr std::array<std::string_view, 6> func_names = {"sin", "cos", "ln",
                                                                "exp", "sqrt", "abs"};

// Shortest text that reads back to the same double.
inline std::string format_double(double v) {
    std::array<char, 32> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), end);
}

}  // namespace detail

// Immutable expression tree; copies share nodes.
class Expr {
public:
    struct Node {
        ExprKind kind = ExprKind::number;
        double value = 0.0;               // number
        ExprFunc func = ExprFunc::sin;    // func
        std::shared_ptr<const Node> lhs{};  // unary operand / left operand / func argument
        std::shared_ptr<const Node> rhs{};
    };

    static Expr number(double v) { return Expr(make({ExprKind::number, v})); }
    static Expr x() { return Expr(make({ExprKind::var_x})); }
    static Expr alpha() { return Expr(make({ExprKind::var_alpha})); }
    static Expr negate(const Expr& e) {
        return Expr(make({ExprKind::neg, 0.0, ExprFunc::sin, e.root_}));
    }
    static Expr binary(ExprKind op, const Expr& a, const Expr& b) {
        return Expr(make({op, 0.0, ExprFunc::sin, a.root_, b.root_}));
    }
    static Expr call(ExprFunc f, const Expr& arg) {
        return Expr(make({ExprKind::func, 0.0, f, arg.root_}));
    }

    ExprKind kind() const noexcept { return root_->kind; }

    double eval(double x, double alpha) const { return eval_node(*root_, x, alpha); }

    // Fully re-parseable text with the minimum parentheses.
    std::string to_string() const { return print(*root_); }

    friend bool operator==(const Expr& a, const Expr& b) { return same(a.root_.get(), b.root_.get()); }

private:
    explicit Expr(std::shared_ptr<const Node> root) : root_(std::move(root)) {}

    static std::shared_ptr<const Node> make(Node n) {
        return std::make_shared<const Node>(std::move(n));
    }

    static bool same(const Node* a, const Node* b) {
        if (a == b) return true;
        if (!a || !b) return false;
        if (a->kind != b->kind) return false;
        switch (a->kind) {
        case ExprKind::number: return a->value == b->value;
        case ExprKind::var_x:
        case ExprKind::var_alpha: return true;
        case ExprKind::func: return a->func == b->func && same(a->lhs.get(), b->lhs.get());
        default: return same(a->lhs.get(), b->lhs.get()) && same(a->rhs.get(), b->rhs.get());
        }
    }

    static int precedence(const Node& n) {
        switch (n.kind) {
        case ExprKind::add:
        case ExprKind::sub: return 1;
        case ExprKind::mul:
        case ExprKind::div: return 2;
        case ExprKind::neg: return 3;
        case ExprKind::pow: return 4;
        case ExprKind::number: return std::signbit(n.value) ? 3 : 5;
        default: return 5;
        }
    }

    static std::string wrap(const Node& n, bool parens) {
        return parens ? "(" + print(n) + ")" : print(n);
    }

    static std::string print(const Node& n) {
        switch (n.kind) {
        case ExprKind::number: return detail::format_double(n.value);
        case ExprKind::var_x: return "x";
        case ExprKind::var_alpha: return "alpha";
        case ExprKind::func:
            return std::string(detail::func_names[static_cast<int>(n.func)]) + "(" +
                   print(*n.lhs) + ")";
        case ExprKind::neg: return "-" + wrap(*n.lhs, precedence(*n.lhs) < 3);
        case ExprKind::pow:
            return wrap(*n.lhs, precedence(*n.lhs) <= 4) + "^" +
                   wrap(*n.rhs, precedence(*n.rhs) < 3);
        default: {
            static constexpr const char* ops[] = {"", "", "", "", " + ", " - ", "*", "/"};
            const int p = precedence(n);
            return wrap(*n.lhs, precedence(*n.lhs) < p) + ops[static_cast<int>(n.kind)] +
                   wrap(*n.rhs, precedence(*n.rhs) <= p);
        }
        }
    }

    static double checked(const Node& n, double v) {
        if (!std::isfinite(v)) throw DomainError(print(n), "non-finite result");
        return v;
    }

    static double eval_node(const Node& n, double x, double alpha) {
        switch (n.kind) {
        case ExprKind::number: return n.value;
        case ExprKind::var_x: return x;
        case ExprKind::var_alpha: return alpha;
        case ExprKind::neg: return -eval_node(*n.lhs, x, alpha);
        case ExprKind::add: return checked(n, eval_node(*n.lhs, x, alpha) + eval_node(*n.rhs, x, alpha));
        case ExprKind::sub: return checked(n, eval_node(*n.lhs, x, alpha) - eval_node(*n.rhs, x, alpha));
        case ExprKind::mul: return checked(n, eval_node(*n.lhs, x, alpha) * eval_node(*n.rhs, x, alpha));
        case ExprKind::div: {
            const double num = eval_node(*n.lhs, x, alpha);
            const double den = eval_node(*n.rhs, x, alpha);
            if (den == 0.0) throw DomainError(print(n), "division by zero");
            return checked(n, num / den);
        }
        case ExprKind::pow: {
            const double base = eval_node(*n.lhs, x, alpha);
            const double ex = eval_node(*n.rhs, x, alpha);
            if (base < 0 && std::trunc(ex) != ex)
                throw DomainError(print(n), "negative base with non-integer exponent");
            if (base == 0 && ex < 0) throw DomainError(print(n), "division by zero");
            return checked(n, std::pow(base, ex));
        }
        case ExprKind::func: {
            const double a = eval_node(*n.lhs, x, alpha);
            switch (n.func) {
            case ExprFunc::sin: return std::sin(a);
            case ExprFunc::cos: return std::cos(a);
            case ExprFunc::exp: return checked(n, std::exp(a));
            case ExprFunc::abs: return std::abs(a);
            case ExprFunc::ln:
                if (!(a > 0)) throw DomainError(print(n), "logarithm of a non-positive value");
                return std::log(a);
            case ExprFunc::sqrt:
                if (a < 0) throw DomainError(print(n), "square root of a negative value");
                return std::sqrt(a);
            }
        }
        }
        return 0.0;  // unreachable
    }

    std::shared_ptr<const Node> root_;
};

namespace detail {

class ExprParser {
public:
    explicit ExprParser(std::string_view text) : text_(text) {}

    Expr parse() {
        skip_space();
        Expr e = expr();
        skip_space();
        if (pos_ < text_.size()) throw ParseError(pos_, "unexpected character '" + std::string(1, text_[pos_]) + "'");
        return e;
    }

private:
    Expr expr() {
        Expr lhs = term();
        for (;;) {
            if (accept('+')) lhs = Expr::binary(ExprKind::add, lhs, term());
            else if (accept('-')) lhs = Expr::binary(ExprKind::sub, lhs, term());
            else return lhs;
        }
    }

    Expr term() {
        Expr lhs = unary();
        for (;;) {
            if (accept('*')) lhs = Expr::binary(ExprKind::mul, lhs, unary());
            else if (accept('/')) lhs = Expr::binary(ExprKind::div, lhs, unary());
            else return lhs;
        }
    }

    Expr unary() {
        if (accept('-')) return Expr::negate(unary());
        return power();
    }

    Expr power() {
        Expr base = primary();
        if (accept('^')) return Expr::binary(ExprKind::pow, base, unary());
        return base;
    }

    Expr primary() {
        skip_space();
        const std::size_t start = pos_;
        if (pos_ >= text_.size())
            throw ParseError(open_.empty() ? pos_ : open_.back(), "unexpected end of input");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            open_.push_back(start);
            Expr inner = expr();
            expect(')', start);
            open_.pop_back();
            return inner;
        }
        if (is_digit(c) || c == '.') return number();
        if (is_alpha(c)) {
            while (pos_ < text_.size() && (is_alpha(text_[pos_]) || is_digit(text_[pos_]))) ++pos_;
            const std::string_view name = text_.substr(start, pos_ - start);
            if (name == "x") return Expr::x();
            if (name == "alpha") return Expr::alpha();
            for (std::size_t i = 0; i < func_names.size(); ++i) {
                if (name == func_names[i]) {
                    if (!accept('(')) throw ParseError(pos_, "expected '(' after " + std::string(name));
                    open_.push_back(start);
                    Expr arg = expr();
                    expect(')', start);
                    open_.pop_back();
                    return Expr::call(static_cast<ExprFunc>(i), arg);
                }
            }
            throw ParseError(start, "unknown identifier '" + std::string(name) + "'");
        }
        throw ParseError(pos_, "unexpected character '" + std::string(1, c) + "'");
    }

    Expr number() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && (is_digit(text_[pos_]) || text_[pos_] == '.')) ++pos_;
        if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
            std::size_t p = pos_ + 1;
            if (p < text_.size() && (text_[p] == '+' || text_[p] == '-')) ++p;
            if (p < text_.size() && is_digit(text_[p])) {
                while (p < text_.size() && is_digit(text_[p])) ++p;
                pos_ = p;
            }
        }
        double v = 0.0;
        const char* first = text_.data() + start;
        const char* last = text_.data() + pos_;
        auto [ptr, ec] = std::from_chars(first, last, v);
        if (ec != std::errc() || ptr != last || !std::isfinite(v))
            throw ParseError(start, "malformed number");
        return Expr::number(v);
    }

    // Unclosed groups are reported at the position of the opening token.
    void expect(char c, std::size_t open_pos) {
        if (!accept(c)) throw ParseError(open_pos, std::string("unbalanced parentheses, expected '") + c + "'");
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void skip_space() {
        while (pos_ < text_.size() &&
               (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' || text_[pos_] == '\r'))
            ++pos_;
    }

    static bool is_digit(char c) { return c >= '0' && c <= '9'; }
    static bool is_alpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::vector<std::size_t> open_;  // offsets of unclosed '(' / function names
};

}  // namespace detail

inline Expr parse_expr(std::string_view text) { return detail::ExprParser(text).parse(); }

}  // namespace fuzzysum
