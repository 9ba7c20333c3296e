#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace fuzzysum {

// Broad failure classes; the CLI maps them to exit codes 2, 3 and 4.
enum class ErrorCategory { invalid_input, numeric, io };

class Error : public std::runtime_error {
public:
    Error(ErrorCategory category, const std::string& what)
        : std::runtime_error(what), category_(category) {}

    ErrorCategory category() const noexcept { return category_; }

private:
    ErrorCategory category_;
};

// Expression text could not be parsed. offset() is a byte offset into the input.
class ParseError : public Error {
public:
    ParseError(std::size_t offset, const std::string& what)
        : Error(ErrorCategory::invalid_input,
                what + " at offset " + std::to_string(offset)),
          offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

// ln/sqrt of a negative, division by zero, non-finite results, ...
class DomainError : public Error {
public:
    DomainError(std::string subexpr, const std::string& what)
        : Error(ErrorCategory::invalid_input, what + " in '" + subexpr + "'"),
          subexpr_(std::move(subexpr)) {}

    const std::string& subexpression() const noexcept { return subexpr_; }

private:
    std::string subexpr_;
};

// A fuzzy-number-valued function produced an invalid fuzzy number at (x, alpha).
class InvariantViolation : public Error {
public:
    InvariantViolation(double x, double alpha, const std::string& what)
        : Error(ErrorCategory::invalid_input,
                "pointwise invariant violation at x=" + std::to_string(x) +
                    ", alpha=" + std::to_string(alpha) + ": " + what),
          x_(x), alpha_(alpha) {}

    double x() const noexcept { return x_; }
    double alpha() const noexcept { return alpha_; }

private:
    double x_;
    double alpha_;
};

class QuadratureError : public Error {
public:
    explicit QuadratureError(const std::string& what)
        : Error(ErrorCategory::numeric, what) {}
};

inline Error invalid_argument(const std::string& what) {
    return Error(ErrorCategory::invalid_input, what);
}

}  // namespace fuzzysum
