#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fracnabla/errors.hpp"

namespace fracnabla {

/// Syntax error in an expression, with the byte offset where it was found.
class SyntaxError : public ValidationError {
public:
    SyntaxError(std::size_t offset, const std::string& message)
        : ValidationError("offset " + std::to_string(offset) + ": " + message),
          offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// Evaluation failure; the message names the offending subexpression.
class EvaluationError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Arithmetic in one variable `t`:
///
///   expr   := term (('+' | '-') term)*
///   term   := factor (('*' | '/') factor)*
///   factor := '-' factor | power
///   power  := atom ('^' factor)?
///   atom   := number | 't' | name '(' expr (',' expr)* ')' | '(' expr ')'
///
/// '^' is right-associative and binds tighter than a leading minus, so
/// `-2^t` is -(2^t) while `2^-t` is 2^(-t). Functions: gamma(x),
/// rising(x, a) and hmono(mu, x) = rising(x, mu) / gamma(mu + 1).
class Expression {
public:
    enum class Kind { number, variable, negate, binary, call };

    struct Node {
        Kind kind = Kind::number;
        double value = 0.0;     // number
        char op = 0;            // binary: + - * / ^
        std::string name;       // call
        std::vector<Node> args;

        bool operator==(const Node&) const = default;
    };

    explicit Expression(Node root) : root_(std::move(root)) {}

    const Node& root() const noexcept { return root_; }

    double evaluate(double t) const;

    /// Fully parenthesized text that parses back to the same tree.
    std::string to_string() const;

    bool operator==(const Expression&) const = default;

private:
    Node root_;
};

Expression parse_expression(std::string_view text);

std::string to_string(const Expression::Node& node);

}  // namespace fracnabla
