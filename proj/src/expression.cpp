#include "fracnabla/expression.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>

#include "fracnabla/specfun.hpp"

namespace fracnabla {

namespace {

using Node = Expression::Node;
using Kind = Expression::Kind;

struct FunctionInfo {
    std::string_view name;
    std::size_t arity;
};

constexpr std::array<FunctionInfo, 3> kFunctions{{
    {"gamma", 1},
    {"rising", 2},
    {"hmono", 2},
}};

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Node parse() {
        skip_space();
        if (pos_ == text_.size()) {
            throw SyntaxError(pos_, "empty expression");
        }
        Node node = expr();
        skip_space();
        if (pos_ != text_.size()) {
            throw SyntaxError(pos_, std::string("unexpected '") + text_[pos_] + "'");
        }
        return node;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) {
            throw SyntaxError(pos_, std::string("expected '") + c + "'");
        }
    }

    static Node binary(char op, Node lhs, Node rhs) {
        Node n;
        n.kind = Kind::binary;
        n.op = op;
        n.args.push_back(std::move(lhs));
        n.args.push_back(std::move(rhs));
        return n;
    }

    Node expr() {
        Node lhs = term();
        for (;;) {
            if (accept('+')) {
                lhs = binary('+', std::move(lhs), term());
            } else if (accept('-')) {
                lhs = binary('-', std::move(lhs), term());
            } else {
                return lhs;
            }
        }
    }

    Node term() {
        Node lhs = factor();
        for (;;) {
            if (accept('*')) {
                lhs = binary('*', std::move(lhs), factor());
            } else if (accept('/')) {
                lhs = binary('/', std::move(lhs), factor());
            } else {
                return lhs;
            }
        }
    }

    Node factor() {
        if (accept('-')) {
            Node n;
            n.kind = Kind::negate;
            n.args.push_back(factor());
            return n;
        }
        return power();
    }

    Node power() {
        Node base = atom();
        if (accept('^')) {
            return binary('^', std::move(base), factor());
        }
        return base;
    }

    Node atom() {
        skip_space();
        if (pos_ == text_.size()) {
            throw SyntaxError(pos_, "unexpected end of expression");
        }
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Node inner = expr();
            expect(')');
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            return number();
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            return identifier();
        }
        throw SyntaxError(pos_, std::string("unexpected '") + c + "'");
    }

    Node number() {
        const std::size_t start = pos_;
        double value = 0.0;
        const char* first = text_.data() + pos_;
        const char* last = text_.data() + text_.size();
        const auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc() || !std::isfinite(value)) {
            throw SyntaxError(start, "malformed number");
        }
        pos_ += static_cast<std::size_t>(ptr - first);
        Node n;
        n.kind = Kind::number;
        n.value = value;
        return n;
    }

    Node identifier() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
            ++pos_;
        }
        const std::string_view word = text_.substr(start, pos_ - start);
        skip_space();
        const bool is_call = pos_ < text_.size() && text_[pos_] == '(';
        if (!is_call) {
            if (word == "t") {
                Node n;
                n.kind = Kind::variable;
                return n;
            }
            throw SyntaxError(start, "unknown identifier '" + std::string(word) + "'");
        }

        const FunctionInfo* info = nullptr;
        for (const auto& f : kFunctions) {
            if (f.name == word) {
                info = &f;
            }
        }
        if (info == nullptr) {
            throw SyntaxError(start, "unknown function '" + std::string(word) + "'");
        }
        ++pos_;  // '('
        Node call;
        call.kind = Kind::call;
        call.name = std::string(word);
        call.args.push_back(expr());
        while (accept(',')) {
            call.args.push_back(expr());
        }
        expect(')');
        if (call.args.size() != info->arity) {
            throw SyntaxError(start, call.name + " expects " + std::to_string(info->arity) +
                                         " argument(s), got " +
                                         std::to_string(call.args.size()));
        }
        return call;
    }
};

std::string format_number(double v) {
    std::array<char, 32> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), ptr);
}

double checked(double value, const Node& node) {
    if (!std::isfinite(value)) {
        throw EvaluationError("non-finite value in '" + to_string(node) + "'");
    }
    return value;
}

double eval(const Node& node, double t) {
    switch (node.kind) {
        case Kind::number:
            return node.value;
        case Kind::variable:
            return t;
        case Kind::negate:
            return -eval(node.args[0], t);
        case Kind::binary: {
            const double lhs = eval(node.args[0], t);
            const double rhs = eval(node.args[1], t);
            switch (node.op) {
                case '+': return checked(lhs + rhs, node);
                case '-': return checked(lhs - rhs, node);
                case '*': return checked(lhs * rhs, node);
                case '/':
                    if (rhs == 0.0) {
                        throw EvaluationError("division by zero in '" + to_string(node) + "'");
                    }
                    return checked(lhs / rhs, node);
                case '^': return checked(std::pow(lhs, rhs), node);
            }
            break;
        }
        case Kind::call: {
            try {
                if (node.name == "gamma") {
                    return checked(gamma_function(eval(node.args[0], t)), node);
                }
                if (node.name == "rising") {
                    return checked(
                        rising_factorial(eval(node.args[0], t), eval(node.args[1], t)), node);
                }
                if (node.name == "hmono") {
                    return checked(
                        taylor_monomial(eval(node.args[0], t), eval(node.args[1], t), 0.0), node);
                }
            } catch (const EvaluationError&) {
                throw;
            } catch (const DomainError& e) {
                throw EvaluationError("in '" + to_string(node) + "': " + e.what());
            }
            break;
        }
    }
    throw EvaluationError("malformed expression node");
}

}  // namespace

std::string to_string(const Node& node) {
    switch (node.kind) {
        case Kind::number:
            return format_number(node.value);
        case Kind::variable:
            return "t";
        case Kind::negate:
            return "(-" + to_string(node.args[0]) + ")";
        case Kind::binary:
            return "(" + to_string(node.args[0]) + " " + node.op + " " +
                   to_string(node.args[1]) + ")";
        case Kind::call: {
            std::string out = node.name + "(";
            for (std::size_t i = 0; i < node.args.size(); ++i) {
                if (i > 0) {
                    out += ", ";
                }
                out += to_string(node.args[i]);
            }
            return out + ")";
        }
    }
    return "?";
}

double Expression::evaluate(double t) const { return eval(root_, t); }

std::string Expression::to_string() const { return fracnabla::to_string(root_); }

Expression parse_expression(std::string_view text) {
    return Expression(Parser(text).parse());
}

}  // namespace fracnabla
