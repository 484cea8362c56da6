#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fracnabla {

/// Argument outside the domain of a special function or operator.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Malformed problem description, configuration or expression.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A strip system whose diagonal vanishes at grid point `t`.
class SingularSystemError : public std::runtime_error {
public:
    SingularSystemError(std::size_t t, const std::string& what)
        : std::runtime_error(what), t_(t) {}

    std::size_t grid_point() const noexcept { return t_; }

private:
    std::size_t t_;
};

}  // namespace fracnabla
