#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gaussalg {

/// Syntax error while reading a polynomial, ideal file, or model file.
/// `position` is a 0-based character offset into the offending text.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t position)
        : std::runtime_error(message + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// A parsed identifier is not a variable of the target ring.
class UnknownVariableError : public ParseError {
public:
    UnknownVariableError(const std::string& variable, std::size_t position)
        : ParseError("unknown variable '" + variable + "'", position), variable_(variable) {}

    const std::string& variable() const noexcept { return variable_; }

private:
    std::string variable_;
};

/// A Groebner computation exceeded its pair budget. Signals input the
/// algorithm cannot finish at the configured cap, not a wrong answer.
class ResourceLimitError : public std::runtime_error {
public:
    explicit ResourceLimitError(const std::string& message) : std::runtime_error(message) {}
};

}  // namespace gaussalg
