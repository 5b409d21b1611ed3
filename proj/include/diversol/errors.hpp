#ifndef DIVERSOL_ERRORS_HPP
#define DIVERSOL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace diversol {

// Bad user input: malformed instances, ids out of range, violated
// documented preconditions of the public API.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// A configured work cap was exceeded. Never a wrong answer: callers see
// this instead of a truncated result.
class BudgetError : public std::runtime_error {
public:
    explicit BudgetError(const std::string& msg) : std::runtime_error(msg) {}
};

// Internal contract violated by a caller inside the library (a bug, not
// bad user input).
class ContractError : public std::logic_error {
public:
    explicit ContractError(const std::string& msg) : std::logic_error(msg) {}
};

// Instance-file syntax error with position information.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, int column, const std::string& msg)
        : std::runtime_error("parse error at line " + std::to_string(line) +
                             ", column " + std::to_string(column) + ": " + msg),
          line_(line),
          column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

}  // namespace diversol

#endif
