#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace modsem {

// Root of every error the library reports.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Element index outside a carrier, or functions over different domains.
class DomainError : public Error {
public:
    using Error::Error;
};

// A join or meet that does not exist (e.g. {p} and {not p} in the literal poset).
class UndefinedBound : public Error {
public:
    using Error::Error;
};

// A closure iteration ran past its bound.
class IterationLimit : public Error {
public:
    using Error::Error;
};

// An operation was applied outside its stated precondition.
class PreconditionError : public Error {
public:
    using Error::Error;
};

// Enumeration or universe size exceeds the configured budget.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

// Ill-formed program: unsafe rule, head outside defines, cyclic plan, name clash.
class SemanticError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& what)
        : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
          line_(line), column_(column) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

} // namespace modsem
