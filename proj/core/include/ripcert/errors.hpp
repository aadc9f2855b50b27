#pragma once

#include <stdexcept>
#include <string>

namespace ripcert {

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Argument values that violate an operation's preconditions
// (bad sizes, parity violations, out-of-range scalars).
class ParameterError : public Error {
    using Error::Error;
};

// A cut side that is empty or equals the whole vertex set.
class InvalidCutError : public Error {
    using Error::Error;
};

// Malformed graph or matrix file. Carries the 1-based offending line
// when the problem is attributable to one.
class ParseError : public Error {
public:
    ParseError(const std::string& what, int line)
        : Error(what + " (line " + std::to_string(line) + ")"), line_(line) {}
    explicit ParseError(const std::string& what) : Error(what) {}

    int line() const noexcept { return line_; }

private:
    int line_ = 0;
};

// Random generation exhausted its retry budget without producing a
// valid object.
class GenerationError : public Error {
    using Error::Error;
};

// Matrix handed to the factorizer has an eigenvalue too negative to be
// treated as numerical noise.
class NotPsdError : public Error {
    using Error::Error;
};

// Exhaustive enumeration would exceed the configured support budget.
class BudgetError : public Error {
    using Error::Error;
};

}  // namespace ripcert
