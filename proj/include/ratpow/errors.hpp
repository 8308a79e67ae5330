#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ratpow {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exponent vector length does not match the ring.
struct DimensionError : Error {
    using Error::Error;
};

// Operands live in different rings.
struct RingMismatchError : Error {
    using Error::Error;
};

// An operation's precondition is violated (improper ideal, embedded prime,
// non-squarefree input, nonpositive exponent, ...).
struct PreconditionError : Error {
    using Error::Error;
};

// Colon by the zero ideal.
struct UndefinedColonError : PreconditionError {
    using PreconditionError::PreconditionError;
};

// Polyhedron of the zero ideal.
struct EmptyPolyhedronError : PreconditionError {
    using PreconditionError::PreconditionError;
};

// Linear program has no feasible point.
struct InfeasibleError : Error {
    using Error::Error;
};

// A built-in consistency assertion failed; indicates a bug, not bad input.
struct InternalCheckError : Error {
    using Error::Error;
};

// Text input could not be parsed; position is 1-based.
struct ParseError : Error {
    std::size_t line;
    std::size_t column;
    ParseError(const std::string& what, std::size_t line_, std::size_t column_)
        : Error(what + " (line " + std::to_string(line_) + ", column " +
                std::to_string(column_) + ")"),
          line(line_), column(column_) {}
};

} // namespace ratpow
