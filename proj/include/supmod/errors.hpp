#pragma once

#include <stdexcept>
#include <string>

namespace supmod {

// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed text input. Carries the 1-based line and column of the
// offending token.
class ParseError : public Error {
public:
    ParseError(const std::string& what, int line, int column)
        : Error(what + " (line " + std::to_string(line) + ", column " +
                std::to_string(column) + ")"),
          line_(line),
          column_(column) {}

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

// Shape mismatch: ragged rows, incompatible operand dimensions, wrong
// vector lengths.
class DimensionError : public Error {
public:
    using Error::Error;
};

// Semantically invalid value: a grid that is not a permutation of 1..mn,
// an unbalanced transportation instance, a negative supply.
class ValidationError : public Error {
public:
    using Error::Error;
};

// A search guard or enumeration budget was exceeded.
class ResourceError : public Error {
public:
    using Error::Error;
};

}  // namespace supmod
