#pragma once

#include <stdexcept>
#include <string>

namespace skelex {

/// Vectors, subspaces or matrices with incompatible ambient dimensions.
class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation was called on input that does not meet its precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A colored graph that fails one of the G-coloring invariants.
class InvalidGraph : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// Sphere recognition beyond dimension 2 is not available.
class UnsupportedDimension : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed text input. `line` is 1-based, 0 when unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line = 0, int column = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ", column " +
                                          std::to_string(column) + ": " + message
                                    : message),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace skelex
