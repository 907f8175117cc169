#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dprig {

/// Common base for all library errors so callers can catch one type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: dimension mismatch, out-of-range degree, unknown name, ...
class InvalidArgumentError : public Error {
 public:
  using Error::Error;
};

/// Exact-arithmetic violation (division by zero, zero denominator).
class ArithmeticError : public Error {
 public:
  using Error::Error;
};

/// Text input that fails to parse; carries the offset of the offending token.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_ = 0;
};

/// Geometric pipeline failure: degenerate model, point off the divisor,
/// divisor not solvable in the chart, and similar.
class ModelError : public Error {
 public:
  using Error::Error;
};

}  // namespace dprig
