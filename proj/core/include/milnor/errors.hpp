#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace milnor {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A generator index, operation index or exponent outside its valid range.
class RangeError : public Error {
public:
  using Error::Error;
};

/// Operands built over different rings.
class ContextError : public Error {
public:
  using Error::Error;
};

/// Degree requested for the zero element or for an inhomogeneous element.
class DegreeError : public Error {
public:
  using Error::Error;
};

/// Malformed surface syntax. Line and column are 1-based.
class ParseError : public Error {
public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

/// Syntactically valid input that does not denote an element of the ring.
class ElaborationError : public Error {
public:
  using Error::Error;
};

} // namespace milnor
