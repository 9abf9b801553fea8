#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pspec {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands built over different numbers of variables.
class ArityError : public Error {
 public:
  using Error::Error;
};

/// Variable or row/column index outside its valid range.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// Exponent or degree exceeded its checked limit.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// Input that is well-formed but mathematically invalid for the operation
/// (zero denominator, non-coprime pair, improper ideal, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Lexical or syntax error. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
              message),
        line_(line),
        column_(column),
        message_(message) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

}  // namespace pspec
