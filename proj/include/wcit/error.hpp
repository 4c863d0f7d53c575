#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wcit {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
  DivisionByZero() : Error("division by zero") {}
};

/// Operands belong to different coefficient fields or polynomial rings.
class FieldMismatch : public Error {
public:
  using Error::Error;
};

/// Input violates a mathematical precondition (non-homogeneous, c > n, ...).
class DomainError : public Error {
public:
  using Error::Error;
};

/// Polynomial text could not be parsed. `column` is 1-based.
class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t column)
      : Error(what + " at column " + std::to_string(column)), column_(column) {}

  std::size_t column() const noexcept { return column_; }

private:
  std::size_t column_;
};

} // namespace wcit
