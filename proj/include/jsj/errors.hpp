#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace jsj {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Input violates an operation's precondition or is malformed.
class InvalidInput : public Error {
public:
  using Error::Error;
};

/// Input text could not be parsed; carries a 1-based line and column.
class ParseError : public InvalidInput {
public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : InvalidInput(what), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

/// A hard search or size guard was exceeded.
class ResourceLimit : public Error {
public:
  using Error::Error;
};

/// A long-running enumeration observed a stop request.
class Cancelled : public Error {
public:
  using Error::Error;
};

/// An internal invariant failed. Indicates a bug, never bad input.
class InternalError : public Error {
public:
  using Error::Error;
};

}  // namespace jsj
