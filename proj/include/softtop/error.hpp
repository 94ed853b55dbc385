#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace softtop {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two values built over different universes or parameter lists were combined.
class ContextMismatch : public Error {
 public:
  using Error::Error;
};

/// An exhaustive enumeration was requested beyond the supported size.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
        line_(line),
        column_(column),
        message_(message) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  /// The message without the location prefix.
  const std::string& message() const noexcept { return message_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

}  // namespace softtop
