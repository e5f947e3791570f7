#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace famloc {

/// Operands live in different rings.
class RingMismatch : public std::invalid_argument {
 public:
  explicit RingMismatch(const std::string& what) : std::invalid_argument(what) {}
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public std::invalid_argument {
 public:
  explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

/// A configurable resource cap (minor size, branch depth, group dimension)
/// was hit. Never a wrong answer, always a refusal.
class ResourceCapExceeded : public std::runtime_error {
 public:
  explicit ResourceCapExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Problem-file syntax or validation error with 1-based location.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace famloc
