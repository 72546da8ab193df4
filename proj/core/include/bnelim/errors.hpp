#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bnelim {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed network text. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// A request that would enumerate more than the configured number of components.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what_for, unsigned requested, unsigned cap);

  unsigned requested() const { return requested_; }
  unsigned cap() const { return cap_; }

 private:
  unsigned requested_;
  unsigned cap_;
};

// Elimination of a positively autoregulated component.
class ForbiddenElimination : public Error {
 public:
  explicit ForbiddenElimination(const std::string& component);

  const std::string& component() const { return component_; }

 private:
  std::string component_;
};

// Caller-side contract violation: bad index, width mismatch, unknown name.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace bnelim
