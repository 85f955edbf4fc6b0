#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace herder {

/// Base class for every error this library raises on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input data: CSV headers, CSV cells, manifest lines, JSONL records.
/// Carries the offending location when it is known so callers can report it.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& message) : Error(message) {}
  ParseError(const std::string& message, std::size_t line, std::string column)
      : Error(message), line_(line), column_(std::move(column)) {}

  /// 1-based line number in the source file, 0 when unknown.
  std::size_t line() const { return line_; }
  /// Name of the offending column, empty when not column-specific.
  const std::string& column() const { return column_; }

 private:
  std::size_t line_ = 0;
  std::string column_;
};

/// Raised when labeling is requested past the run's label budget.
class BudgetExhausted : public Error {
 public:
  using Error::Error;
};

}  // namespace herder
