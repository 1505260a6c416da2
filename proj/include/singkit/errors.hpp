#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace singkit {

enum class ErrorKind {
  parse,
  invalid_argument,
  ring_mismatch,
  overflow,
  budget_exceeded,
  non_isolated,
  unsupported,
  out_of_range,
  tangency,
  inconsistency,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Positions are 1-based. `context` names the field the text came from
// (e.g. "equations[1]") and is empty for free-standing expressions.
class ParseError : public Error {
 public:
  ParseError(std::string message, std::size_t line, std::size_t column, std::string context = {});

  const std::string& message() const noexcept { return message_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& context() const noexcept { return context_; }

 private:
  std::string message_;
  std::size_t line_;
  std::size_t column_;
  std::string context_;
};

class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, unsigned long long used)
      : Error(ErrorKind::budget_exceeded, what), used_(used) {}
  unsigned long long used() const noexcept { return used_; }

 private:
  unsigned long long used_;
};

}  // namespace singkit
