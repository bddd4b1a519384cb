#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tenscert {

/// Mismatched variable sets, unranked variables, invalid options.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operation called outside its domain (zero polynomial has no leading term,
/// index out of range, t where t is not allowed, ...).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, int line, int column)
      : std::runtime_error(msg + " at " + std::to_string(line) + ":" +
                           std::to_string(column)),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// A Groebner computation ran past its reduction-step budget. Never a wrong
/// answer: callers report it as neither pass nor fail.
class BudgetExhausted : public std::runtime_error {
 public:
  explicit BudgetExhausted(std::uint64_t budget)
      : std::runtime_error("reduction step budget of " + std::to_string(budget) +
                           " exhausted"),
        budget_(budget) {}

  std::uint64_t budget() const { return budget_; }

 private:
  std::uint64_t budget_;
};

}  // namespace tenscert
