#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace geneul {

// Enumeration would have to visit more words than the configured budget.
class BudgetError : public std::runtime_error {
 public:
  BudgetError(std::string required_count, std::uint64_t budget)
      : std::runtime_error("enumeration requires " + required_count +
                           " words, budget is " + std::to_string(budget)),
        required_(std::move(required_count)),
        budget_(budget) {}

  const std::string& required_count() const { return required_; }
  std::uint64_t budget() const { return budget_; }

 private:
  std::string required_;
  std::uint64_t budget_;
};

// Text that does not scan in the "V.C V.C ..." word format. Columns are
// 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t column)
      : std::runtime_error("column " + std::to_string(column) + ": " + what),
        column_(column) {}

  std::size_t column() const { return column_; }

 private:
  std::size_t column_;
};

// Well-formed input that violates a multipermutation or bin-assignment
// invariant.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace geneul
