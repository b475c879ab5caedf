#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gallai {

enum class Errc {
  dimension_mismatch,
  color_out_of_range,
  parse_error,
  index_out_of_range,
  insufficient_vertices,
  budget_exceeded,
  inconsistent_model,
  unknown_kind,
  invalid_argument,
};

const char* to_string(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Malformed text input. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class BudgetExceeded : public Error {
 public:
  BudgetExceeded(unsigned long long nodes, unsigned long long budget);

  unsigned long long nodes() const noexcept { return nodes_; }

 private:
  unsigned long long nodes_;
};

}  // namespace gallai
