#include "gallai/errors.hpp"

namespace gallai {

const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::dimension_mismatch: return "DimensionMismatch";
    case Errc::color_out_of_range: return "ColorOutOfRange";
    case Errc::parse_error: return "ParseError";
    case Errc::index_out_of_range: return "IndexOutOfRange";
    case Errc::insufficient_vertices: return "InsufficientVertices";
    case Errc::budget_exceeded: return "BudgetExceeded";
    case Errc::inconsistent_model: return "InconsistentModel";
    case Errc::unknown_kind: return "UnknownKind";
    case Errc::invalid_argument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& what)
    : Error(Errc::parse_error,
            "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

BudgetExceeded::BudgetExceeded(unsigned long long nodes, unsigned long long budget)
    : Error(Errc::budget_exceeded, "expanded " + std::to_string(nodes) +
                                       " nodes, budget is " + std::to_string(budget)),
      nodes_(nodes) {}

}  // namespace gallai
