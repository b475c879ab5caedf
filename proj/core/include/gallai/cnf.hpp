#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gallai/coloring.hpp"

namespace gallai {

/// Auxiliary variable eq(e1, e2, c) <-> x(e1, c) AND x(e2, c). Edges are
/// 1-based row-major indices with e1 < e2.
struct EqVariable {
  std::size_t e1;
  std::size_t e2;
  Color color;
  int var;
};

/// Propositional encoding of "some r-coloring of K_{n1,n2} avoids a rainbow
/// `rainbow` and a monochromatic `mono`".
///
/// Variable x(e, c) = (e-1) r + c for edge e in 1..n1*n2 and color c in 1..r.
/// Auxiliary eq variables follow, ordered by (e1, e2, c), one block of r for
/// every edge pair that fits inside a single rainbow-pattern selection.
///
/// Clause order: per edge an at-least-one clause then pairwise at-most-one
/// clauses; per (row subset, column subset, color) a clause forbidding a
/// monochromatic block; the three defining clauses of each eq variable; per
/// rainbow selection the disjunction of eq over its edge pairs and colors.
struct CnfFormula {
  std::size_t n1;
  std::size_t n2;
  Color r;
  int num_vars;
  std::vector<std::string> comments;
  std::vector<EqVariable> eq_vars;
  std::vector<std::vector<int>> clauses;

  int primary_var(std::size_t edge, Color color) const {
    return static_cast<int>((edge - 1) * r + color);
  }
  int num_primary() const { return static_cast<int>(n1 * n2 * r); }
};

CnfFormula build_avoidance_cnf(std::size_t n1, std::size_t n2, Color r, BicliquePattern rainbow,
                               BicliquePattern mono);

/// DIMACS text: comment lines, "p cnf V C", zero-terminated clauses.
std::string write_dimacs(const CnfFormula& formula);

std::string export_cnf(std::size_t n1, std::size_t n2, Color r, BicliquePattern rainbow,
                       BicliquePattern mono);

/// Full assignment (primary and auxiliary) induced by a coloring, as signed
/// literals for variables 1..num_vars.
std::vector<int> encode_model(const CnfFormula& formula, const BipartiteColoring& coloring);

/// Signed literals from solver output. Lines starting with 'c' or 's' are
/// skipped, "v" tokens are dropped, and 0 terminators are ignored.
std::vector<int> parse_model(std::string_view text);

/// Inverse of the primary-variable encoding. Throws Errc::inconsistent_model
/// unless every edge has exactly one true color literal.
BipartiteColoring decode_model(std::size_t n1, std::size_t n2, Color r,
                               std::span<const int> model);

}  // namespace gallai
