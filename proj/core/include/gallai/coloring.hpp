#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace gallai {

/// Colors are 1-based: a coloring with r colors uses indices 1..r.
using Color = std::uint32_t;

/// Word-packed set of vertex indices on one side of the bipartition.
using IndexSet = boost::dynamic_bitset<std::uint64_t>;

/// Largest supported n1 * n2.
inline constexpr std::size_t kMaxEdges = std::size_t{1} << 20;

/// K_{s,t} with the s-side placed on U (rows) and the t-side on V (columns).
struct BicliquePattern {
  std::size_t s;
  std::size_t t;

  BicliquePattern(std::size_t s, std::size_t t);

  std::size_t edges() const noexcept { return s * t; }

  friend bool operator==(const BicliquePattern&, const BicliquePattern&) = default;
};

/// An r-coloring of the edges of K_{n1,n2}. Row i is vertex u_i of U, column
/// j is vertex v_j of V; cell (i, j) holds the color of edge u_i v_j.
///
/// Indices in the C++ API are 0-based. The text formats are 1-based for
/// colors only (rows and columns are implicit in the layout).
///
/// Immutable after construction.
class BipartiteColoring {
 public:
  /// Validating constructor over a row-major grid of n1 * n2 colors.
  BipartiteColoring(std::size_t n1, std::size_t n2, Color r, std::vector<Color> cells);

  /// Builds a coloring from nested rows; rejects ragged or mis-sized input.
  static BipartiteColoring from_rows(std::size_t n1, std::size_t n2, Color r,
                                     const std::vector<std::vector<Color>>& rows);

  std::size_t n1() const noexcept { return n1_; }
  std::size_t n2() const noexcept { return n2_; }
  Color r() const noexcept { return r_; }

  Color operator()(std::size_t i, std::size_t j) const noexcept { return cells_[i * n2_ + j]; }
  Color at(std::size_t i, std::size_t j) const;

  std::span<const Color> row(std::size_t i) const noexcept {
    return {cells_.data() + i * n2_, n2_};
  }
  std::span<const Color> cells() const noexcept { return cells_; }

  std::vector<std::vector<Color>> rows() const;

  friend bool operator==(const BipartiteColoring&, const BipartiteColoring&) = default;

 private:
  std::size_t n1_;
  std::size_t n2_;
  Color r_;
  std::vector<Color> cells_;
};

/// For each row i, the set of columns j with coloring(i, j) == color.
std::vector<IndexSet> per_color_rows(const BipartiteColoring& coloring, Color color);

/// For each column j, the set of rows i with coloring(i, j) == color.
std::vector<IndexSet> per_color_cols(const BipartiteColoring& coloring, Color color);

/// Canonical text form: "n1 n2 r\n" followed by n1 lines of n2 colors.
std::string write_coloring(const BipartiteColoring& coloring);
void write_coloring(std::ostream& out, const BipartiteColoring& coloring);

/// Strict reader for the canonical text form; throws ParseError.
BipartiteColoring read_coloring(std::string_view text);
BipartiteColoring read_coloring(std::istream& in);

}  // namespace gallai
