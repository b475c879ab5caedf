#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "gallai/certificate.hpp"
#include "gallai/coloring.hpp"

namespace gallai {

/// Exact search for a monochromatic K_{s,t} (s rows, t columns).
///
/// Per color, enumerates s-subsets of the rows that carry at least t edges of
/// that color and intersects their column sets. When s == t and the column
/// side is strictly smaller, the roles of rows and columns are swapped for
/// the enumeration. Either way the returned witness is the lexicographically
/// least one (rows first, then columns).
std::optional<BicliqueCertificate> find_mono_biclique(const BipartiteColoring& coloring,
                                                      BicliquePattern pattern);

/// Exact search for a rainbow K_{s,t}: s rows and t columns whose s*t edges
/// carry pairwise distinct colors. Returns the lexicographically least witness.
std::optional<BicliqueCertificate> find_rainbow_biclique(const BipartiteColoring& coloring,
                                                         BicliquePattern pattern);

/// Monochromatic `mono` pattern first, then rainbow `rainbow` pattern.
std::optional<BicliqueCertificate> find_any(const BipartiteColoring& coloring,
                                            BicliquePattern rainbow, BicliquePattern mono);

/// True iff the certificate names distinct in-range rows and columns, its
/// color block matches the coloring, and the block is all-equal (mono) or
/// pairwise distinct (rainbow).
bool verify_certificate(const BipartiteColoring& coloring, const BicliqueCertificate& cert);

/// A row together with the color it meets most often.
struct ColorDegree {
  std::size_t row;
  Color color;
  std::size_t edges;
};

/// Most frequent color in a row; ties go to the smaller color index.
ColorDegree max_color_degree(const BipartiteColoring& coloring, std::size_t row);

/// Vertex and color picked out by the pigeonhole chain over the rainbow
/// paths lying outside the greedy family. `edges` counts edges of `color` at
/// `row` among those outside paths; `guaranteed` is ceil(R / (4 |P|)) where R
/// is the number of outside rainbow paths.
struct ColorDegreeWitness {
  std::size_t row;
  Color color;
  std::size_t edges;
  std::size_t guaranteed;
};

/// Classification of the two-edge paths u_i v_k u_j, k = 0..n2-1.
struct PathProfile {
  std::size_t i;
  std::size_t j;
  std::size_t mono_count;
  std::vector<std::size_t> rainbow_cols;
  /// Greedy maximal family of pairwise color-disjoint rainbow paths, built
  /// by scanning k in increasing order.
  std::vector<std::size_t> pset;
  /// Present iff some rainbow path lies outside pset.
  std::optional<ColorDegreeWitness> heavy;
};

PathProfile path_profile(const BipartiteColoring& coloring, std::size_t i, std::size_t j);

/// Randomized rainbow search restricted to low color-degree vertices.
///
/// Rows (columns) qualify when they meet fewer than `d` edges of every
/// color. Each trial draws s qualifying rows and t qualifying columns
/// without replacement (Fisher-Yates prefix over working arrays that persist
/// across trials) and tests the block for the rainbow property. Throws
/// Errc::insufficient_vertices when fewer than s rows or t columns qualify.
std::optional<BicliqueCertificate> sample_rainbow(const BipartiteColoring& coloring,
                                                  BicliquePattern pattern, std::size_t d,
                                                  std::size_t trials, std::uint64_t seed);

}  // namespace gallai
