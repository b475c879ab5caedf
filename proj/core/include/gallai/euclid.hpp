#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gallai/certificate.hpp"
#include "gallai/coloring.hpp"

namespace gallai {

/// Global tolerance for coordinate equality and distance comparisons.
inline constexpr double kGeometricTolerance = 1e-9;

using Point = std::vector<double>;

struct ColoredConfig;

/// Finite labeled point set in R^dim. Points are pairwise distinct (more than
/// kGeometricTolerance apart); labels are either empty or one per point.
class PointConfig {
 public:
  PointConfig(std::size_t dim, std::vector<Point> points, std::vector<std::string> labels = {});

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return points_.size(); }
  const std::vector<Point>& points() const noexcept { return points_; }
  const Point& operator[](std::size_t k) const noexcept { return points_[k]; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  friend bool operator==(const PointConfig&, const PointConfig&) = default;

 private:
  struct Trusted {};
  PointConfig(Trusted, std::size_t dim, std::vector<Point> points,
              std::vector<std::string> labels);

  friend PointConfig simplex_points(std::size_t, double);
  friend PointConfig cartesian_product(const PointConfig&, const PointConfig&);
  friend ColoredConfig embed_coloring(const BipartiteColoring&, double, double);

  std::size_t dim_;
  std::vector<Point> points_;
  std::vector<std::string> labels_;
};

struct ColoredConfig {
  PointConfig config;
  std::vector<Color> colors;  // parallel to config.points()
};

/// Side lengths of the two simplices in Q_{s,a} * Q_{t,b}.
struct SimplexProductSpec {
  std::size_t s;
  std::size_t t;
  double a;
  double b;

  SimplexProductSpec(std::size_t s, std::size_t t, double a, double b);
};

double distance(const Point& x, const Point& y);

/// Q_{s,a}: the s points (a/sqrt2) e_k of R^s, a regular simplex of side a.
PointConfig simplex_points(std::size_t s, double a);

/// K1 * K2 in R^(dim1 + dim2), ordered by (left index, right index). Labels
/// are joined with '*' when either side is labeled; an unlabeled side
/// contributes its 1-based point index.
PointConfig cartesian_product(const PointConfig& left, const PointConfig& right);

/// Image of edge u_i v_j (0-based i, j): a/sqrt2 at coordinate i and b/sqrt2
/// at coordinate s + j. Throws Errc::index_out_of_range.
Point phi(const SimplexProductSpec& spec, std::size_t i, std::size_t j);

/// Q_{n1,a} * Q_{n2,b} with point phi(u_i v_j) colored by edge (i, j) and
/// labeled "u<i>v<j>" (1-based).
ColoredConfig embed_coloring(const BipartiteColoring& coloring, double a, double b);

/// Bijection k1[p] -> k2[result[p]] under which all pairwise distances agree
/// within tol, or std::nullopt. Sorted distance multisets are compared first,
/// then a backtracking assignment runs over the distance matrices.
std::optional<std::vector<std::size_t>> congruent(const PointConfig& k1, const PointConfig& k2,
                                                  double tol = kGeometricTolerance);

/// Outcome of carrying a detected biclique through phi.
struct TranslationReport {
  enum class Branch { none, mono, rainbow };

  Branch branch = Branch::none;
  std::optional<BicliqueCertificate> certificate;
  /// phi-image of the certificate block inside Q_{n1,a} * Q_{n2,b}.
  std::optional<ColoredConfig> image;
  /// Q_{s,a} * Q_{t,b} for the block's shape.
  std::optional<PointConfig> target;
  std::optional<std::vector<std::size_t>> correspondence;
  bool congruent = false;
  /// Image colors are all equal (mono) or pairwise distinct (rainbow).
  bool colors_ok = false;

  bool holds() const noexcept { return branch == Branch::none || (congruent && colors_ok); }
};

const char* to_string(TranslationReport::Branch branch) noexcept;

/// Runs find_any and checks that the witness maps to a congruent copy of
/// the matching simplex product with the same color property.
TranslationReport verify_translation(const BipartiteColoring& coloring, BicliquePattern rainbow,
                                     BicliquePattern mono, double a, double b,
                                     double tol = kGeometricTolerance);

// --- Point configuration files ----------------------------------------------

struct PointFile {
  PointConfig config;
  std::optional<std::vector<Color>> colors;
};

/// "dim npoints" header, then one point per line: coordinates, an optional
/// color column, and an optional trailing "# label".
std::string write_points(const PointConfig& config, const std::vector<Color>* colors = nullptr);
PointFile read_points(std::string_view text);

}  // namespace gallai
