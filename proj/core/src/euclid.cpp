#include "gallai/euclid.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>

#include "gallai/detect.hpp"
#include "gallai/errors.hpp"

namespace gallai {

namespace {

const double kSqrtHalf = std::sqrt(0.5);

}  // namespace

double distance(const Point& x, const Point& y) {
  if (x.size() != y.size()) throw Error(Errc::dimension_mismatch, "points of different dimension");
  double sum = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    const double d = x[k] - y[k];
    sum += d * d;
  }
  return std::sqrt(sum);
}

PointConfig::PointConfig(std::size_t dim, std::vector<Point> points,
                         std::vector<std::string> labels)
    : dim_(dim), points_(std::move(points)), labels_(std::move(labels)) {
  if (dim_ == 0) throw Error(Errc::invalid_argument, "dimension must be positive");
  if (!labels_.empty() && labels_.size() != points_.size()) {
    throw Error(Errc::dimension_mismatch, "labels must be empty or one per point");
  }
  for (std::size_t p = 0; p < points_.size(); ++p) {
    if (points_[p].size() != dim_) {
      throw Error(Errc::dimension_mismatch, "point " + std::to_string(p + 1) + " has " +
                                                std::to_string(points_[p].size()) +
                                                " coordinates, expected " + std::to_string(dim_));
    }
    for (std::size_t q = 0; q < p; ++q) {
      if (distance(points_[p], points_[q]) <= kGeometricTolerance) {
        throw Error(Errc::invalid_argument, "points " + std::to_string(q + 1) + " and " +
                                                std::to_string(p + 1) + " coincide");
      }
    }
  }
}

PointConfig::PointConfig(Trusted, std::size_t dim, std::vector<Point> points,
                         std::vector<std::string> labels)
    : dim_(dim), points_(std::move(points)), labels_(std::move(labels)) {}

SimplexProductSpec::SimplexProductSpec(std::size_t s_, std::size_t t_, double a_, double b_)
    : s(s_), t(t_), a(a_), b(b_) {
  if (s == 0 || t == 0) throw Error(Errc::invalid_argument, "s and t must be positive");
  if (!(a > 0.0) || !(b > 0.0)) throw Error(Errc::invalid_argument, "a and b must be positive");
}

PointConfig simplex_points(std::size_t s, double a) {
  if (s == 0) throw Error(Errc::invalid_argument, "simplex needs at least one point");
  if (!(a > 0.0)) throw Error(Errc::invalid_argument, "side length must be positive");
  std::vector<Point> points(s, Point(s, 0.0));
  for (std::size_t k = 0; k < s; ++k) points[k][k] = a * kSqrtHalf;
  return PointConfig(PointConfig::Trusted{}, s, std::move(points), {});
}

PointConfig cartesian_product(const PointConfig& left, const PointConfig& right) {
  const bool labeled = !left.labels().empty() || !right.labels().empty();
  auto label = [](const PointConfig& k, std::size_t p) {
    return k.labels().empty() ? std::to_string(p + 1) : k.labels()[p];
  };
  std::vector<Point> points;
  std::vector<std::string> labels;
  points.reserve(left.size() * right.size());
  for (std::size_t p = 0; p < left.size(); ++p) {
    for (std::size_t q = 0; q < right.size(); ++q) {
      Point x = left[p];
      x.insert(x.end(), right[q].begin(), right[q].end());
      points.push_back(std::move(x));
      if (labeled) labels.push_back(label(left, p) + "*" + label(right, q));
    }
  }
  return PointConfig(PointConfig::Trusted{}, left.dim() + right.dim(), std::move(points),
                     std::move(labels));
}

Point phi(const SimplexProductSpec& spec, std::size_t i, std::size_t j) {
  if (i >= spec.s || j >= spec.t) {
    throw Error(Errc::index_out_of_range, "edge (" + std::to_string(i) + ", " +
                                              std::to_string(j) + ") outside K_{" +
                                              std::to_string(spec.s) + "," +
                                              std::to_string(spec.t) + "}");
  }
  Point x(spec.s + spec.t, 0.0);
  x[i] = spec.a * kSqrtHalf;
  x[spec.s + j] = spec.b * kSqrtHalf;
  return x;
}

ColoredConfig embed_coloring(const BipartiteColoring& coloring, double a, double b) {
  const SimplexProductSpec spec(coloring.n1(), coloring.n2(), a, b);
  std::vector<Point> points;
  std::vector<std::string> labels;
  std::vector<Color> colors;
  points.reserve(coloring.cells().size());
  for (std::size_t i = 0; i < coloring.n1(); ++i) {
    for (std::size_t j = 0; j < coloring.n2(); ++j) {
      points.push_back(phi(spec, i, j));
      labels.push_back("u" + std::to_string(i + 1) + "v" + std::to_string(j + 1));
      colors.push_back(coloring(i, j));
    }
  }
  return {PointConfig(PointConfig::Trusted{}, spec.s + spec.t, std::move(points),
                      std::move(labels)),
          std::move(colors)};
}

namespace {

std::vector<double> distance_matrix(const PointConfig& k) {
  const std::size_t n = k.size();
  std::vector<double> d(n * n, 0.0);
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = p + 1; q < n; ++q) d[p * n + q] = d[q * n + p] = distance(k[p], k[q]);
  }
  return d;
}

bool sorted_close(std::vector<double> x, std::vector<double> y, double tol) {
  if (x.size() != y.size()) return false;
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (std::abs(x[k] - y[k]) > tol) return false;
  }
  return true;
}

class CongruenceSearch {
 public:
  CongruenceSearch(std::size_t n, std::vector<double> d1, std::vector<double> d2,
                   std::vector<std::vector<std::size_t>> candidates, double tol)
      : n_(n), d1_(std::move(d1)), d2_(std::move(d2)), cand_(std::move(candidates)), tol_(tol),
        map_(n), taken_(n, 0) {}

  std::optional<std::vector<std::size_t>> run() {
    if (assign(0)) return map_;
    return std::nullopt;
  }

 private:
  bool assign(std::size_t p) {
    if (p == n_) return true;
    for (std::size_t q : cand_[p]) {
      if (taken_[q]) continue;
      bool ok = true;
      for (std::size_t prev = 0; prev < p && ok; ++prev) {
        ok = std::abs(d1_[p * n_ + prev] - d2_[q * n_ + map_[prev]]) <= tol_;
      }
      if (!ok) continue;
      map_[p] = q;
      taken_[q] = 1;
      if (assign(p + 1)) return true;
      taken_[q] = 0;
    }
    return false;
  }

  std::size_t n_;
  std::vector<double> d1_, d2_;
  std::vector<std::vector<std::size_t>> cand_;
  double tol_;
  std::vector<std::size_t> map_;
  std::vector<char> taken_;
};

}  // namespace

std::optional<std::vector<std::size_t>> congruent(const PointConfig& k1, const PointConfig& k2,
                                                  double tol) {
  if (!(tol > 0.0)) throw Error(Errc::invalid_argument, "tolerance must be positive");
  const std::size_t n = k1.size();
  if (k2.size() != n) return std::nullopt;
  if (n == 0) return std::vector<std::size_t>{};
  const auto d1 = distance_matrix(k1);
  const auto d2 = distance_matrix(k2);

  std::vector<double> all1, all2;
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = p + 1; q < n; ++q) {
      all1.push_back(d1[p * n + q]);
      all2.push_back(d2[p * n + q]);
    }
  }
  if (!sorted_close(std::move(all1), std::move(all2), tol)) return std::nullopt;

  // A point can only map to one with a matching sorted distance profile.
  std::vector<std::vector<std::size_t>> candidates(n);
  for (std::size_t p = 0; p < n; ++p) {
    std::vector<double> row1(d1.begin() + static_cast<std::ptrdiff_t>(p * n),
                             d1.begin() + static_cast<std::ptrdiff_t>((p + 1) * n));
    for (std::size_t q = 0; q < n; ++q) {
      std::vector<double> row2(d2.begin() + static_cast<std::ptrdiff_t>(q * n),
                               d2.begin() + static_cast<std::ptrdiff_t>((q + 1) * n));
      if (sorted_close(row1, std::move(row2), tol)) candidates[p].push_back(q);
    }
    if (candidates[p].empty()) return std::nullopt;
  }
  return CongruenceSearch(n, d1, d2, std::move(candidates), tol).run();
}

const char* to_string(TranslationReport::Branch branch) noexcept {
  switch (branch) {
    case TranslationReport::Branch::none: return "none";
    case TranslationReport::Branch::mono: return "mono";
    case TranslationReport::Branch::rainbow: return "rainbow";
  }
  return "?";
}

TranslationReport verify_translation(const BipartiteColoring& coloring, BicliquePattern rainbow,
                                     BicliquePattern mono, double a, double b, double tol) {
  TranslationReport report;
  auto cert = find_any(coloring, rainbow, mono);
  if (!cert) return report;
  report.branch = cert->kind == BicliqueKind::monochromatic ? TranslationReport::Branch::mono
                                                            : TranslationReport::Branch::rainbow;

  const SimplexProductSpec host(coloring.n1(), coloring.n2(), a, b);
  std::vector<Point> points;
  std::vector<std::string> labels;
  std::vector<Color> colors;
  for (std::size_t i : cert->rows) {
    for (std::size_t j : cert->cols) {
      points.push_back(phi(host, i, j));
      labels.push_back("u" + std::to_string(i + 1) + "v" + std::to_string(j + 1));
      colors.push_back(coloring(i, j));
    }
  }
  ColoredConfig image{PointConfig(host.s + host.t, std::move(points), std::move(labels)),
                      std::move(colors)};
  PointConfig target =
      cartesian_product(simplex_points(cert->rows.size(), a), simplex_points(cert->cols.size(), b));

  report.correspondence = congruent(image.config, target, tol);
  report.congruent = report.correspondence.has_value();
  auto sorted = image.colors;
  std::sort(sorted.begin(), sorted.end());
  if (report.branch == TranslationReport::Branch::mono) {
    report.colors_ok = sorted.front() == sorted.back();
  } else {
    report.colors_ok = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  }
  report.certificate = std::move(cert);
  report.image = std::move(image);
  report.target = std::move(target);
  return report;
}

// --- Point configuration files ----------------------------------------------

namespace {

std::string format_double(double x) {
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), ptr);
}

}  // namespace

std::string write_points(const PointConfig& config, const std::vector<Color>* colors) {
  if (colors && colors->size() != config.size()) {
    throw Error(Errc::dimension_mismatch, "one color per point expected");
  }
  std::string out = std::to_string(config.dim()) + " " + std::to_string(config.size()) + "\n";
  for (std::size_t p = 0; p < config.size(); ++p) {
    for (std::size_t k = 0; k < config.dim(); ++k) {
      if (k > 0) out += ' ';
      out += format_double(config[p][k]);
    }
    if (colors) out += " " + std::to_string((*colors)[p]);
    if (!config.labels().empty()) out += " # " + config.labels()[p];
    out += '\n';
  }
  return out;
}

PointFile read_points(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    if (nl == std::string_view::npos) throw ParseError(lines.size() + 1, 1, "missing trailing newline");
    lines.push_back(text.substr(0, nl));
    text.remove_prefix(nl + 1);
  }
  if (lines.empty()) throw ParseError(1, 1, "missing header \"dim npoints\"");

  auto split = [](std::string_view line) {
    std::vector<std::pair<std::string_view, std::size_t>> tokens;
    std::size_t pos = 0;
    while (pos < line.size()) {
      while (pos < line.size() && line[pos] == ' ') ++pos;
      if (pos >= line.size()) break;
      std::size_t end = line.find(' ', pos);
      if (end == std::string_view::npos) end = line.size();
      tokens.emplace_back(line.substr(pos, end - pos), pos + 1);
      pos = end;
    }
    return tokens;
  };
  auto to_size = [](std::string_view tok, std::size_t line, std::size_t col) {
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw ParseError(line, col, "expected a non-negative integer");
    }
    return v;
  };

  const auto header = split(lines[0]);
  if (header.size() != 2) throw ParseError(1, 1, "header must be \"dim npoints\"");
  const std::size_t dim = to_size(header[0].first, 1, header[0].second);
  const std::size_t count = to_size(header[1].first, 1, header[1].second);
  if (lines.size() != count + 1) {
    throw ParseError(lines.size() + 1, 1, "expected " + std::to_string(count) + " point lines");
  }

  std::vector<Point> points;
  std::vector<std::string> labels;
  std::vector<Color> colors;
  std::optional<bool> colored;
  for (std::size_t p = 0; p < count; ++p) {
    const std::size_t line_no = p + 2;
    std::string_view line = lines[p + 1];
    const auto hash = line.find('#');
    if (hash != std::string_view::npos) {
      std::string_view label = line.substr(hash + 1);
      if (!label.empty() && label.front() == ' ') label.remove_prefix(1);
      labels.emplace_back(label);
      line = line.substr(0, hash);
    } else if (!labels.empty()) {
      throw ParseError(line_no, 1, "labels must be given for every point or none");
    }
    const auto tokens = split(line);
    if (tokens.size() != dim && tokens.size() != dim + 1) {
      throw ParseError(line_no, 1, "expected " + std::to_string(dim) + " coordinates");
    }
    const bool has_color = tokens.size() == dim + 1;
    if (colored && *colored != has_color) {
      throw ParseError(line_no, 1, "color column must be present on every line or none");
    }
    colored = has_color;
    Point x(dim);
    for (std::size_t k = 0; k < dim; ++k) {
      const auto [tok, col] = tokens[k];
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), x[k]);
      if (ec != std::errc() || ptr != tok.data() + tok.size()) {
        throw ParseError(line_no, col, "expected a decimal coordinate");
      }
    }
    if (has_color) {
      const std::size_t c = to_size(tokens[dim].first, line_no, tokens[dim].second);
      if (c == 0) throw ParseError(line_no, tokens[dim].second, "colors are 1-based");
      colors.push_back(static_cast<Color>(c));
    }
    points.push_back(std::move(x));
  }
  if (!labels.empty() && labels.size() != points.size()) {
    throw ParseError(2, 1, "labels must be given for every point or none");
  }
  PointFile file{PointConfig(dim, std::move(points), std::move(labels)), std::nullopt};
  if (colored.value_or(false)) file.colors = std::move(colors);
  return file;
}

}  // namespace gallai
