#include "gallai/detect.hpp"

#include <algorithm>
#include <numeric>

#include "gallai/errors.hpp"
#include "gallai/random.hpp"

namespace gallai {

namespace {

using Indices = std::vector<std::size_t>;

// One vertex of the enumerated side together with its neighbours (in a single
// color class) on the other side.
struct Candidate {
  std::size_t index;
  IndexSet mask;
};

Indices first_bits(const IndexSet& set, std::size_t count) {
  Indices out;
  out.reserve(count);
  for (auto k = set.find_first(); k != IndexSet::npos && out.size() < count;
       k = set.find_next(k)) {
    out.push_back(k);
  }
  return out;
}

std::size_t max_multiplicity(std::vector<Color> colors) {
  std::sort(colors.begin(), colors.end());
  std::size_t best = 0;
  for (std::size_t k = 0; k < colors.size();) {
    std::size_t run = 1;
    while (k + run < colors.size() && colors[k + run] == colors[k]) ++run;
    best = std::max(best, run);
    k += run;
  }
  return best;
}

std::size_t distinct_count(std::vector<Color> colors) {
  std::sort(colors.begin(), colors.end());
  return static_cast<std::size_t>(std::unique(colors.begin(), colors.end()) - colors.begin());
}

std::vector<Color> column(const BipartiteColoring& c, std::size_t j) {
  std::vector<Color> out(c.n1());
  for (std::size_t i = 0; i < c.n1(); ++i) out[i] = c(i, j);
  return out;
}

// Cells grouped by color: `order` lists cell indices sorted by (color, index).
struct ColorGroups {
  std::vector<std::size_t> order;
  std::vector<std::size_t> starts;  // group g is order[starts[g] .. starts[g+1])
};

ColorGroups group_by_color(const BipartiteColoring& c) {
  ColorGroups g;
  const auto cells = c.cells();
  g.order.resize(cells.size());
  std::iota(g.order.begin(), g.order.end(), std::size_t{0});
  std::stable_sort(g.order.begin(), g.order.end(),
                   [&](std::size_t a, std::size_t b) { return cells[a] < cells[b]; });
  for (std::size_t k = 0; k < g.order.size(); ++k) {
    if (k == 0 || cells[g.order[k]] != cells[g.order[k - 1]]) g.starts.push_back(k);
  }
  g.starts.push_back(g.order.size());
  return g;
}

// Depth-first enumeration of `size`-subsets of `cands` (in list order) whose
// masks share at least `need` bits.
class SubsetEnumerator {
 public:
  SubsetEnumerator(const std::vector<Candidate>& cands, std::size_t size, std::size_t need)
      : cands_(cands), size_(size), need_(need), stack_(size) {}

  // Calls visit(chosen positions, intersection) for each qualifying subset in
  // lexicographic order; stops as soon as visit returns true.
  template <typename Visit>
  bool run(Visit&& visit) {
    chosen_.clear();
    return descend(0, visit);
  }

 private:
  template <typename Visit>
  bool descend(std::size_t start, Visit& visit) {
    const std::size_t depth = chosen_.size();
    if (depth == size_) return visit(chosen_, stack_[size_ - 1]);
    for (std::size_t k = start; k + (size_ - depth) <= cands_.size(); ++k) {
      IndexSet& next = stack_[depth];
      next = cands_[k].mask;
      if (depth > 0) next &= stack_[depth - 1];
      if (next.count() < need_) continue;
      chosen_.push_back(k);
      if (descend(k + 1, visit)) return true;
      chosen_.pop_back();
    }
    return false;
  }

  const std::vector<Candidate>& cands_;
  std::size_t size_;
  std::size_t need_;
  std::vector<IndexSet> stack_;
  Indices chosen_;
};

using Block = std::pair<Indices, Indices>;  // (rows, cols)

}  // namespace

std::optional<BicliqueCertificate> find_mono_biclique(const BipartiteColoring& c,
                                                      BicliquePattern p) {
  if (p.s > c.n1() || p.t > c.n2()) return std::nullopt;
  const bool transpose = p.s == p.t && c.n2() < c.n1();
  const std::size_t n_enum = transpose ? c.n2() : c.n1();
  const std::size_t n_other = transpose ? c.n1() : c.n2();
  const std::size_t pick = transpose ? p.t : p.s;
  const std::size_t need = transpose ? p.s : p.t;

  std::optional<Block> best;
  const ColorGroups groups = group_by_color(c);
  std::vector<std::ptrdiff_t> slot(n_enum, -1);
  std::vector<Candidate> cands;

  for (std::size_t g = 0; g + 1 < groups.starts.size(); ++g) {
    // Per-color adjacency of the enumerated side, in ascending vertex order.
    cands.clear();
    std::vector<std::size_t> touched;
    for (std::size_t k = groups.starts[g]; k < groups.starts[g + 1]; ++k) {
      const std::size_t cell = groups.order[k];
      std::size_t row = cell / c.n2();
      std::size_t col = cell % c.n2();
      if (transpose) std::swap(row, col);
      if (slot[row] < 0) {
        slot[row] = static_cast<std::ptrdiff_t>(cands.size());
        cands.push_back({row, IndexSet(n_other)});
        touched.push_back(row);
      }
      cands[static_cast<std::size_t>(slot[row])].mask.set(col);
    }
    for (std::size_t v : touched) slot[v] = -1;
    std::sort(cands.begin(), cands.end(),
              [](const Candidate& a, const Candidate& b) { return a.index < b.index; });
    std::erase_if(cands, [&](const Candidate& cand) { return cand.mask.count() < need; });
    if (cands.size() < pick) continue;

    SubsetEnumerator enumerate(cands, pick, need);
    if (!transpose) {
      // The first subset found is this color's lexicographically least row set.
      enumerate.run([&](const Indices& chosen, const IndexSet& inter) {
        Block block;
        for (std::size_t k : chosen) block.first.push_back(cands[k].index);
        block.second = first_bits(inter, p.t);
        if (!best || block < *best) best = std::move(block);
        return true;
      });
    } else {
      // Enumerating columns: the least (rows, cols) pair needs the full scan.
      enumerate.run([&](const Indices& chosen, const IndexSet& inter) {
        Block block;
        block.first = first_bits(inter, p.s);
        for (std::size_t k : chosen) block.second.push_back(cands[k].index);
        if (!best || block < *best) best = std::move(block);
        return false;
      });
    }
  }
  if (!best) return std::nullopt;
  return make_certificate(c, BicliqueKind::monochromatic, std::move(best->first),
                          std::move(best->second));
}

namespace {

class RainbowSearch {
 public:
  RainbowSearch(const BipartiteColoring& c, BicliquePattern p, Indices row_order,
                Indices col_order, const IndexSet& allowed_cols)
      : c_(c),
        p_(p),
        row_order_(std::move(row_order)),
        col_order_(std::move(col_order)),
        good_(p.s + 1, IndexSet(c.n2())),
        used_(static_cast<std::size_t>(c.r()) + 1, 0) {
    good_[0] = allowed_cols;
  }

  std::optional<Block> run() {
    rows_.clear();
    cols_.clear();
    if (choose_rows(0)) return Block{rows_, cols_};
    return std::nullopt;
  }

 private:
  bool choose_rows(std::size_t pos) {
    const std::size_t depth = rows_.size();
    if (depth == p_.s) return choose_cols(0, good_[depth]);
    for (std::size_t k = pos; k + (p_.s - depth) <= row_order_.size(); ++k) {
      const std::size_t row = row_order_[k];
      // Keep only columns where the new row's color differs from every chosen row.
      IndexSet& next = good_[depth + 1];
      next = good_[depth];
      for (auto j = next.find_first(); j != IndexSet::npos; j = next.find_next(j)) {
        const Color color = c_(row, j);
        for (std::size_t q : rows_) {
          if (c_(q, j) == color) {
            next.reset(j);
            break;
          }
        }
      }
      if (next.count() < p_.t) continue;
      rows_.push_back(row);
      if (choose_rows(k + 1)) return true;
      rows_.pop_back();
    }
    return false;
  }

  bool choose_cols(std::size_t pos, const IndexSet& good) {
    const std::size_t depth = cols_.size();
    if (depth == p_.t) return true;
    for (std::size_t k = pos; k + (p_.t - depth) <= col_order_.size(); ++k) {
      const std::size_t col = col_order_[k];
      if (!good.test(col)) continue;
      bool clash = false;
      for (std::size_t q : rows_) {
        if (used_[c_(q, col)]) {
          clash = true;
          break;
        }
      }
      if (clash) continue;
      for (std::size_t q : rows_) used_[c_(q, col)] = 1;
      cols_.push_back(col);
      if (choose_cols(k + 1, good)) {
        for (std::size_t q : rows_) used_[c_(q, col)] = 0;
        return true;
      }
      cols_.pop_back();
      for (std::size_t q : rows_) used_[c_(q, col)] = 0;
    }
    return false;
  }

  const BipartiteColoring& c_;
  BicliquePattern p_;
  Indices row_order_;
  Indices col_order_;
  std::vector<IndexSet> good_;
  std::vector<char> used_;
  Indices rows_;
  Indices cols_;
};

}  // namespace

std::optional<BicliqueCertificate> find_rainbow_biclique(const BipartiteColoring& c,
                                                         BicliquePattern p) {
  if (p.s > c.n1() || p.t > c.n2()) return std::nullopt;
  if (static_cast<std::size_t>(c.r()) < p.edges()) return std::nullopt;

  // A usable row needs t distinct colors, a usable column s distinct colors.
  std::vector<std::size_t> row_distinct(c.n1()), col_distinct(c.n2());
  Indices rows, cols;
  for (std::size_t i = 0; i < c.n1(); ++i) {
    auto r = c.row(i);
    row_distinct[i] = distinct_count({r.begin(), r.end()});
    if (row_distinct[i] >= p.t) rows.push_back(i);
  }
  IndexSet allowed(c.n2());
  for (std::size_t j = 0; j < c.n2(); ++j) {
    col_distinct[j] = distinct_count(column(c, j));
    if (col_distinct[j] >= p.s) {
      cols.push_back(j);
      allowed.set(j);
    }
  }
  if (rows.size() < p.s || cols.size() < p.t) return std::nullopt;

  // Existence pass with fail-first ordering: most constrained vertices first.
  Indices ff_rows = rows, ff_cols = cols;
  std::stable_sort(ff_rows.begin(), ff_rows.end(), [&](std::size_t a, std::size_t b) {
    return row_distinct[a] < row_distinct[b];
  });
  std::stable_sort(ff_cols.begin(), ff_cols.end(), [&](std::size_t a, std::size_t b) {
    return col_distinct[a] < col_distinct[b];
  });
  if (!RainbowSearch(c, p, std::move(ff_rows), std::move(ff_cols), allowed).run()) {
    return std::nullopt;
  }

  // A witness exists; the index-ordered pass returns the least one.
  auto block = RainbowSearch(c, p, std::move(rows), std::move(cols), allowed).run();
  return make_certificate(c, BicliqueKind::rainbow, std::move(block->first),
                          std::move(block->second));
}

std::optional<BicliqueCertificate> find_any(const BipartiteColoring& c, BicliquePattern rainbow,
                                            BicliquePattern mono) {
  if (auto cert = find_mono_biclique(c, mono)) return cert;
  return find_rainbow_biclique(c, rainbow);
}

bool verify_certificate(const BipartiteColoring& c, const BicliqueCertificate& cert) {
  if (cert.rows.empty() || cert.cols.empty()) return false;
  auto distinct_in_range = [](Indices v, std::size_t bound) {
    for (std::size_t x : v) {
      if (x >= bound) return false;
    }
    std::sort(v.begin(), v.end());
    return std::adjacent_find(v.begin(), v.end()) == v.end();
  };
  if (!distinct_in_range(cert.rows, c.n1()) || !distinct_in_range(cert.cols, c.n2())) {
    return false;
  }
  if (cert.colors.size() != cert.rows.size()) return false;
  std::vector<Color> seen;
  for (std::size_t a = 0; a < cert.rows.size(); ++a) {
    if (cert.colors[a].size() != cert.cols.size()) return false;
    for (std::size_t b = 0; b < cert.cols.size(); ++b) {
      if (cert.colors[a][b] != c(cert.rows[a], cert.cols[b])) return false;
      seen.push_back(cert.colors[a][b]);
    }
  }
  if (cert.kind == BicliqueKind::monochromatic) {
    return std::all_of(seen.begin(), seen.end(), [&](Color x) { return x == seen.front(); });
  }
  return distinct_count(seen) == seen.size();
}

ColorDegree max_color_degree(const BipartiteColoring& c, std::size_t row) {
  if (row >= c.n1()) throw Error(Errc::index_out_of_range, "row " + std::to_string(row));
  auto r = c.row(row);
  std::vector<Color> colors(r.begin(), r.end());
  std::sort(colors.begin(), colors.end());
  ColorDegree best{row, colors.front(), 0};
  for (std::size_t k = 0; k < colors.size();) {
    std::size_t run = 1;
    while (k + run < colors.size() && colors[k + run] == colors[k]) ++run;
    if (run > best.edges) best = {row, colors[k], run};
    k += run;
  }
  return best;
}

PathProfile path_profile(const BipartiteColoring& c, std::size_t i, std::size_t j) {
  if (i >= c.n1() || j >= c.n1()) {
    throw Error(Errc::index_out_of_range, "row pair (" + std::to_string(i) + ", " +
                                              std::to_string(j) + ") outside 0.." +
                                              std::to_string(c.n1() - 1));
  }
  if (i == j) throw Error(Errc::invalid_argument, "path profile needs two distinct rows");

  PathProfile prof{i, j, 0, {}, {}, std::nullopt};
  std::vector<Color> pcolors;  // colors used by the family, kept sorted
  auto in_family = [&](Color x) {
    return std::binary_search(pcolors.begin(), pcolors.end(), x);
  };
  for (std::size_t k = 0; k < c.n2(); ++k) {
    const Color a = c(i, k), b = c(j, k);
    if (a == b) {
      ++prof.mono_count;
      continue;
    }
    prof.rainbow_cols.push_back(k);
    if (!in_family(a) && !in_family(b)) {
      prof.pset.push_back(k);
      pcolors.insert(std::upper_bound(pcolors.begin(), pcolors.end(), a), a);
      pcolors.insert(std::upper_bound(pcolors.begin(), pcolors.end(), b), b);
    }
  }

  Indices outside;
  std::set_difference(prof.rainbow_cols.begin(), prof.rainbow_cols.end(), prof.pset.begin(),
                      prof.pset.end(), std::back_inserter(outside));
  if (outside.empty()) return prof;

  // Each outside path shares a color with the family; pick the family color
  // shared most often, then the endpoint carrying most of those edges.
  Color best_color = 0;
  std::size_t best_count = 0;
  for (Color x : pcolors) {
    std::size_t count = 0;
    for (std::size_t k : outside) {
      if (c(i, k) == x || c(j, k) == x) ++count;
    }
    if (count > best_count) {
      best_count = count;
      best_color = x;
    }
  }
  std::size_t at_i = 0, at_j = 0;
  for (std::size_t k : outside) {
    if (c(i, k) == best_color) ++at_i;
    if (c(j, k) == best_color) ++at_j;
  }
  const std::size_t quarter = 4 * prof.pset.size();
  prof.heavy = ColorDegreeWitness{at_i >= at_j ? i : j, best_color, std::max(at_i, at_j),
                                  (outside.size() + quarter - 1) / quarter};
  return prof;
}

std::optional<BicliqueCertificate> sample_rainbow(const BipartiteColoring& c, BicliquePattern p,
                                                  std::size_t d, std::size_t trials,
                                                  std::uint64_t seed) {
  if (d == 0 || trials == 0) {
    throw Error(Errc::invalid_argument, "d and trials must be positive");
  }
  Indices rows, cols;
  for (std::size_t i = 0; i < c.n1(); ++i) {
    auto r = c.row(i);
    if (max_multiplicity({r.begin(), r.end()}) < d) rows.push_back(i);
  }
  for (std::size_t j = 0; j < c.n2(); ++j) {
    if (max_multiplicity(column(c, j)) < d) cols.push_back(j);
  }
  if (rows.size() < p.s || cols.size() < p.t) {
    throw Error(Errc::insufficient_vertices,
                std::to_string(rows.size()) + " low-degree rows and " +
                    std::to_string(cols.size()) + " low-degree columns for K_{" +
                    std::to_string(p.s) + "," + std::to_string(p.t) + "}");
  }
  if (static_cast<std::size_t>(c.r()) < p.edges()) return std::nullopt;

  Xoshiro256 rng(seed);
  std::vector<Color> block(p.edges());
  for (std::size_t trial = 0; trial < trials; ++trial) {
    shuffle_prefix(std::span<std::size_t>(rows), p.s, rng);
    shuffle_prefix(std::span<std::size_t>(cols), p.t, rng);
    std::size_t k = 0;
    for (std::size_t a = 0; a < p.s; ++a) {
      for (std::size_t b = 0; b < p.t; ++b) block[k++] = c(rows[a], cols[b]);
    }
    if (distinct_count(block) == block.size()) {
      Indices rs(rows.begin(), rows.begin() + static_cast<std::ptrdiff_t>(p.s));
      Indices cs(cols.begin(), cols.begin() + static_cast<std::ptrdiff_t>(p.t));
      std::sort(rs.begin(), rs.end());
      std::sort(cs.begin(), cs.end());
      return make_certificate(c, BicliqueKind::rainbow, std::move(rs), std::move(cs));
    }
  }
  return std::nullopt;
}

}  // namespace gallai
