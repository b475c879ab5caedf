#include "gallai/search.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <vector>

#include "gallai/errors.hpp"

namespace gallai {

const char* to_string(AvoidanceResult::Outcome outcome) noexcept {
  return outcome == AvoidanceResult::Outcome::found ? "found" : "exhausted";
}

namespace {

void check_instance(std::size_t n1, std::size_t n2, Color r) {
  if (n1 == 0 || n2 == 0 || r == 0) {
    throw Error(Errc::invalid_argument, "search needs positive n1, n2, r");
  }
  if (n1 > kMaxEdges / n2) {
    throw Error(Errc::invalid_argument, "n1 * n2 exceeds the supported edge count");
  }
}

// Row-major DFS over partial grids. Cell value 0 means unassigned.
class GridSearch {
 public:
  GridSearch(std::size_t n1, std::size_t n2, Color r, std::optional<BicliquePattern> rainbow,
             std::optional<BicliquePattern> mono, std::uint64_t budget)
      : n1_(n1),
        n2_(n2),
        r_(r),
        rainbow_(rainbow),
        mono_(mono),
        budget_(budget),
        grid_(n1 * n2, 0),
        masks_(static_cast<std::size_t>(r) + 1, std::vector<IndexSet>(n1, IndexSet(n2))),
        used_(static_cast<std::size_t>(r) + 1, 0) {
    if (rainbow_ && static_cast<std::size_t>(r_) < rainbow_->edges()) rainbow_.reset();
    if (rainbow_ && (rainbow_->s > n1_ || rainbow_->t > n2_)) rainbow_.reset();
    if (mono_ && (mono_->s > n1_ || mono_->t > n2_)) mono_.reset();
  }

  // visit(grid, colors used) returns false to stop; run returns false if stopped.
  template <typename Visit>
  bool run(Visit&& visit) {
    return descend(0, 0, visit);
  }

  std::uint64_t nodes() const { return nodes_; }
  std::uint64_t prunes() const { return prunes_; }
  std::uint64_t leaves() const { return leaves_; }

  BipartiteColoring snapshot() const { return BipartiteColoring(n1_, n2_, r_, grid_); }

 private:
  template <typename Visit>
  bool descend(std::size_t cell, Color max_used, Visit& visit) {
    if (cell == grid_.size()) {
      ++leaves_;
      return visit(*this, max_used);
    }
    const std::size_t i = cell / n2_, j = cell % n2_;
    const Color limit = std::min<Color>(r_, max_used + 1);
    prunes_ += r_ - limit;
    for (Color c = 1; c <= limit; ++c) {
      if (++nodes_ > budget_) throw BudgetExceeded(nodes_, budget_);
      grid_[cell] = c;
      masks_[c][i].set(j);
      const bool violated = completes_mono(i, j, c) || completes_rainbow(i, j, c);
      bool keep_going = true;
      if (!violated) keep_going = descend(cell + 1, std::max(max_used, c), visit);
      masks_[c][i].reset(j);
      grid_[cell] = 0;
      if (!keep_going) return false;
    }
    return true;
  }

  Color at(std::size_t i, std::size_t j) const { return grid_[i * n2_ + j]; }

  // A monochromatic block whose last cell is (i, j): s-1 earlier rows that
  // also have color c at column j, sharing t columns with row i.
  bool completes_mono(std::size_t i, std::size_t j, Color c) {
    if (!mono_ || i + 1 < mono_->s || j + 1 < mono_->t) return false;
    const IndexSet& own = masks_[c][i];
    if (own.count() < mono_->t) return false;
    if (mono_->s == 1) return true;
    cand_.clear();
    for (std::size_t k = 0; k < i; ++k) {
      if (at(k, j) == c) cand_.push_back(k);
    }
    if (cand_.size() + 1 < mono_->s) return false;
    inter_.resize(mono_->s);
    inter_[0] = own;
    return mono_rows(0, 1, c);
  }

  bool mono_rows(std::size_t start, std::size_t depth, Color c) {
    if (depth == mono_->s) return true;
    for (std::size_t k = start; k + (mono_->s - depth) <= cand_.size(); ++k) {
      inter_[depth] = inter_[depth - 1];
      inter_[depth] &= masks_[c][cand_[k]];
      if (inter_[depth].count() < mono_->t) continue;
      if (mono_rows(k + 1, depth + 1, c)) return true;
    }
    return false;
  }

  // A rainbow block whose last cell is (i, j): rows from [0, i] and columns
  // from [0, j], containing row i and column j.
  bool completes_rainbow(std::size_t i, std::size_t j, Color c) {
    if (!rainbow_ || i + 1 < rainbow_->s || j + 1 < rainbow_->t) return false;
    rows_.assign(1, i);
    used_[c] = 1;
    const bool hit = rainbow_rows(0, i, j);
    used_[c] = 0;
    return hit;
  }

  // Extends rows_ with rows below `start`, keeping column j rainbow.
  bool rainbow_rows(std::size_t start, std::size_t i, std::size_t j) {
    if (rows_.size() == rainbow_->s) return rainbow_cols(0, 1, j);
    for (std::size_t k = start; k < i; ++k) {
      if (rainbow_->s - rows_.size() > i - k) break;
      const Color x = at(k, j);
      if (used_[x]) continue;
      used_[x] = 1;
      rows_.push_back(k);
      const bool hit = rainbow_rows(k + 1, i, j);
      rows_.pop_back();
      used_[x] = 0;
      if (hit) return true;
    }
    return false;
  }

  bool rainbow_cols(std::size_t start, std::size_t depth, std::size_t j) {
    if (depth == rainbow_->t) return true;
    for (std::size_t col = start; col < j; ++col) {
      if (rainbow_->t - depth > j - col) break;
      std::size_t marked = 0;
      bool ok = true;
      for (std::size_t q : rows_) {
        const Color x = at(q, col);
        if (used_[x]) {
          ok = false;
          break;
        }
        used_[x] = 1;
        ++marked;
      }
      bool hit = false;
      if (ok) hit = rainbow_cols(col + 1, depth + 1, j);
      for (std::size_t m = 0; m < marked; ++m) used_[at(rows_[m], col)] = 0;
      if (hit) return true;
    }
    return false;
  }

  std::size_t n1_, n2_;
  Color r_;
  std::optional<BicliquePattern> rainbow_;
  std::optional<BicliquePattern> mono_;
  std::uint64_t budget_;
  std::vector<Color> grid_;
  std::vector<std::vector<IndexSet>> masks_;  // [color][row] -> columns
  std::vector<char> used_;
  std::vector<std::size_t> cand_;
  std::vector<IndexSet> inter_;
  std::vector<std::size_t> rows_;
  std::uint64_t nodes_ = 0;
  std::uint64_t prunes_ = 0;
  std::uint64_t leaves_ = 0;
};

}  // namespace

AvoidanceResult exists_avoiding(std::size_t n1, std::size_t n2, Color r, BicliquePattern rainbow,
                                BicliquePattern mono, const SearchOptions& options) {
  check_instance(n1, n2, r);
  GridSearch search(n1, n2, r, rainbow, mono, options.node_budget);
  std::optional<BipartiteColoring> witness;
  search.run([&](const GridSearch& s, Color) {
    witness = s.snapshot();
    return false;
  });
  AvoidanceResult result{witness ? AvoidanceResult::Outcome::found
                                 : AvoidanceResult::Outcome::exhausted,
                         std::move(witness), search.nodes(), search.prunes()};
  return result;
}

EnumerationStats for_each_avoiding(std::size_t n1, std::size_t n2, Color r,
                                   BicliquePattern rainbow, BicliquePattern mono,
                                   const std::function<bool(const BipartiteColoring&)>& visit,
                                   const SearchOptions& options) {
  check_instance(n1, n2, r);
  GridSearch search(n1, n2, r, rainbow, mono, options.node_budget);
  search.run([&](const GridSearch& s, Color) { return visit(s.snapshot()); });
  return {search.leaves(), search.nodes(), search.prunes()};
}

EnumerationStats for_each_canonical(
    std::size_t n1, std::size_t n2, Color r,
    const std::function<bool(const BipartiteColoring&, Color)>& visit,
    const SearchOptions& options) {
  check_instance(n1, n2, r);
  GridSearch search(n1, n2, r, std::nullopt, std::nullopt, options.node_budget);
  search.run([&](const GridSearch& s, Color used) { return visit(s.snapshot(), used); });
  return {search.leaves(), search.nodes(), search.prunes()};
}

std::uint64_t relabeling_orbit_size(Color r, Color k) {
  if (k > r) return 0;
  std::uint64_t out = 1;
  for (Color x = 0; x < k; ++x) out *= r - x;
  return out;
}

std::optional<std::size_t> min_forcing_n2(std::size_t n1, Color r, BicliquePattern rainbow,
                                          BicliquePattern mono, std::size_t n2_max,
                                          const SearchOptions& options) {
  for (std::size_t n2 = 1; n2 <= n2_max; ++n2) {
    auto result = exists_avoiding(n1, n2, r, rainbow, mono, options);
    if (result.outcome == AvoidanceResult::Outcome::exhausted) return n2;
  }
  return std::nullopt;
}

namespace {

class ZarankiewiczSearch {
 public:
  ZarankiewiczSearch(std::size_t m, std::size_t n, std::size_t s, std::size_t t,
                     std::uint64_t budget)
      : m_(m), s_(s), t_(t), budget_(budget) {
    masks_.resize(std::size_t{1} << n);
    std::iota(masks_.begin(), masks_.end(), 0u);
    // Non-increasing (degree, mask): any row multiset has exactly one such order.
    std::sort(masks_.begin(), masks_.end(), [](unsigned a, unsigned b) {
      const int pa = std::popcount(a), pb = std::popcount(b);
      return pa != pb ? pa > pb : a > b;
    });
    if (s_ == 1) {
      std::erase_if(masks_, [&](unsigned x) { return std::popcount(x) >= static_cast<int>(t_); });
    }
  }

  std::uint64_t solve() {
    rows_.clear();
    descend(0, 0);
    return best_;
  }

 private:
  void descend(std::size_t first, std::uint64_t edges) {
    if (rows_.size() == m_) {
      best_ = std::max(best_, edges);
      found_ = true;
      return;
    }
    const std::size_t remaining = m_ - rows_.size();
    for (std::size_t k = first; k < masks_.size(); ++k) {
      const unsigned x = masks_[k];
      // Later rows have degree <= popcount(x).
      if (found_ && edges + remaining * static_cast<std::uint64_t>(std::popcount(x)) <= best_) {
        return;
      }
      if (++nodes_ > budget_) throw BudgetExceeded(nodes_, budget_);
      if (creates_biclique(x)) continue;
      rows_.push_back(x);
      descend(k, edges + static_cast<std::uint64_t>(std::popcount(x)));
      rows_.pop_back();
    }
  }

  // Does row x together with s-1 earlier rows share t columns?
  bool creates_biclique(unsigned x) const {
    if (s_ == 1) return std::popcount(x) >= static_cast<int>(t_);
    return shares(0, 1, x);
  }

  bool shares(std::size_t start, std::size_t depth, unsigned inter) const {
    if (std::popcount(inter) < static_cast<int>(t_)) return false;
    if (depth == s_) return true;
    for (std::size_t k = start; k < rows_.size(); ++k) {
      if (shares(k + 1, depth + 1, inter & rows_[k])) return true;
    }
    return false;
  }

  std::size_t m_, s_, t_;
  std::uint64_t budget_;
  std::vector<unsigned> masks_;
  std::vector<unsigned> rows_;
  std::uint64_t best_ = 0;
  bool found_ = false;
  std::uint64_t nodes_ = 0;
};

}  // namespace

std::uint64_t zarankiewicz_exact(std::size_t m, std::size_t n, std::size_t s, std::size_t t,
                                 const SearchOptions& options) {
  if (m == 0 || n == 0 || s == 0 || t == 0) {
    throw Error(Errc::invalid_argument, "zarankiewicz_exact needs positive m, n, s, t");
  }
  if (m > kZarankiewiczMaxSide || n > kZarankiewiczMaxSide) {
    throw Error(Errc::invalid_argument, "zarankiewicz_exact supports m, n <= " +
                                            std::to_string(kZarankiewiczMaxSide));
  }
  if (s > m || t > n) return static_cast<std::uint64_t>(m * n);
  return ZarankiewiczSearch(m, n, s, t, options.node_budget).solve();
}

}  // namespace gallai
