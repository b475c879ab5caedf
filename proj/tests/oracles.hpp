#pragma once

// Slow, obviously-correct reference implementations used to cross-check the
// library. Nothing here shares code with core/.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gallai/coloring.hpp"

namespace oracle {

using Grid = std::vector<std::vector<std::uint32_t>>;

inline Grid grid_of(const gallai::BipartiteColoring& c) {
  Grid g(c.n1(), std::vector<std::uint32_t>(c.n2()));
  for (std::size_t i = 0; i < c.n1(); ++i)
    for (std::size_t j = 0; j < c.n2(); ++j) g[i][j] = c(i, j);
  return g;
}

// All k-subsets of {0..n-1} in lexicographic order.
inline std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t x = from; x < n; ++x) {
      cur.push_back(x);
      rec(x + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

struct Witness {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
};

inline bool block_mono(const Grid& g, const Witness& w) {
  const auto c = g[w.rows[0]][w.cols[0]];
  for (auto i : w.rows)
    for (auto j : w.cols)
      if (g[i][j] != c) return false;
  return true;
}

inline bool block_rainbow(const Grid& g, const Witness& w) {
  std::set<std::uint32_t> seen;
  for (auto i : w.rows)
    for (auto j : w.cols)
      if (!seen.insert(g[i][j]).second) return false;
  return true;
}

// First block in (rows, cols) lexicographic order satisfying `pred`.
template <typename Pred>
std::optional<Witness> first_block(const Grid& g, std::size_t s, std::size_t t, Pred pred) {
  const std::size_t n1 = g.size();
  const std::size_t n2 = n1 ? g[0].size() : 0;
  for (const auto& rows : subsets(n1, s)) {
    for (const auto& cols : subsets(n2, t)) {
      Witness w{rows, cols};
      if (pred(g, w)) return w;
    }
  }
  return std::nullopt;
}

inline std::optional<Witness> mono(const Grid& g, std::size_t s, std::size_t t) {
  return first_block(g, s, t, block_mono);
}

inline std::optional<Witness> rainbow(const Grid& g, std::size_t s, std::size_t t) {
  return first_block(g, s, t, block_rainbow);
}

inline bool avoiding(const Grid& g, std::size_t rs, std::size_t rt, std::size_t ms,
                     std::size_t mt) {
  return !mono(g, ms, mt) && !rainbow(g, rs, rt);
}

// Calls visit on every r-coloring of an n1 x n2 grid (odometer order).
inline void for_each_grid(std::size_t n1, std::size_t n2, std::uint32_t r,
                          const std::function<void(const Grid&)>& visit) {
  Grid g(n1, std::vector<std::uint32_t>(n2, 1));
  const std::size_t cells = n1 * n2;
  while (true) {
    visit(g);
    std::size_t k = 0;
    for (; k < cells; ++k) {
      auto& cell = g[k / n2][k % n2];
      if (cell < r) {
        ++cell;
        break;
      }
      cell = 1;
    }
    if (k == cells) return;
  }
}

// z(m, n; s, t) by trying all 2^(mn) edge sets.
inline std::uint64_t zarankiewicz(std::size_t m, std::size_t n, std::size_t s, std::size_t t) {
  const std::size_t cells = m * n;
  std::uint64_t best = 0;
  const auto row_sets = subsets(m, s);
  const auto col_sets = subsets(n, t);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cells); ++mask) {
    const auto edges = static_cast<std::uint64_t>(__builtin_popcountll(mask));
    if (edges <= best) continue;
    bool free = true;
    for (const auto& rows : row_sets) {
      for (const auto& cols : col_sets) {
        bool full = true;
        for (auto i : rows)
          for (auto j : cols)
            if (!(mask >> (i * n + j) & 1)) full = false;
        if (full) {
          free = false;
          break;
        }
      }
      if (!free) break;
    }
    if (free) best = edges;
  }
  return best;
}

struct Dimacs {
  int vars = 0;
  std::vector<std::vector<int>> clauses;
};

inline Dimacs parse_dimacs(const std::string& text) {
  Dimacs d;
  std::istringstream in(text);
  std::string line;
  std::size_t declared = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == 'c') continue;
    std::istringstream ls(line);
    if (line[0] == 'p') {
      std::string p, cnf;
      ls >> p >> cnf >> d.vars >> declared;
      continue;
    }
    std::vector<int> clause;
    int lit = 0;
    while (ls >> lit && lit != 0) clause.push_back(lit);
    d.clauses.push_back(std::move(clause));
  }
  if (d.clauses.size() != declared) throw std::runtime_error("clause count mismatch");
  return d;
}

// assignment[v] for v in 1..vars.
inline bool satisfies(const Dimacs& d, const std::vector<bool>& assignment) {
  for (const auto& clause : d.clauses) {
    bool sat = false;
    for (int lit : clause) {
      const bool v = assignment[static_cast<std::size_t>(std::abs(lit))];
      if ((lit > 0) == v) {
        sat = true;
        break;
      }
    }
    if (!sat) return false;
  }
  return true;
}

}  // namespace oracle
