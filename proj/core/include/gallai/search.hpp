#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>

#include "gallai/coloring.hpp"

namespace gallai {

struct SearchOptions {
  /// Maximum number of cell assignments before Errc::budget_exceeded.
  std::uint64_t node_budget = 100'000'000;
};

struct AvoidanceResult {
  enum class Outcome { found, exhausted };

  Outcome outcome;
  /// Present iff outcome == found.
  std::optional<BipartiteColoring> witness;
  /// Cell assignments tried.
  std::uint64_t nodes_expanded = 0;
  /// Color choices skipped by first-use ordering.
  std::uint64_t canonical_prunes = 0;
};

const char* to_string(AvoidanceResult::Outcome outcome) noexcept;

struct EnumerationStats {
  std::uint64_t leaves = 0;
  std::uint64_t nodes_expanded = 0;
  std::uint64_t canonical_prunes = 0;
};

/// Does some r-coloring of K_{n1,n2} avoid both a rainbow `rainbow` and a
/// monochromatic `mono`?
///
/// Depth-first over cells in row-major order. Color c > 1 is tried only once
/// color c-1 has appeared earlier in the scan, so each color-relabeling class
/// is visited once. After every assignment, sub-bicliques that just became
/// fully assigned are checked and the branch is cut on a violation.
AvoidanceResult exists_avoiding(std::size_t n1, std::size_t n2, Color r, BicliquePattern rainbow,
                                BicliquePattern mono, const SearchOptions& options = {});

/// Same search, visiting every canonical avoiding coloring. `visit` returns
/// false to stop early.
EnumerationStats for_each_avoiding(std::size_t n1, std::size_t n2, Color r,
                                   BicliquePattern rainbow, BicliquePattern mono,
                                   const std::function<bool(const BipartiteColoring&)>& visit,
                                   const SearchOptions& options = {});

/// Every first-use canonical grid, with no avoidance pruning. The second
/// argument of `visit` is the number of distinct colors the grid uses.
EnumerationStats for_each_canonical(
    std::size_t n1, std::size_t n2, Color r,
    const std::function<bool(const BipartiteColoring&, Color)>& visit,
    const SearchOptions& options = {});

/// Number of colorings in the relabeling class of a canonical grid that uses
/// k of the r colors: r! / (r-k)!.
std::uint64_t relabeling_orbit_size(Color r, Color k);

/// Smallest n2 <= n2_max at which exists_avoiding(n1, n2, ...) is exhausted.
/// Scans n2 upward; avoidance is inherited by column deletion, so the first
/// exhausted size is the frontier.
std::optional<std::size_t> min_forcing_n2(std::size_t n1, Color r, BicliquePattern rainbow,
                                          BicliquePattern mono, std::size_t n2_max,
                                          const SearchOptions& options = {});

/// Largest edge count of a K_{s,t}-free subgraph of K_{m,n} (s rows, t
/// columns), by branch and bound over rows in non-increasing (degree, mask)
/// order. Requires m, n <= kZarankiewiczMaxSide.
inline constexpr std::size_t kZarankiewiczMaxSide = 6;
std::uint64_t zarankiewicz_exact(std::size_t m, std::size_t n, std::size_t s, std::size_t t,
                                 const SearchOptions& options = {});

}  // namespace gallai
