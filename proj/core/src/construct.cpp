#include "gallai/construct.hpp"

#include <vector>

#include "gallai/errors.hpp"
#include "gallai/random.hpp"

namespace gallai {

BipartiteColoring block_coloring(std::size_t t, Color r) {
  if (t < 2 || r < 1) throw Error(Errc::invalid_argument, "block coloring needs t >= 2, r >= 1");
  const std::size_t band = t - 1;
  const std::size_t n = band * r;
  std::vector<Color> cells(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) cells[i * n + j] = static_cast<Color>(i / band + 1);
  }
  return BipartiteColoring(n, n, r, std::move(cells));
}

BipartiteColoring random_coloring(std::size_t n1, std::size_t n2, Color r, std::uint64_t seed) {
  if (n1 == 0 || n2 == 0 || r == 0) {
    throw Error(Errc::invalid_argument, "random coloring needs positive n1, n2, r");
  }
  if (n1 > kMaxEdges / n2) {
    throw Error(Errc::invalid_argument, "n1 * n2 exceeds the supported edge count");
  }
  Xoshiro256 rng(seed);
  std::vector<Color> cells(n1 * n2);
  for (auto& cell : cells) cell = static_cast<Color>(rng.below(r) + 1);
  return BipartiteColoring(n1, n2, r, std::move(cells));
}

BipartiteColoring star_avoiding_coloring(std::size_t p, std::size_t q) {
  if (p < 2 || q < 2) throw Error(Errc::invalid_argument, "star coloring needs p, q >= 2");
  const std::size_t groups = p - 1;
  const std::size_t size = q - 1;
  std::vector<Color> cells;
  cells.reserve(groups * size);
  for (std::size_t g = 0; g < groups; ++g) cells.insert(cells.end(), size, static_cast<Color>(g + 1));
  return BipartiteColoring(1, groups * size, static_cast<Color>(groups), std::move(cells));
}

}  // namespace gallai
