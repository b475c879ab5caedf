#pragma once

#include <cstddef>
#include <cstdint>

#include "gallai/coloring.hpp"

namespace gallai {

/// Coloring of K_{(t-1)r,(t-1)r} with cell (i, j) colored ceil((i+1)/(t-1)):
/// r horizontal bands of t-1 rows each. Contains neither a monochromatic nor
/// a rainbow K_{s,t} for any s >= 2.
BipartiteColoring block_coloring(std::size_t t, Color r);

/// Every cell drawn independently and uniformly from 1..r by Xoshiro256(seed),
/// in row-major order.
BipartiteColoring random_coloring(std::size_t n1, std::size_t n2, Color r, std::uint64_t seed);

/// K_{1,(p-1)(q-1)} split into p-1 consecutive groups of q-1 edges, group g
/// colored g. Avoids both a rainbow K_{1,p} and a monochromatic K_{1,q}.
BipartiteColoring star_avoiding_coloring(std::size_t p, std::size_t q);

}  // namespace gallai
