#include <benchmark/benchmark.h>

#include <cmath>

#include "gallai/construct.hpp"
#include "gallai/detect.hpp"
#include "gallai/euclid.hpp"
#include "gallai/search.hpp"

using namespace gallai;

namespace {

void BM_FindMono(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto c = random_coloring(n, n, 3, 17);
  for (auto _ : state) benchmark::DoNotOptimize(find_mono_biclique(c, {2, 3}));
}
BENCHMARK(BM_FindMono)->Arg(8)->Arg(16)->Arg(32);

void BM_FindRainbow(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto c = random_coloring(n, n, 6, 23);
  for (auto _ : state) benchmark::DoNotOptimize(find_rainbow_biclique(c, {2, 3}));
}
BENCHMARK(BM_FindRainbow)->Arg(8)->Arg(16)->Arg(32);

void BM_FindAnyK2tSize(benchmark::State& state) {
  std::uint64_t seed = 0;
  for (auto _ : state) {
    const auto c = random_coloring(12, 40, 2, seed++);
    benchmark::DoNotOptimize(find_any(c, {2, 2}, {2, 2}));
  }
}
BENCHMARK(BM_FindAnyK2tSize);

void BM_ExistsAvoiding(benchmark::State& state) {
  const auto n2 = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(exists_avoiding(3, n2, 2, {2, 2}, {2, 2}));
}
BENCHMARK(BM_ExistsAvoiding)->Arg(3)->Arg(4)->Arg(5);

void BM_ZarankiewiczExact(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(zarankiewicz_exact(n, n, 2, 2));
}
BENCHMARK(BM_ZarankiewiczExact)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_Congruent(benchmark::State& state) {
  const auto s = static_cast<std::size_t>(state.range(0));
  const SimplexProductSpec spec(s, s, 1.0, std::sqrt(2.0));
  std::vector<Point> image;
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j) image.push_back(phi(spec, i, j));
  const PointConfig config(2 * s, std::move(image));
  const auto target = cartesian_product(simplex_points(s, 1.0), simplex_points(s, std::sqrt(2.0)));
  for (auto _ : state) benchmark::DoNotOptimize(congruent(config, target, 1e-9));
}
BENCHMARK(BM_Congruent)->DenseRange(2, 4);

}  // namespace

BENCHMARK_MAIN();
