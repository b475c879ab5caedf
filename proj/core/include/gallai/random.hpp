#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <utility>

namespace gallai {

/// SplitMix64, used to expand a 64-bit seed into generator state.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}
  std::uint64_t next() noexcept;

 private:
  std::uint64_t state_;
};

/// xoshiro256** (Blackman and Vigna). Platform-independent: every random
/// choice in the library goes through next() and below(), never through
/// <random> distributions whose output is implementation-defined.
class Xoshiro256 {
 public:
  using result_type = std::uint64_t;

  /// State filled from four SplitMix64 outputs of `seed`.
  explicit Xoshiro256(std::uint64_t seed) noexcept;
  explicit Xoshiro256(const std::array<std::uint64_t, 4>& state) noexcept : s_(state) {}

  std::uint64_t next() noexcept;
  std::uint64_t operator()() noexcept { return next(); }

  /// Uniform integer in [0, bound) by rejection; bound must be positive.
  std::uint64_t below(std::uint64_t bound) noexcept;

  static constexpr std::uint64_t min() noexcept { return 0; }
  static constexpr std::uint64_t max() noexcept { return ~std::uint64_t{0}; }

 private:
  std::array<std::uint64_t, 4> s_;
};

/// Moves a uniform random k-subset (in random order) into items[0..k).
template <typename T>
void shuffle_prefix(std::span<T> items, std::size_t k, Xoshiro256& rng) {
  for (std::size_t i = 0; i < k && i < items.size(); ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng.below(items.size() - i));
    using std::swap;
    swap(items[i], items[j]);
  }
}

}  // namespace gallai
