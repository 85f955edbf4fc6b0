#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace herder {

// Seeded random source used by every stochastic step in the library.
//
// All draws are derived from the raw mt19937_64 stream, whose output is
// fully specified by the standard. The distribution helpers are written
// out by hand because std::uniform_int_distribution and friends are
// implementation-defined, and run results must reproduce bit-for-bit
// from a seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform double in [0, 1) with 53 random bits.
  double next_unit() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// Uniform integer in [0, n). Unbiased via rejection. n must be > 0.
  std::size_t next_below(std::size_t n);

  /// Standard normal deviate (Box-Muller, second value cached).
  double next_gaussian();

  /// The first n entries of a uniform shuffle of `items` (partial
  /// Fisher-Yates), so any k-prefix is a uniform k-subset.
  template <typename T>
  std::vector<T> sample(std::vector<T> items, std::size_t n) {
    if (n > items.size()) n = items.size();
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t j = i + next_below(items.size() - i);
      std::swap(items[i], items[j]);
    }
    items.resize(n);
    return items;
  }

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace herder
