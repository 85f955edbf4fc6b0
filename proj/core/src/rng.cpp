#include "herder/rng.hpp"

#include <cmath>

#include "herder/error.hpp"

namespace herder {

std::size_t Rng::next_below(std::size_t n) {
  if (n == 0) throw Error("Rng::next_below: range is empty");
  const std::uint64_t bound = n;
  // Accept only draws below the largest multiple of `bound`, so every
  // residue is equally likely.
  const std::uint64_t rem = (0 - bound) % bound;  // 2^64 mod bound
  const std::uint64_t threshold = 0 - rem;        // largest multiple of bound
  std::uint64_t x = engine_();
  while (threshold != 0 && x >= threshold) x = engine_();
  return static_cast<std::size_t>(x % bound);
}

double Rng::next_gaussian() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double u1 = 1.0 - next_unit();  // (0, 1], keeps log() finite
  const double u2 = next_unit();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * 3.141592653589793238462643383279502884 * u2;
  spare_ = radius * std::sin(angle);
  has_spare_ = true;
  return radius * std::cos(angle);
}

}  // namespace herder
