#include "herder/scoring.hpp"

#include <cmath>

#include "herder/error.hpp"

namespace herder {

double norm(double value, double lo, double hi) {
  if (!std::isfinite(value) || !std::isfinite(lo) || !std::isfinite(hi))
    throw Error("norm: inputs must be finite");
  if (lo > hi) throw Error("norm: lo exceeds hi");
  if (lo == hi) return 0.5;
  const double x = (value - lo) / (hi - lo);
  if (x < 0.0) return 0.0;
  if (x > 1.0) return 1.0;
  return x;
}

HeavenPoint HeavenPoint::from_goals(std::span<const Goal> goals) {
  HeavenPoint h;
  h.ideal.reserve(goals.size());
  for (const Goal g : goals) {
    switch (g) {
      case Goal::minimize: h.ideal.push_back(0.0); break;
      case Goal::maximize: h.ideal.push_back(1.0); break;
      case Goal::none: throw Error("HeavenPoint: goal 'none' has no ideal");
    }
  }
  return h;
}

double distance_to_heaven(std::span<const double> values,
                          std::span<const Interval> bounds,
                          const HeavenPoint& heaven) {
  const std::size_t n = values.size();
  if (n == 0) throw Error("distance_to_heaven: no objectives");
  if (bounds.size() != n || heaven.ideal.size() != n)
    throw Error("distance_to_heaven: length mismatch");
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double x = norm(values[i], bounds[i].lo, bounds[i].hi);
    const double d = x - heaven.ideal[i];
    acc += d * d;
  }
  return std::sqrt(acc) / std::sqrt(static_cast<double>(n));
}

double distance_to_heaven(std::span<const double> values,
                          std::span<const Interval> bounds,
                          std::span<const Goal> goals) {
  return distance_to_heaven(values, bounds, HeavenPoint::from_goals(goals));
}

}  // namespace herder
