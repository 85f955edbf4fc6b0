#pragma once

#include <span>
#include <vector>

#include "herder/column.hpp"
#include "herder/online_stats.hpp"

namespace herder {

// Maps a raw value into [0, 1] relative to [lo, hi], clamping values
// outside the interval. A degenerate interval (hi == lo) maps to 0.5.
// All three arguments must be finite and lo <= hi.
double norm(double value, double lo, double hi);

/// The per-objective ideal in normalized coordinates: 0 when the goal
/// is to minimize, 1 when it is to maximize.
struct HeavenPoint {
  std::vector<double> ideal;

  static HeavenPoint from_goals(std::span<const Goal> goals);
};

// Distance from a row's objectives to the ideal point, in normalized
// objective space, scaled by 1/sqrt(#objectives) so the result always
// lands in [0, 1]. Lower is better regardless of goal directions.
double distance_to_heaven(std::span<const double> values,
                          std::span<const Interval> bounds,
                          const HeavenPoint& heaven);
double distance_to_heaven(std::span<const double> values,
                          std::span<const Interval> bounds,
                          std::span<const Goal> goals);

}  // namespace herder
