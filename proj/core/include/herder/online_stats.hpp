#pragma once

#include <cmath>
#include <cstddef>
#include <optional>

#include "herder/error.hpp"

namespace herder {

/// Closed interval of reals; used for normalization bounds.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

// Streaming mean / variance / extrema (Welford's update). One instance
// per objective column tracks the values revealed so far, so bounds and
// spreads never require a second pass over the data.
class OnlineStats {
 public:
  /// Folds one finite value into the running moments.
  void add(double x) {
    if (!std::isfinite(x)) throw Error("OnlineStats::add: value is not finite");
    ++n_;
    const double delta = x - mean_;
    mean_ += delta / static_cast<double>(n_);
    const double delta2 = x - mean_;
    m2_ += delta * delta2;
    if (n_ == 1) {
      lo_ = hi_ = x;
    } else {
      if (x < lo_) lo_ = x;
      if (x > hi_) hi_ = x;
    }
  }

  std::size_t count() const { return n_; }
  double mean() const { return mean_; }
  /// Sum of squared deviations from the running mean.
  double m2() const { return m2_; }

  /// Sample variance (n-1 denominator); empty until two values arrive.
  std::optional<double> variance() const {
    if (n_ < 2) return std::nullopt;
    return m2_ / static_cast<double>(n_ - 1);
  }

  double min() const { return lo_; }
  double max() const { return hi_; }
  Interval bounds() const { return {lo_, hi_}; }

 private:
  std::size_t n_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
  double lo_ = 0.0;
  double hi_ = 0.0;
};

}  // namespace herder
