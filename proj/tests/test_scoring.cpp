#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "herder/error.hpp"
#include "herder/rng.hpp"
#include "herder/scoring.hpp"

using namespace herder;

namespace {

// Whole-range bounds so normalized values pass through unchanged.
std::vector<Interval> unit_bounds(std::size_t n) {
  return std::vector<Interval>(n, Interval{0.0, 1.0});
}

}  // namespace

TEST_SUITE("scoring") {

TEST_CASE("norm maps into [0,1] with clamping and a degenerate midpoint") {
  CHECK(norm(5, 0, 10) == 0.5);
  CHECK(norm(7, 7, 7) == 0.5);
  CHECK(norm(-3, 0, 10) == 0.0);
  CHECK(norm(13, 0, 10) == 1.0);
  CHECK(norm(0, 0, 10) == 0.0);
  CHECK(norm(10, 0, 10) == 1.0);
}

TEST_CASE("norm rejects non-finite input and inverted bounds") {
  CHECK_THROWS_AS(norm(std::nan(""), 0, 1), Error);
  CHECK_THROWS_AS(norm(0, std::nan(""), 1), Error);
  CHECK_THROWS_AS(norm(0, 0, INFINITY), Error);
  CHECK_THROWS_AS(norm(0, 1, 0), Error);
}

TEST_CASE("heaven point is 0 for minimize, 1 for maximize") {
  std::vector<Goal> goals{Goal::minimize, Goal::maximize, Goal::minimize};
  HeavenPoint h = HeavenPoint::from_goals(goals);
  CHECK(h.ideal == std::vector<double>{0.0, 1.0, 0.0});
  std::vector<Goal> bad{Goal::minimize, Goal::none};
  CHECK_THROWS_AS(HeavenPoint::from_goals(bad), Error);
}

TEST_CASE("distance is 0 at the ideal and 1 at the anti-ideal") {
  std::vector<Goal> goals{Goal::minimize, Goal::maximize};
  auto bounds = unit_bounds(2);
  std::vector<double> ideal{0.0, 1.0};
  std::vector<double> anti{1.0, 0.0};
  CHECK(distance_to_heaven(ideal, bounds, goals) == 0.0);
  CHECK(distance_to_heaven(anti, bounds, goals) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("two minimize objectives at (0.6, 0.8) sit at 0.70711") {
  std::vector<Goal> goals{Goal::minimize, Goal::minimize};
  std::vector<double> values{0.6, 0.8};
  double d = distance_to_heaven(values, unit_bounds(2), goals);
  CHECK(d == doctest::Approx(std::sqrt(0.36 + 0.64) / std::sqrt(2.0)).epsilon(1e-15));
  CHECK(d == doctest::Approx(0.70711).epsilon(1e-5));
}

TEST_CASE("distance respects real bounds, not raw magnitudes") {
  std::vector<Goal> goals{Goal::minimize};
  std::vector<Interval> bounds{{100.0, 300.0}};
  std::vector<double> low{100.0};
  std::vector<double> mid{200.0};
  CHECK(distance_to_heaven(low, bounds, goals) == 0.0);
  CHECK(distance_to_heaven(mid, bounds, goals) == doctest::Approx(0.5));
}

TEST_CASE("distance rejects shape mismatches") {
  std::vector<Goal> goals{Goal::minimize};
  std::vector<double> values{0.5, 0.5};
  CHECK_THROWS_AS(distance_to_heaven(values, unit_bounds(2), goals), Error);
  CHECK_THROWS_AS(distance_to_heaven(values, unit_bounds(1), goals), Error);
  std::vector<Goal> none{};
  std::vector<double> empty{};
  CHECK_THROWS_AS(distance_to_heaven(empty, unit_bounds(0), none), Error);
}

TEST_CASE("range: fuzzed distances stay inside [0,1]") {
  Rng rng(11);
  for (int iter = 0; iter < 100000; ++iter) {
    const std::size_t n = 1 + rng.next_below(6);
    std::vector<double> values(n);
    std::vector<Interval> bounds(n);
    std::vector<Goal> goals(n);
    for (std::size_t i = 0; i < n; ++i) {
      double a = (rng.next_unit() - 0.5) * 1e4;
      double b = (rng.next_unit() - 0.5) * 1e4;
      bounds[i] = {std::min(a, b), std::max(a, b)};
      // values may fall outside their bounds; clamping must still hold
      values[i] = (rng.next_unit() - 0.5) * 2e4;
      goals[i] = rng.next_below(2) == 0 ? Goal::minimize : Goal::maximize;
    }
    double d = distance_to_heaven(values, bounds, goals);
    REQUIRE(d >= 0.0);
    REQUIRE(d <= 1.0);
  }
}

TEST_CASE("monotone: worsening one objective never improves the distance") {
  Rng rng(12);
  for (int iter = 0; iter < 2000; ++iter) {
    const std::size_t n = 1 + rng.next_below(5);
    std::vector<double> values(n);
    std::vector<Interval> bounds(n, Interval{0.0, 1.0});
    std::vector<Goal> goals(n);
    for (std::size_t i = 0; i < n; ++i) {
      values[i] = rng.next_unit();
      goals[i] = rng.next_below(2) == 0 ? Goal::minimize : Goal::maximize;
    }
    const double before = distance_to_heaven(values, bounds, goals);
    const std::size_t k = rng.next_below(n);
    // move objective k away from its ideal by a random step
    auto worsened = values;
    const double step = rng.next_unit();
    if (goals[k] == Goal::minimize)
      worsened[k] = std::min(1.0, values[k] + step);
    else
      worsened[k] = std::max(0.0, values[k] - step);
    CHECK(distance_to_heaven(worsened, bounds, goals) >= before - 1e-12);
  }
}

TEST_CASE("permutation: reordering objectives leaves the distance alone") {
  Rng rng(13);
  for (int iter = 0; iter < 2000; ++iter) {
    const std::size_t n = 2 + rng.next_below(5);
    std::vector<double> values(n);
    std::vector<Interval> bounds(n);
    std::vector<Goal> goals(n);
    for (std::size_t i = 0; i < n; ++i) {
      double a = rng.next_unit() * 10;
      values[i] = rng.next_unit() * 12 - 1;
      bounds[i] = {a, a + rng.next_unit() * 5};
      goals[i] = rng.next_below(2) == 0 ? Goal::minimize : Goal::maximize;
    }
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    for (std::size_t i = 0; i + 1 < n; ++i)
      std::swap(perm[i], perm[i + rng.next_below(n - i)]);
    std::vector<double> pv(n);
    std::vector<Interval> pb(n);
    std::vector<Goal> pg(n);
    for (std::size_t i = 0; i < n; ++i) {
      pv[i] = values[perm[i]];
      pb[i] = bounds[perm[i]];
      pg[i] = goals[perm[i]];
    }
    CHECK(distance_to_heaven(values, bounds, goals) ==
          doctest::Approx(distance_to_heaven(pv, pb, pg)).epsilon(1e-12));
  }
}

TEST_CASE("goal flip: negating a minimize objective and calling it maximize") {
  Rng rng(14);
  for (int iter = 0; iter < 2000; ++iter) {
    const std::size_t n = 1 + rng.next_below(4);
    std::vector<double> values(n);
    std::vector<Interval> bounds(n);
    std::vector<Goal> goals(n, Goal::minimize);
    for (std::size_t i = 0; i < n; ++i) {
      double a = rng.next_unit() * 10 - 5;
      bounds[i] = {a, a + 0.1 + rng.next_unit() * 5};
      values[i] = bounds[i].lo + rng.next_unit() * (bounds[i].hi - bounds[i].lo);
    }
    const double before = distance_to_heaven(values, bounds, goals);
    const std::size_t k = rng.next_below(n);
    auto fv = values;
    auto fb = bounds;
    auto fg = goals;
    fv[k] = -values[k];
    fb[k] = {-bounds[k].hi, -bounds[k].lo};
    fg[k] = Goal::maximize;
    CHECK(distance_to_heaven(fv, fb, fg) == doctest::Approx(before).epsilon(1e-12));
  }
}

}  // TEST_SUITE
