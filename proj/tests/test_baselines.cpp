#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "herder/baselines.hpp"
#include "herder/dataset.hpp"
#include "herder/error.hpp"
#include "herder/evalstats.hpp"
#include "herder/rng.hpp"

using namespace herder;

namespace {

Dataset from_text(const std::string& text, std::string name = "mem") {
  std::istringstream in(text);
  return load_csv(in, std::move(name));
}

Dataset counting_ds(std::size_t n) {
  std::ostringstream csv;
  csv << "A,Y-\n";
  for (std::size_t i = 0; i < n; ++i)
    csv << i << ',' << format_double(0.01 * double(i)) << '\n';
  return from_text(csv.str());
}

}  // namespace

TEST_SUITE("baselines") {

TEST_CASE("random with the whole pool as budget finds the reference optimal") {
  Rng gen(17);
  for (int iter = 0; iter < 5; ++iter) {
    std::ostringstream csv;
    csv << "A,Quality+,Cost-\n";
    const std::size_t n = 10 + gen.next_below(40);
    for (std::size_t i = 0; i < n; ++i)
      csv << format_double(gen.next_unit()) << ','
          << format_double(gen.next_unit()) << ','
          << format_double(gen.next_unit()) << '\n';
    Dataset ds = from_text(csv.str());
    Rng rng(iter + 1);
    CHECK(run_random(ds, n, rng).best_row == reference_optimal(ds).row);
  }
}

TEST_CASE("random with budget one returns its single labeled row") {
  Dataset ds = counting_ds(10);
  Rng rng(4);
  RunOutcome out = run_random(ds, 1, rng);
  REQUIRE(out.trace.size() == 1);
  CHECK(out.best_row == out.trace[0].row);
  CHECK(out.labels_used == 1);
}

TEST_CASE("baselines repeat exactly under one seed") {
  Dataset ds = counting_ds(30);
  for (int seed = 1; seed <= 3; ++seed) {
    Rng a(seed), b(seed);
    RunOutcome ra = run_random(ds, 8, a);
    RunOutcome rb = run_random(ds, 8, b);
    CHECK(ra.best_row == rb.best_row);
    REQUIRE(ra.trace.size() == rb.trace.size());
    for (std::size_t i = 0; i < ra.trace.size(); ++i)
      CHECK(ra.trace[i].row == rb.trace[i].row);
    Rng c(seed), d(seed);
    CHECK(run_kpp(ds, 8, c).best_row == run_kpp(ds, 8, d).best_row);
  }
}

TEST_CASE("random pairs from a 10-row pool are uniform over the 45 pairs") {
  Dataset ds = counting_ds(10);
  std::map<std::pair<RowId, RowId>, int> seen;
  const int trials = 10000;
  for (int s = 0; s < trials; ++s) {
    Rng rng(1000 + s);
    Labeler lab(ds, 2);
    run_random(ds, lab, rng);
    auto ids = lab.labeled_order();
    REQUIRE(ids.size() == 2);
    std::pair<RowId, RowId> key{std::min(ids[0], ids[1]),
                                std::max(ids[0], ids[1])};
    CHECK(key.first != key.second);
    ++seen[key];
  }
  CHECK(seen.size() == 45);
  const double p = 1.0 / 45.0;
  const double se = std::sqrt(p * (1 - p) / trials);
  for (const auto& [pair, count] : seen) {
    const double freq = double(count) / trials;
    CHECK(std::abs(freq - p) <= 3 * se);
  }
}

TEST_CASE("decision distance behaves like a metric without missing cells") {
  std::ostringstream csv;
  csv << "A,B,color,Y-\n";
  Rng gen(23);
  for (int i = 0; i < 40; ++i)
    csv << format_double(gen.next_unit() * 9) << ','
        << format_double(gen.next_unit() * 100 - 50) << ",c"
        << gen.next_below(3) << ',' << format_double(gen.next_unit()) << '\n';
  Dataset ds = from_text(csv.str());

  for (int iter = 0; iter < 300; ++iter) {
    RowId a = RowId(gen.next_below(40));
    RowId b = RowId(gen.next_below(40));
    RowId c = RowId(gen.next_below(40));
    const double dab = decision_distance(ds, a, b);
    CHECK(dab >= 0.0);
    CHECK(dab <= 1.0);
    CHECK(dab == decision_distance(ds, b, a));
    CHECK(decision_distance(ds, a, a) == 0.0);
    CHECK(dab <= decision_distance(ds, a, c) + decision_distance(ds, c, b) + 1e-12);
  }
}

TEST_CASE("a missing cell is maximally far from everything") {
  Dataset ds = from_text("A,Y-\n?,.1\n3,.2\n?,.3\n");
  CHECK(decision_distance(ds, 0, 1) == 1.0);
  CHECK(decision_distance(ds, 0, 2) == 1.0);  // even from another hole
}

TEST_CASE("kpp survives an all-identical pool") {
  Dataset ds = from_text("A,Y-\n5,.1\n5,.2\n5,.3\n5,.4\n");
  Rng rng(6);
  RunOutcome out = run_kpp(ds, 3, rng);
  CHECK(out.labels_used == 3);
  std::set<RowId> uniq;
  for (const auto& t : out.trace) uniq.insert(t.row);
  CHECK(uniq.size() == 3);  // distinct rows despite zero distances
}

TEST_CASE("kpp with budget one labels a single uniform row") {
  Dataset ds = counting_ds(12);
  Rng rng(9);
  RunOutcome out = run_kpp(ds, 1, rng);
  CHECK(out.labels_used == 1);
  CHECK(out.best_row == out.trace[0].row);
}

TEST_CASE("kpp jumps to the far cluster almost surely") {
  // two tight clusters, ten cluster-widths apart
  std::ostringstream csv;
  csv << "A,Y-\n";
  Rng gen(31);
  for (int i = 0; i < 100; ++i)
    csv << format_double(0.0 + 0.1 * gen.next_unit()) << ",.5\n";
  for (int i = 0; i < 100; ++i)
    csv << format_double(1.0 + 0.1 * gen.next_unit()) << ",.5\n";
  Dataset ds = from_text(csv.str());
  auto cluster = [](RowId id) { return id < 100 ? 0 : 1; };

  // oracle: exact probability that the second pick crosses over, given
  // each possible first pick, averaged over the uniform first pick
  double exact = 0.0;
  for (RowId first = 0; first < 200; ++first) {
    double cross = 0.0, total = 0.0;
    for (RowId j = 0; j < 200; ++j) {
      if (j == first) continue;
      const double d = decision_distance(ds, first, j);
      total += d * d;
      if (cluster(j) != cluster(first)) cross += d * d;
    }
    exact += cross / total;
  }
  exact /= 200.0;
  CHECK(exact > 0.99);

  const int trials = 1000;
  int crossed = 0;
  for (int s = 0; s < trials; ++s) {
    Rng rng(500 + s);
    Labeler lab(ds, 2);
    run_kpp(ds, lab, rng);
    auto ids = lab.labeled_order();
    REQUIRE(ids.size() == 2);
    if (cluster(ids[0]) != cluster(ids[1])) ++crossed;
  }
  const double freq = double(crossed) / trials;
  CHECK(freq >= 0.99);
  const double se = std::sqrt(exact * (1 - exact) / trials);
  CHECK(std::abs(freq - exact) <= 3 * se + 1e-9);
}

TEST_CASE("kpp with the whole pool as budget finds the reference optimal") {
  Dataset ds = counting_ds(25);
  Rng rng(3);
  CHECK(run_kpp(ds, 25, rng).best_row == reference_optimal(ds).row);
}

TEST_CASE("baselines respect the budget contract") {
  Dataset ds = counting_ds(40);
  for (int seed : {1, 2, 3}) {
    Rng rng(seed);
    Labeler lab(ds, 7);
    run_random(ds, lab, rng);
    CHECK(lab.used() == 7);
    CHECK(lab.denied_reads() == 0);
    Rng rng2(seed);
    Labeler lab2(ds, 7);
    run_kpp(ds, lab2, rng2);
    CHECK(lab2.used() == 7);
    CHECK(lab2.denied_reads() == 0);
  }
}

TEST_CASE("baselines reject impossible budgets") {
  Dataset ds = counting_ds(5);
  Rng rng(1);
  CHECK_THROWS_AS(run_random(ds, 6, rng), Error);
  CHECK_THROWS_AS(run_random(ds, 0, rng), Error);
  CHECK_THROWS_AS(run_kpp(ds, 6, rng), Error);
  CHECK_THROWS_AS(run_kpp(ds, 0, rng), Error);
}

}  // TEST_SUITE
