// Microbenchmarks for the hot paths: streaming stats, distance scoring,
// discretization, and full optimizer runs on a mid-sized pool.

#include <benchmark/benchmark.h>

#include "herder/baselines.hpp"
#include "herder/evalstats.hpp"
#include "herder/ezr.hpp"
#include "herder/online_stats.hpp"
#include "herder/scoring.hpp"
#include "herder/synth.hpp"

namespace {

const herder::Dataset& pool5k() {
  static const herder::SynthResult result = [] {
    herder::SynthSpec spec;
    spec.n_rows = 5000;
    spec.n_attrs = 20;
    spec.n_keys = 3;
    spec.n_objectives = 2;
    spec.noise = 0.05;
    spec.seed = 42;
    return herder::gen_sparse(spec);
  }();
  return result.dataset;
}

void BM_OnlineStatsAdd(benchmark::State& state) {
  herder::Rng rng(7);
  std::vector<double> values(static_cast<std::size_t>(state.range(0)));
  for (double& v : values) v = rng.next_unit();
  for (auto _ : state) {
    herder::OnlineStats stats;
    for (const double v : values) stats.add(v);
    benchmark::DoNotOptimize(stats.mean());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_OnlineStatsAdd)->Range(1 << 10, 1 << 18);

void BM_DistanceToHeaven(benchmark::State& state) {
  const std::vector<double> values{0.3, 1.7, 42.0};
  const std::vector<herder::Interval> bounds{{0, 1}, {0, 2}, {0, 100}};
  const std::vector<herder::Goal> goals{herder::Goal::minimize,
                                        herder::Goal::maximize,
                                        herder::Goal::minimize};
  const herder::HeavenPoint heaven = herder::HeavenPoint::from_goals(goals);
  for (auto _ : state)
    benchmark::DoNotOptimize(herder::distance_to_heaven(values, bounds, heaven));
}
BENCHMARK(BM_DistanceToHeaven);

void BM_Discretize(benchmark::State& state) {
  const herder::Dataset& ds = pool5k();
  herder::Rng rng(3);
  std::vector<herder::ScoredRow> scored;
  for (std::size_t i = 0; i < 64; ++i) {
    const herder::RowId id =
        ds.labelable_rows()[rng.next_below(ds.n_rows())];
    scored.push_back({id, rng.next_unit()});
  }
  const herder::Split split = herder::split_best_rest(scored);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        herder::discretize(ds, split.best, split.rest, 7));
}
BENCHMARK(BM_Discretize);

void BM_ReferenceOptimal(benchmark::State& state) {
  const herder::Dataset& ds = pool5k();
  for (auto _ : state)
    benchmark::DoNotOptimize(herder::reference_optimal(ds));
}
BENCHMARK(BM_ReferenceOptimal);

void BM_RunEzr(benchmark::State& state) {
  const herder::Dataset& ds = pool5k();
  herder::EzrConfig cfg;
  cfg.budget = static_cast<std::size_t>(state.range(0));
  std::uint64_t seed = 1;
  for (auto _ : state) {
    cfg.seed = seed++;
    benchmark::DoNotOptimize(herder::run_ezr(ds, cfg));
  }
}
BENCHMARK(BM_RunEzr)->Arg(32)->Arg(64);

void BM_RunKpp(benchmark::State& state) {
  const herder::Dataset& ds = pool5k();
  std::uint64_t seed = 1;
  for (auto _ : state) {
    herder::Rng rng(seed++);
    benchmark::DoNotOptimize(herder::run_kpp(ds, 32, rng));
  }
}
BENCHMARK(BM_RunKpp);

}  // namespace

BENCHMARK_MAIN();
