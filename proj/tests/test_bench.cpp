#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "herder/baselines.hpp"
#include "herder/bench.hpp"
#include "herder/error.hpp"
#include "herder/synth.hpp"

using namespace herder;

namespace {

namespace fs = std::filesystem;

fs::path scratch_dir() {
  const fs::path dir = fs::temp_directory_path() / "herder_bench_tests";
  fs::create_directories(dir);
  return dir;
}

fs::path write_synth_csv(const std::string& stem, std::uint64_t seed,
                         std::size_t rows = 64) {
  SynthSpec spec;
  spec.n_rows = rows;
  spec.n_attrs = 5;
  spec.n_keys = 2;
  spec.n_objectives = 1;
  spec.noise = 0.05;
  spec.seed = seed;
  SynthResult r = gen_sparse(spec);
  const fs::path path = scratch_dir() / (stem + ".csv");
  std::ofstream out(path);
  write_csv(r.dataset, out);
  return path;
}

bool same_modulo_time(const std::vector<RunRecord>& a,
                      const std::vector<RunRecord>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].dataset != b[i].dataset) return false;
    if (a[i].method != b[i].method) return false;
    if (a[i].budget != b[i].budget) return false;
    if (a[i].seed != b[i].seed) return false;
    if (a[i].best_dist != b[i].best_dist) return false;
    if (a[i].optimality != b[i].optimality) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("bench") {

TEST_CASE("the method registry lists exactly the three harness methods") {
  CHECK(known_methods() == std::vector<std::string>{"ezr", "kpp", "random"});
  CHECK(is_known_method("ezr"));
  CHECK(is_known_method("kpp"));
  CHECK(is_known_method("random"));
  CHECK_FALSE(is_known_method("grid"));
  CHECK_FALSE(is_known_method(""));
  CHECK_FALSE(is_known_method("EZR"));
}

TEST_CASE("execute_run fills every record field consistently") {
  SynthSpec spec;
  spec.n_rows = 50;
  spec.n_attrs = 4;
  spec.n_keys = 1;
  spec.noise = 0.02;
  spec.seed = 5;
  Dataset ds = gen_sparse(spec).dataset;
  EvalContext ctx = make_eval_context(ds);

  RunRecord rec = execute_run(ds, ctx, "my-label", "random", 6, 17);
  CHECK(rec.dataset == "my-label");
  CHECK(rec.method == "random");
  CHECK(rec.budget == 6);
  CHECK(rec.seed == 17);
  CHECK(rec.wall_time >= 0.0);

  // the record judges exactly the row the method itself returns
  Rng rng(17);
  RunOutcome outcome = run_random(ds, 6, rng);
  const double y_run = eval_distance(ds, outcome.best_row, ctx);
  CHECK(rec.best_dist == y_run);
  CHECK(rec.optimality == *optimality(y_run, ctx.y_opt, ctx.y_av));

  CHECK_THROWS_AS(execute_run(ds, ctx, "x", "grid", 6, 1), Error);
}

TEST_CASE("empty plan fields are rejected up front") {
  const fs::path csv = write_synth_csv("plan_ok", 101);
  BenchPlan plan;
  plan.datasets = {csv};
  plan.methods = {"random"};
  plan.budgets = {4};
  plan.repeats = 2;

  BenchPlan no_ds = plan;
  no_ds.datasets.clear();
  CHECK_THROWS_WITH_AS(run_bench_plan(no_ds), "bench plan lists no datasets",
                       Error);
  BenchPlan no_methods = plan;
  no_methods.methods.clear();
  CHECK_THROWS_WITH_AS(run_bench_plan(no_methods),
                       "bench plan lists no methods", Error);
  BenchPlan no_budgets = plan;
  no_budgets.budgets.clear();
  CHECK_THROWS_WITH_AS(run_bench_plan(no_budgets), "bench plan lists no budgets",
                       Error);
  BenchPlan no_repeats = plan;
  no_repeats.repeats = 0;
  CHECK_THROWS_WITH_AS(run_bench_plan(no_repeats),
                       "bench plan needs at least one repeat", Error);
  BenchPlan bad_method = plan;
  bad_method.methods = {"random", "annealing"};
  CHECK_THROWS_WITH_AS(run_bench_plan(bad_method), "unknown method 'annealing'",
                       Error);
  BenchPlan zero_budget = plan;
  zero_budget.budgets = {4, 0};
  CHECK_THROWS_WITH_AS(run_bench_plan(zero_budget), "budget must be at least 1",
                       Error);
}

TEST_CASE("bad datasets abort before any run, naming every offender") {
  const fs::path ok = write_synth_csv("vet_ok", 102);
  const fs::path small = scratch_dir() / "vet_small.csv";
  {
    std::ofstream out(small);
    out << "A,Down-\n1,3\n2,1\n3,2\n";
  }
  const fs::path flat = scratch_dir() / "vet_flat.csv";
  {
    std::ofstream out(flat);
    out << "A,Down-\n";
    for (int i = 0; i < 20; ++i) out << i << ",5\n";
  }
  const fs::path missing = scratch_dir() / "vet_missing.csv";
  fs::remove(missing);

  BenchPlan plan;
  plan.datasets = {ok, small, flat, missing};
  plan.methods = {"random"};
  plan.budgets = {8};
  plan.repeats = 2;
  try {
    run_bench_plan(plan);
    FAIL("expected the plan to abort");
  } catch (const Error& e) {
    const std::string msg = e.what();
    CHECK(msg.find("aborted before any run") != std::string::npos);
    CHECK(msg.find(small.string()) != std::string::npos);
    CHECK(msg.find("budget 8 exceeds its 3 labelable rows") !=
          std::string::npos);
    CHECK(msg.find(flat.string()) != std::string::npos);
    CHECK(msg.find("optimality undefined") != std::string::npos);
    CHECK(msg.find(missing.string()) != std::string::npos);
    // the healthy dataset is not blamed
    CHECK(msg.find("'" + ok.string() + "'") == std::string::npos);
  }
}

TEST_CASE("records come back in plan order with derived seeds") {
  const fs::path a = write_synth_csv("order_a", 103);
  const fs::path b = write_synth_csv("order_b", 104);
  BenchPlan plan;
  plan.datasets = {a, b};
  plan.methods = {"random", "ezr"};
  plan.budgets = {4, 8};
  plan.repeats = 3;
  plan.base_seed = 40;
  plan.threads = 2;

  const auto records = run_bench_plan(plan);
  REQUIRE(records.size() == 2 * 2 * 2 * 3);
  std::size_t i = 0;
  for (const fs::path& ds : {a, b})
    for (const std::string& method : {std::string("random"), std::string("ezr")})
      for (std::size_t budget : {std::size_t{4}, std::size_t{8}})
        for (std::uint64_t r = 0; r < 3; ++r, ++i) {
          CHECK(records[i].dataset == ds.string());
          CHECK(records[i].method == method);
          CHECK(records[i].budget == budget);
          CHECK(records[i].seed == 40 + r);
        }
}

TEST_CASE("reruns and thread counts change nothing but wall time") {
  const fs::path csv = write_synth_csv("rerun", 105, 48);
  BenchPlan plan;
  plan.datasets = {csv};
  plan.methods = {"ezr", "kpp", "random"};
  plan.budgets = {4, 8, 16};
  plan.repeats = 4;
  plan.threads = 1;

  const auto serial = run_bench_plan(plan);
  const auto serial_again = run_bench_plan(plan);
  CHECK(same_modulo_time(serial, serial_again));

  BenchPlan wide = plan;
  wide.threads = 4;
  const auto parallel = run_bench_plan(wide);
  CHECK(same_modulo_time(serial, parallel));
}

}  // TEST_SUITE
