#include "herder/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <thread>

#include "herder/baselines.hpp"
#include "herder/error.hpp"
#include "herder/ezr.hpp"

namespace herder {

const std::vector<std::string>& known_methods() {
  static const std::vector<std::string> methods{"ezr", "kpp", "random"};
  return methods;
}

bool is_known_method(const std::string& method) {
  const auto& m = known_methods();
  return std::find(m.begin(), m.end(), method) != m.end();
}

RunRecord execute_run(const Dataset& ds, const EvalContext& ctx,
                      const std::string& dataset_label,
                      const std::string& method, std::size_t budget,
                      std::uint64_t seed) {
  const auto start = std::chrono::steady_clock::now();
  RunOutcome outcome;
  if (method == "ezr") {
    EzrConfig cfg;
    cfg.budget = budget;
    cfg.seed = seed;
    outcome = run_ezr(ds, cfg);
  } else if (method == "random") {
    Rng rng(seed);
    outcome = run_random(ds, budget, rng);
  } else if (method == "kpp") {
    Rng rng(seed);
    outcome = run_kpp(ds, budget, rng);
  } else {
    throw Error("unknown method '" + method + "'");
  }
  const std::chrono::duration<double> elapsed =
      std::chrono::steady_clock::now() - start;

  const double y_run = eval_distance(ds, outcome.best_row, ctx);
  const std::optional<double> opt = optimality(y_run, ctx.y_opt, ctx.y_av);
  if (!opt)
    throw Error("optimality undefined on '" + dataset_label +
                "' (y_av equals y_opt)");

  RunRecord record;
  record.dataset = dataset_label;
  record.method = method;
  record.budget = budget;
  record.seed = seed;
  record.best_dist = y_run;
  record.optimality = *opt;
  record.wall_time = elapsed.count();
  return record;
}

std::vector<RunRecord> run_bench_plan(const BenchPlan& plan) {
  if (plan.datasets.empty()) throw Error("bench plan lists no datasets");
  if (plan.methods.empty()) throw Error("bench plan lists no methods");
  if (plan.budgets.empty()) throw Error("bench plan lists no budgets");
  if (plan.repeats == 0) throw Error("bench plan needs at least one repeat");
  for (const std::string& m : plan.methods)
    if (!is_known_method(m)) throw Error("unknown method '" + m + "'");
  for (const std::size_t b : plan.budgets)
    if (b == 0) throw Error("budget must be at least 1");

  // Load and vet everything before the first run; fail listing every
  // offender rather than stopping at the first.
  const std::size_t max_budget =
      *std::max_element(plan.budgets.begin(), plan.budgets.end());
  std::vector<Dataset> datasets;
  std::vector<EvalContext> contexts;
  datasets.reserve(plan.datasets.size());
  std::vector<std::string> problems;
  for (const auto& path : plan.datasets) {
    try {
      Dataset ds = load_csv(path);
      if (ds.labelable_rows().size() < max_budget) {
        problems.push_back("'" + path.string() + "': budget " +
                           std::to_string(max_budget) + " exceeds its " +
                           std::to_string(ds.labelable_rows().size()) +
                           " labelable rows");
        continue;
      }
      EvalContext ctx = make_eval_context(ds);
      if (ctx.y_av == ctx.y_opt) {
        problems.push_back("'" + path.string() +
                           "': optimality undefined (y_av equals y_opt)");
        continue;
      }
      datasets.push_back(std::move(ds));
      contexts.push_back(std::move(ctx));
    } catch (const Error& e) {
      problems.push_back("'" + path.string() + "': " + e.what());
    }
  }
  if (!problems.empty()) {
    std::string msg = "bench plan aborted before any run:";
    for (const std::string& p : problems) msg += "\n  " + p;
    throw Error(msg);
  }

  struct Cell {
    std::size_t dataset = 0;
    std::string method;
    std::size_t budget = 0;
    std::uint64_t seed = 0;
  };
  std::vector<Cell> cells;
  cells.reserve(plan.datasets.size() * plan.methods.size() *
                plan.budgets.size() * plan.repeats);
  for (std::size_t d = 0; d < datasets.size(); ++d)
    for (const std::string& method : plan.methods)
      for (const std::size_t budget : plan.budgets)
        for (std::size_t r = 0; r < plan.repeats; ++r)
          cells.push_back({d, method, budget,
                           plan.base_seed + static_cast<std::uint64_t>(r)});

  std::vector<RunRecord> records(cells.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr first_error;
  std::mutex error_mutex;

  auto worker = [&]() {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= cells.size() || failed.load()) return;
      const Cell& cell = cells[i];
      try {
        records[i] = execute_run(
            datasets[cell.dataset], contexts[cell.dataset],
            plan.datasets[cell.dataset].string(), cell.method, cell.budget,
            cell.seed);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        failed.store(true);
        return;
      }
    }
  };

  std::size_t n_threads = plan.threads;
  if (n_threads == 0) {
    n_threads = std::thread::hardware_concurrency();
    if (n_threads == 0) n_threads = 1;
  }
  n_threads = std::min(n_threads, cells.size());

  if (n_threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(n_threads);
    for (std::size_t t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  if (first_error) std::rethrow_exception(first_error);

  return records;
}

}  // namespace herder
