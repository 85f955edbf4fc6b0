#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "herder/dataset.hpp"
#include "herder/evalstats.hpp"

namespace herder {

/// Methods the harness can dispatch to.
bool is_known_method(const std::string& method);
const std::vector<std::string>& known_methods();  // {"ezr","kpp","random"}

/// A full benchmark sweep: every dataset x method x budget x repeat.
/// The seed of repeat r is base_seed + r.
struct BenchPlan {
  std::vector<std::filesystem::path> datasets;
  std::vector<std::string> methods;
  std::vector<std::size_t> budgets{8, 16, 32, 64, 128};
  std::size_t repeats = 20;
  std::uint64_t base_seed = 1;
  std::size_t threads = 0;  // 0: one per hardware thread
};

/// One run end to end: dispatch the method, then judge the returned row
/// against the whole dataset. `dataset_label` becomes the record's
/// dataset field.
RunRecord execute_run(const Dataset& ds, const EvalContext& ctx,
                      const std::string& dataset_label,
                      const std::string& method, std::size_t budget,
                      std::uint64_t seed);

// Runs the plan. Validates everything up front and loads every dataset
// before the first run, so a bad path, an over-budget dataset, or a
// dataset on which optimality is undefined aborts with no partial
// output. Cells may execute on several threads; the returned records
// are always in plan order (datasets, then methods, then budgets, then
// repeats), so identical plans yield identical records apart from
// wall_time.
std::vector<RunRecord> run_bench_plan(const BenchPlan& plan);

}  // namespace herder
