#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "herder/dataset.hpp"
#include "herder/scoring.hpp"

namespace herder {

// Evaluation side of the harness. Everything here may read the whole
// dataset: these are the measurements a run is judged by afterwards,
// not information available to an optimizer during its run.

/// One optimizer run, as serialized to JSONL (field names match).
struct RunRecord {
  std::string dataset;
  std::string method;
  std::size_t budget = 0;
  std::uint64_t seed = 0;
  double best_dist = 0.0;   // "best_D": whole-dataset normalization
  double optimality = 0.0;  // 1 at the pool optimum, 0 at the random mean
  double wall_time = 0.0;   // seconds; excluded from determinism claims
};

/// Whole-dataset evaluation context: normalization bounds, ideal point,
/// the pool's true optimum and the expected score of a blind draw.
struct EvalContext {
  std::vector<Interval> bounds;
  std::vector<Goal> goals;
  HeavenPoint heaven;
  RowId opt_row = 0;
  double y_opt = 0.0;
  double y_av = 0.0;
};

/// Distance of one labelable row under whole-dataset normalization.
double eval_distance(const Dataset& ds, RowId id, const EvalContext& ctx);

/// Builds the evaluation context (scans every labelable row once).
EvalContext make_eval_context(const Dataset& ds);

struct RefOptimal {
  RowId row = 0;
  double dist = 0.0;
};

/// Exhaustive scan for the labelable row with minimum distance to the
/// ideal point (ties: lowest row id). Requires a non-empty pool.
RefOptimal reference_optimal(const Dataset& ds);

/// Exact expected distance of one uniform random labelable row.
double random_baseline_mean(const Dataset& ds);

/// 1 - (y_run - y_opt) / (y_av - y_opt): 1 at the optimum, 0 at the
/// random-draw mean, negative when a run does worse than blind luck.
/// Empty when the scale is degenerate (y_av == y_opt).
std::optional<double> optimality(double y_run, double y_opt, double y_av);

/// Cliff's delta in [-1, 1]: (#{a>b} - #{a<b}) / (|a|*|b|).
double cliffs_delta(std::span<const double> a, std::span<const double> b);

/// |delta| below this is conventionally a negligible effect.
inline constexpr double kNegligibleDelta = 0.147;

struct KsResult {
  double statistic = 0.0;  // max ECDF gap
  bool significant = false;
};

// Two-sample Kolmogorov-Smirnov test: significant when the max ECDF gap
// exceeds c(alpha) * sqrt((n+m)/(n*m)) with c(0.05) = 1.358. Samples
// smaller than 5 on either side always report not-significant.
KsResult ks_significant(std::span<const double> a, std::span<const double> b,
                        double alpha = 0.05);

/// Wins of one method at one budget: on how many datasets (of `total`
/// ranked at that budget) it was statistically indistinguishable from
/// that dataset's best method.
struct RankEntry {
  std::size_t budget = 0;
  std::string method;
  std::size_t wins = 0;
  std::size_t total = 0;
};

struct RankReport {
  std::vector<RankEntry> entries;  // sorted by (budget, method)
  std::vector<std::string> warnings;
};

// Per (dataset, budget), the method with the highest median optimality
// sets the bar; every method whose optimality sample is not
// distinguishable from the bar (KS not significant, or |Cliff's delta|
// below kNegligibleDelta) collects a win. Datasets with missing or
// sub-2-seed cells are excluded from that budget with a warning.
// Requires records covering at least two methods.
RankReport rank_methods(const std::vector<RunRecord>& records);

/// Mean optimality per (method, budget), sorted by (budget, method).
struct MeanEntry {
  std::size_t budget = 0;
  std::string method;
  double mean = 0.0;
  std::size_t runs = 0;
};
std::vector<MeanEntry> mean_optimality(const std::vector<RunRecord>& records);

// JSONL serialization of run records. One record per line; field order
// is dataset, method, budget, seed, best_D, optimality, wall_time.
std::string to_json_line(const RunRecord& record);
RunRecord run_record_from_json(const std::string& line);
std::vector<RunRecord> read_jsonl(const std::filesystem::path& path);
void write_jsonl(std::span<const RunRecord> records, std::ostream& out);

}  // namespace herder
