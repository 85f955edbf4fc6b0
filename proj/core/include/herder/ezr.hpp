#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "herder/dataset.hpp"
#include "herder/labeler.hpp"
#include "herder/rng.hpp"

namespace herder {

// Budget-frugal optimizer over a fixed pool of rows. Starting from a
// few random labels it repeatedly splits the labeled rows into a small
// elite (by distance to the ideal point) and the rest, scores coarse
// decision-value ranges by how sharply they separate the two groups,
// and spends the next label on an unlabeled row inside the single most
// contrastive range.

/// One labeled row with its current distance score (lower is better).
struct ScoredRow {
  RowId row = 0;
  double dist = 0.0;
};

/// A contiguous value range of one decision column, with occupancy
/// counts for the elite/rest groups it was built against. Numeric bins
/// are half-open [lo, hi); the top bin of a column extends to +inf.
struct Bin {
  std::size_t column = 0;  // dataset column index
  bool symbolic = false;
  double lo = 0.0;
  double hi = std::numeric_limits<double>::infinity();
  std::string symbol;
  std::size_t best_count = 0;
  std::size_t rest_count = 0;

  bool contains(const Cell& cell) const {
    if (symbolic)
      return cell.is_symbol() && cell.symbol_value() == symbol;
    return cell.is_number() && cell.number_value() >= lo &&
           cell.number_value() < hi;
  }
};

/// A bin together with its contrast score.
struct RangeRule {
  Bin bin;
  double score = 0.0;
};

struct EzrConfig {
  std::size_t n_init = 4;    // rows labeled blind before herding starts
  std::size_t budget = 32;   // total labels allowed
  std::size_t max_bins = 7;  // bins per numeric column
  double epsilon = 1e-32;    // keeps the contrast ratio finite
  std::optional<double> stop_threshold;  // optional early stop on best dist
  std::uint64_t seed = 1;

  void validate() const;  // throws Error on out-of-range settings
};

/// Result of one optimizer run. `trace` lists labeled rows in labeling
/// order with distances under the final labeled-set normalization;
/// `best_row`/`best_dist` is the trace minimum (ties: lowest row id).
struct RunOutcome {
  RowId best_row = 0;
  double best_dist = 0.0;
  std::size_t labels_used = 0;
  std::vector<ScoredRow> trace;
};

/// n distinct ids drawn uniformly from `pool` without replacement.
std::vector<RowId> init_sample(std::span<const RowId> pool, std::size_t n,
                               Rng& rng);

struct Split {
  std::vector<ScoredRow> best;  // elite, ascending (dist, id)
  std::vector<ScoredRow> rest;
};

/// Sorts by (dist, id) and splits off the top max(2, floor(sqrt(N)))
/// rows as the elite. Requires at least 2 scored rows.
Split split_best_rest(std::vector<ScoredRow> scored);

// Equal-frequency bins for every decision column over the labeled rows
// (elite + rest). Numeric columns get min(max_bins, #distinct) bins cut
// at value midpoints (duplicate boundaries merge); symbolic columns get
// one bin per observed symbol. Missing cells fall in no bin. Bins come
// back sorted by (column, lo/symbol), each carrying group counts.
std::vector<Bin> discretize(const Dataset& ds, std::span<const ScoredRow> best,
                            std::span<const ScoredRow> rest,
                            std::size_t max_bins);

/// Contrast score b^2 / (r + epsilon) with b, r the bin's occupancy
/// frequencies in the elite and rest groups.
double score_range(const Bin& bin, std::size_t n_best, std::size_t n_rest,
                   double epsilon);
std::vector<RangeRule> score_ranges(std::span<const Bin> bins,
                                    std::size_t n_best, std::size_t n_rest,
                                    double epsilon);

// Picks the next row to label: a uniform choice among unlabeled rows
// matching the highest-scoring rule (ties: lower column index, then
// lower lo / lexically smaller symbol). When no rule exists or no row
// matches, falls back to a uniform unlabeled row.
RowId acquire(std::span<const RangeRule> rules, const Dataset& ds,
              std::span<const RowId> unlabeled, Rng& rng);

/// Runs the full acquisition loop against `labeler` (whose budget must
/// equal cfg.budget). The overload without a Labeler constructs one.
RunOutcome run_ezr(const Dataset& ds, const EzrConfig& cfg, Labeler& labeler);
RunOutcome run_ezr(const Dataset& ds, const EzrConfig& cfg);

}  // namespace herder
