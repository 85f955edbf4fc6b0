#pragma once

#include <cstddef>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "herder/dataset.hpp"
#include "herder/online_stats.hpp"

namespace herder {

// Gatekeeper for objective values. Optimizers see objectives only by
// labeling rows through one of these, which charges a fixed budget and
// keeps per-objective running stats over what has been revealed.
//
// Every access is logged and every denied access is counted, so a test
// harness can audit after a run that no optimizer ever peeked at an
// unlabeled row and that label spend stayed within budget.
class Labeler {
 public:
  Labeler(const Dataset& dataset, std::size_t budget);

  const Dataset& dataset() const { return *dataset_; }
  std::size_t budget() const { return budget_; }
  std::size_t used() const { return used_; }
  std::size_t remaining() const { return budget_ - used_; }
  bool is_labeled(RowId id) const { return labeled_.count(id) != 0; }

  /// Row ids in the order they were labeled.
  const std::vector<RowId>& labeled_order() const { return order_; }

  /// Reveals a row's objectives. Charges one unit of budget the first
  /// time; re-labeling an already-labeled row is free. Throws
  /// BudgetExhausted when a fresh row is requested past the budget and
  /// Error for rows that are unknown or have missing objectives.
  const std::vector<double>& label(RowId id);

  /// Read-only access to an already-labeled row's objectives. Throws
  /// (and counts the attempt) for unlabeled rows.
  const std::vector<double>& objectives(RowId id) const;

  /// Per-objective stats over labeled rows, objective_columns() order.
  const std::vector<OnlineStats>& objective_stats() const { return stats_; }

  /// Min/max of each objective over the labeled rows; the learner-side
  /// normalization. Meaningful once used() >= 1.
  std::vector<Interval> labeled_bounds() const;

  // Audit trail.
  /// Row ids of every successful objective access (labels and reads).
  const std::vector<RowId>& access_log() const { return access_log_; }
  /// Number of rejected objective reads of unlabeled rows.
  std::size_t denied_reads() const { return denied_reads_; }

 private:
  const Dataset* dataset_;
  std::size_t budget_;
  std::size_t used_ = 0;
  std::unordered_set<RowId> labeled_;
  std::vector<RowId> order_;
  std::unordered_map<RowId, std::vector<double>> revealed_;
  std::vector<OnlineStats> stats_;
  mutable std::vector<RowId> access_log_;
  mutable std::size_t denied_reads_ = 0;
};

}  // namespace herder
