#include "herder/baselines.hpp"

#include <algorithm>
#include <cmath>

#include "herder/error.hpp"
#include "herder/scoring.hpp"

namespace herder {

namespace {

// Whole-pool normalization bounds of one numeric decision column.
Interval column_bounds(const Dataset& ds, std::size_t column) {
  OnlineStats stats;
  for (const Row& r : ds.rows()) {
    const Cell& cell = r.cells[column];
    if (cell.is_number()) stats.add(cell.number_value());
  }
  if (stats.count() == 0) return {0.0, 0.0};
  return stats.bounds();
}

std::vector<Interval> decision_bounds(const Dataset& ds) {
  std::vector<Interval> bounds;
  bounds.reserve(ds.decision_columns().size());
  for (const std::size_t c : ds.decision_columns()) {
    if (ds.columns()[c].kind == ColumnKind::numeric)
      bounds.push_back(column_bounds(ds, c));
    else
      bounds.push_back({0.0, 0.0});
  }
  return bounds;
}

double column_difference(const ColumnSpec& spec, const Interval& bounds,
                         const Cell& a, const Cell& b) {
  if (a.is_missing() || b.is_missing()) return 1.0;
  if (spec.kind == ColumnKind::numeric) {
    const double na = norm(a.number_value(), bounds.lo, bounds.hi);
    const double nb = norm(b.number_value(), bounds.lo, bounds.hi);
    return std::fabs(na - nb);
  }
  return a.symbol_value() == b.symbol_value() ? 0.0 : 1.0;
}

double row_distance(const Dataset& ds, const std::vector<Interval>& bounds,
                    const Row& a, const Row& b) {
  const auto& cols = ds.decision_columns();
  double acc = 0.0;
  for (std::size_t i = 0; i < cols.size(); ++i) {
    const std::size_t c = cols[i];
    const double d =
        column_difference(ds.columns()[c], bounds[i], a.cells[c], b.cells[c]);
    acc += d * d;
  }
  return std::sqrt(acc) / std::sqrt(static_cast<double>(cols.size()));
}

// Shared tail: label the chosen rows in order, then score the labeled
// set under its own bounds and return the minimum (ties: lowest id).
RunOutcome label_and_finish(const Dataset& ds, Labeler& labeler,
                            const std::vector<RowId>& chosen) {
  for (const RowId id : chosen) labeler.label(id);

  const HeavenPoint heaven = HeavenPoint::from_goals(ds.objective_goals());
  const std::vector<Interval> bounds = labeler.labeled_bounds();
  RunOutcome out;
  out.labels_used = labeler.used();
  out.trace.reserve(labeler.labeled_order().size());
  for (const RowId id : labeler.labeled_order())
    out.trace.push_back(
        {id, distance_to_heaven(labeler.objectives(id), bounds, heaven)});
  const ScoredRow* best = nullptr;
  for (const ScoredRow& s : out.trace) {
    if (best == nullptr || s.dist < best->dist ||
        (s.dist == best->dist && s.row < best->row))
      best = &s;
  }
  out.best_row = best->row;
  out.best_dist = best->dist;
  return out;
}

void check_budget(const Dataset& ds, std::size_t budget) {
  if (budget < 1) throw Error("budget must be at least 1");
  if (budget > ds.labelable_rows().size())
    throw Error("budget " + std::to_string(budget) + " exceeds the " +
                std::to_string(ds.labelable_rows().size()) +
                " labelable rows of '" + ds.name() + "'");
}

}  // namespace

double decision_distance(const Dataset& ds, RowId a, RowId b) {
  return row_distance(ds, decision_bounds(ds), ds.row(a), ds.row(b));
}

RunOutcome run_random(const Dataset& ds, Labeler& labeler, Rng& rng) {
  const std::size_t budget = labeler.budget();
  check_budget(ds, budget);
  const std::vector<RowId> chosen =
      rng.sample(ds.labelable_rows(), budget);
  return label_and_finish(ds, labeler, chosen);
}

RunOutcome run_random(const Dataset& ds, std::size_t budget, Rng& rng) {
  Labeler labeler(ds, budget);
  return run_random(ds, labeler, rng);
}

RunOutcome run_kpp(const Dataset& ds, Labeler& labeler, Rng& rng) {
  const std::size_t budget = labeler.budget();
  check_budget(ds, budget);

  const std::vector<RowId>& pool = ds.labelable_rows();
  const std::vector<Interval> bounds = decision_bounds(ds);
  const std::size_t n = pool.size();

  std::vector<bool> selected(n, false);
  std::vector<double> min_dist_sq(n, 0.0);
  std::vector<RowId> chosen;
  chosen.reserve(budget);

  std::size_t pick = rng.next_below(n);
  while (chosen.size() < budget) {
    selected[pick] = true;
    chosen.push_back(pool[pick]);
    if (chosen.size() == budget) break;

    const Row& picked_row = ds.row(pool[pick]);
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (selected[i]) {
        min_dist_sq[i] = 0.0;
        continue;
      }
      const double d = row_distance(ds, bounds, ds.row(pool[i]), picked_row);
      const double dsq = d * d;
      if (chosen.size() == 1 || dsq < min_dist_sq[i]) min_dist_sq[i] = dsq;
      total += min_dist_sq[i];
    }

    if (total > 0.0) {
      const double target = rng.next_unit() * total;
      double cum = 0.0;
      std::size_t last_candidate = n;
      pick = n;
      for (std::size_t i = 0; i < n; ++i) {
        if (selected[i] || min_dist_sq[i] <= 0.0) continue;
        last_candidate = i;
        cum += min_dist_sq[i];
        if (cum > target) {
          pick = i;
          break;
        }
      }
      if (pick == n) pick = last_candidate;  // fp slack on the last weight
    } else {
      // Every remaining row coincides with a chosen one; pick uniformly.
      std::size_t remaining = 0;
      for (std::size_t i = 0; i < n; ++i)
        if (!selected[i]) ++remaining;
      std::size_t skip = rng.next_below(remaining);
      pick = n;
      for (std::size_t i = 0; i < n; ++i) {
        if (selected[i]) continue;
        if (skip == 0) {
          pick = i;
          break;
        }
        --skip;
      }
    }
  }

  return label_and_finish(ds, labeler, chosen);
}

RunOutcome run_kpp(const Dataset& ds, std::size_t budget, Rng& rng) {
  Labeler labeler(ds, budget);
  return run_kpp(ds, labeler, rng);
}

}  // namespace herder
