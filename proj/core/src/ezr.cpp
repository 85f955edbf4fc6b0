#include "herder/ezr.hpp"

#include <algorithm>
#include <cmath>

#include "herder/error.hpp"
#include "herder/scoring.hpp"

namespace herder {

namespace {

std::size_t isqrt(std::size_t n) {
  auto r = static_cast<std::size_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

void sort_scored(std::vector<ScoredRow>& rows) {
  std::sort(rows.begin(), rows.end(),
            [](const ScoredRow& a, const ScoredRow& b) {
              if (a.dist != b.dist) return a.dist < b.dist;
              return a.row < b.row;
            });
}

// Bins of one numeric column: boundaries at midpoints between adjacent
// sorted values at the equal-frequency cut indices. Boundaries that
// collapse onto a duplicate value merge their bins.
void numeric_bins(std::size_t column, std::vector<double> values,
                  std::size_t max_bins, std::vector<Bin>& out) {
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  std::size_t distinct = 1;
  for (std::size_t i = 1; i < n; ++i)
    if (values[i] != values[i - 1]) ++distinct;
  const std::size_t k = std::min(max_bins, distinct);

  std::vector<double> boundaries;
  for (std::size_t j = 1; j < k; ++j) {
    const std::size_t cut = j * n / k;
    if (cut == 0 || cut >= n) continue;
    const double a = values[cut - 1];
    const double b = values[cut];
    if (a == b) continue;  // duplicate run crosses the cut; merge
    const double mid = a + (b - a) / 2.0;
    if (boundaries.empty() || mid > boundaries.back())
      boundaries.push_back(mid);
  }

  double lo = values.front();
  for (const double b : boundaries) {
    Bin bin;
    bin.column = column;
    bin.lo = lo;
    bin.hi = b;
    out.push_back(std::move(bin));
    lo = b;
  }
  Bin top;
  top.column = column;
  top.lo = lo;  // hi stays +inf: the column's top bin is open above
  out.push_back(std::move(top));
}

void symbolic_bins(std::size_t column, std::vector<std::string> symbols,
                   std::vector<Bin>& out) {
  std::sort(symbols.begin(), symbols.end());
  symbols.erase(std::unique(symbols.begin(), symbols.end()), symbols.end());
  for (std::string& s : symbols) {
    Bin bin;
    bin.column = column;
    bin.symbolic = true;
    bin.symbol = std::move(s);
    out.push_back(std::move(bin));
  }
}

}  // namespace

void EzrConfig::validate() const {
  if (n_init < 2) throw Error("EzrConfig: n_init must be at least 2");
  if (budget < n_init) throw Error("EzrConfig: budget smaller than n_init");
  if (max_bins < 2) throw Error("EzrConfig: max_bins must be at least 2");
  if (!(epsilon > 0.0)) throw Error("EzrConfig: epsilon must be positive");
}

std::vector<RowId> init_sample(std::span<const RowId> pool, std::size_t n,
                               Rng& rng) {
  if (n > pool.size())
    throw Error("init_sample: asked for " + std::to_string(n) +
                " rows from a pool of " + std::to_string(pool.size()));
  return rng.sample(std::vector<RowId>(pool.begin(), pool.end()), n);
}

Split split_best_rest(std::vector<ScoredRow> scored) {
  if (scored.size() < 2)
    throw Error("split_best_rest: needs at least 2 scored rows");
  sort_scored(scored);
  const std::size_t n_best =
      std::max<std::size_t>(2, isqrt(scored.size()));
  Split split;
  split.best.assign(scored.begin(), scored.begin() + n_best);
  split.rest.assign(scored.begin() + n_best, scored.end());
  return split;
}

std::vector<Bin> discretize(const Dataset& ds, std::span<const ScoredRow> best,
                            std::span<const ScoredRow> rest,
                            std::size_t max_bins) {
  if (max_bins < 2) throw Error("discretize: max_bins must be at least 2");
  std::vector<Bin> bins;

  for (const std::size_t c : ds.decision_columns()) {
    const bool numeric = ds.columns()[c].kind == ColumnKind::numeric;
    const std::size_t first = bins.size();

    if (numeric) {
      std::vector<double> values;
      values.reserve(best.size() + rest.size());
      auto gather = [&](std::span<const ScoredRow> group) {
        for (const ScoredRow& s : group) {
          const Cell& cell = ds.row(s.row).cells[c];
          if (cell.is_number()) values.push_back(cell.number_value());
        }
      };
      gather(best);
      gather(rest);
      if (values.empty()) continue;  // nothing observed in this column
      numeric_bins(c, std::move(values), max_bins, bins);
    } else {
      std::vector<std::string> symbols;
      auto gather = [&](std::span<const ScoredRow> group) {
        for (const ScoredRow& s : group) {
          const Cell& cell = ds.row(s.row).cells[c];
          if (cell.is_symbol()) symbols.push_back(cell.symbol_value());
        }
      };
      gather(best);
      gather(rest);
      if (symbols.empty()) continue;
      symbolic_bins(c, std::move(symbols), bins);
    }

    auto count_into = [&](std::span<const ScoredRow> group, bool elite) {
      for (const ScoredRow& s : group) {
        const Cell& cell = ds.row(s.row).cells[c];
        if (cell.is_missing()) continue;
        for (std::size_t i = first; i < bins.size(); ++i) {
          if (bins[i].contains(cell)) {
            if (elite)
              ++bins[i].best_count;
            else
              ++bins[i].rest_count;
            break;
          }
        }
      }
    };
    count_into(best, true);
    count_into(rest, false);
  }

  return bins;
}

double score_range(const Bin& bin, std::size_t n_best, std::size_t n_rest,
                   double epsilon) {
  if (n_best == 0 || n_rest == 0)
    throw Error("score_range: empty comparison group");
  if (!(epsilon > 0.0)) throw Error("score_range: epsilon must be positive");
  const double b =
      static_cast<double>(bin.best_count) / static_cast<double>(n_best);
  const double r =
      static_cast<double>(bin.rest_count) / static_cast<double>(n_rest);
  return b * b / (r + epsilon);
}

std::vector<RangeRule> score_ranges(std::span<const Bin> bins,
                                    std::size_t n_best, std::size_t n_rest,
                                    double epsilon) {
  std::vector<RangeRule> rules;
  rules.reserve(bins.size());
  for (const Bin& bin : bins)
    rules.push_back({bin, score_range(bin, n_best, n_rest, epsilon)});
  return rules;
}

RowId acquire(std::span<const RangeRule> rules, const Dataset& ds,
              std::span<const RowId> unlabeled, Rng& rng) {
  if (unlabeled.empty()) throw Error("acquire: no unlabeled rows left");

  // Highest score wins; ties go to the lower column index, then the
  // lower lo (numeric) or lexically smaller symbol, whatever the span's
  // order, so callers may pass rules in any arrangement.
  const auto beats = [](const RangeRule& a, const RangeRule& b) {
    if (a.score != b.score) return a.score > b.score;
    if (a.bin.column != b.bin.column) return a.bin.column < b.bin.column;
    if (a.bin.symbolic != b.bin.symbolic) return !a.bin.symbolic;
    if (a.bin.symbolic) return a.bin.symbol < b.bin.symbol;
    return a.bin.lo < b.bin.lo;
  };
  const RangeRule* top = nullptr;
  for (const RangeRule& rule : rules)
    if (top == nullptr || beats(rule, *top)) top = &rule;

  if (top != nullptr) {
    std::vector<RowId> matches;
    for (const RowId id : unlabeled)
      if (top->bin.contains(ds.row(id).cells[top->bin.column]))
        matches.push_back(id);
    if (!matches.empty()) return matches[rng.next_below(matches.size())];
  }
  return unlabeled[rng.next_below(unlabeled.size())];
}

namespace {

// Distances of all labeled rows under the labeler's current bounds.
std::vector<ScoredRow> score_labeled(const Labeler& labeler,
                                     const HeavenPoint& heaven) {
  const std::vector<Interval> bounds = labeler.labeled_bounds();
  std::vector<ScoredRow> scored;
  scored.reserve(labeler.labeled_order().size());
  for (const RowId id : labeler.labeled_order())
    scored.push_back(
        {id, distance_to_heaven(labeler.objectives(id), bounds, heaven)});
  return scored;
}

RunOutcome finish(const Labeler& labeler, const HeavenPoint& heaven) {
  RunOutcome out;
  out.trace = score_labeled(labeler, heaven);
  out.labels_used = labeler.used();
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

}  // namespace

RunOutcome run_ezr(const Dataset& ds, const EzrConfig& cfg, Labeler& labeler) {
  cfg.validate();
  const std::vector<RowId>& pool = ds.labelable_rows();
  if (cfg.budget > pool.size())
    throw Error("budget " + std::to_string(cfg.budget) + " exceeds the " +
                std::to_string(pool.size()) + " labelable rows of '" +
                ds.name() + "'");
  if (labeler.budget() != cfg.budget)
    throw Error("labeler budget does not match cfg.budget");

  Rng rng(cfg.seed);
  const HeavenPoint heaven = HeavenPoint::from_goals(ds.objective_goals());

  for (const RowId id : init_sample(pool, cfg.n_init, rng)) labeler.label(id);

  while (labeler.used() < cfg.budget) {
    std::vector<ScoredRow> scored = score_labeled(labeler, heaven);

    if (cfg.stop_threshold) {
      double best = scored.front().dist;
      for (const ScoredRow& s : scored) best = std::min(best, s.dist);
      if (best < *cfg.stop_threshold) break;
    }

    const Split split = split_best_rest(std::move(scored));

    // With no rest group the contrast score is undefined; fall through
    // to acquire's uniform fallback with an empty rule list.
    std::vector<RangeRule> rules;
    if (!split.rest.empty()) {
      const std::vector<Bin> bins =
          discretize(ds, split.best, split.rest, cfg.max_bins);
      rules = score_ranges(bins, split.best.size(), split.rest.size(),
                           cfg.epsilon);
    }

    std::vector<RowId> unlabeled;
    unlabeled.reserve(pool.size() - labeler.used());
    for (const RowId id : pool)
      if (!labeler.is_labeled(id)) unlabeled.push_back(id);

    labeler.label(acquire(rules, ds, unlabeled, rng));
  }

  return finish(labeler, heaven);
}

RunOutcome run_ezr(const Dataset& ds, const EzrConfig& cfg) {
  Labeler labeler(ds, cfg.budget);
  return run_ezr(ds, cfg, labeler);
}

}  // namespace herder
