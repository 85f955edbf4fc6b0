#pragma once

#include "herder/dataset.hpp"
#include "herder/ezr.hpp"
#include "herder/labeler.hpp"
#include "herder/rng.hpp"

namespace herder {

// Label-budget baselines the herding loop is compared against. Both
// honor the same Labeler contract and the same RunOutcome shape as
// run_ezr: label `budget` rows, return the labeled row closest to the
// ideal point under the labeled-set normalization.

// Distance between two rows in decision space: numeric columns compare
// values normalized by whole-pool min/max, symbolic columns are 0/1,
// and a missing cell is maximally far (1) from anything. The per-column
// differences combine as Euclidean distance scaled by 1/sqrt(#decision
// columns), so the result lives in [0, 1].
double decision_distance(const Dataset& ds, RowId a, RowId b);

/// Labels a uniform random subset of the pool (without replacement).
RunOutcome run_random(const Dataset& ds, Labeler& labeler, Rng& rng);
RunOutcome run_random(const Dataset& ds, std::size_t budget, Rng& rng);

// Labels a spread-out subset chosen by k-means++ seeding: the first row
// uniformly, each next row with probability proportional to its squared
// decision distance to the nearest row already chosen (uniform among
// the remainder when every distance is zero).
RunOutcome run_kpp(const Dataset& ds, Labeler& labeler, Rng& rng);
RunOutcome run_kpp(const Dataset& ds, std::size_t budget, Rng& rng);

}  // namespace herder
