#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "herder/dataset.hpp"

namespace herder {

// Generator of sparse-influence benchmark tables: many decision columns,
// few that matter. Each objective is the mean squared distance of the
// key attributes to its own hidden target point (lower is better), plus
// optional Gaussian noise. Because the generator knows which row is
// truly best, generated datasets double as ground-truth test fixtures.

struct SynthSpec {
  std::size_t n_rows = 1000;
  std::size_t n_attrs = 10;      // decision columns
  std::size_t n_keys = 2;        // decision columns that influence objectives
  std::size_t n_objectives = 1;  // all minimized
  double noise = 0.0;            // stddev of additive Gaussian noise
  std::uint64_t seed = 1;

  void validate() const;  // throws Error on inconsistent settings
};

struct SynthResult {
  Dataset dataset;
  RowId planted_optimum = 0;  // row minimizing the noise-free aggregate
  std::vector<std::size_t> key_columns;       // dataset column indices
  std::vector<std::vector<double>> targets;   // [objective][key]

  /// Noise-free objective values of a row (reads only key columns).
  std::vector<double> noise_free_objectives(const Row& row) const;
};

/// Deterministic per spec: the same spec yields byte-identical CSV text.
SynthResult gen_sparse(const SynthSpec& spec);

/// Sidecar manifest (JSON) recording the spec, the planted optimum row
/// id, and the key column indices.
std::string synth_manifest_json(const SynthSpec& spec,
                                const SynthResult& result);

/// Writes `<prefix>.csv` and `<prefix>.json`.
void write_synth_files(const SynthSpec& spec, const SynthResult& result,
                       const std::filesystem::path& prefix);

}  // namespace herder
