#include "herder/synth.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "herder/error.hpp"
#include "herder/rng.hpp"
#include "herder/scoring.hpp"

namespace herder {

namespace {

std::string padded(std::size_t value, std::size_t width) {
  std::string s = std::to_string(value);
  while (s.size() < width) s.insert(s.begin(), '0');
  return s;
}

double mean_sq_distance(const std::vector<double>& xs,
                        const std::vector<std::size_t>& keys,
                        const std::vector<double>& target) {
  double acc = 0.0;
  for (std::size_t k = 0; k < keys.size(); ++k) {
    const double d = xs[keys[k]] - target[k];
    acc += d * d;
  }
  return acc / static_cast<double>(keys.size());
}

}  // namespace

void SynthSpec::validate() const {
  if (n_rows < 16) throw Error("SynthSpec: n_rows must be at least 16");
  if (n_attrs < 1) throw Error("SynthSpec: n_attrs must be at least 1");
  if (n_keys < 1 || n_keys > n_attrs)
    throw Error("SynthSpec: n_keys must be in [1, n_attrs]");
  if (n_objectives < 1)
    throw Error("SynthSpec: n_objectives must be at least 1");
  if (!(noise >= 0.0)) throw Error("SynthSpec: noise must be nonnegative");
}

std::vector<double> SynthResult::noise_free_objectives(const Row& row) const {
  std::vector<double> xs(dataset.columns().size(), 0.0);
  for (const std::size_t c : key_columns)
    xs[c] = row.cells[c].number_value();
  std::vector<double> out;
  out.reserve(targets.size());
  for (const auto& target : targets)
    out.push_back(mean_sq_distance(xs, key_columns, target));
  return out;
}

SynthResult gen_sparse(const SynthSpec& spec) {
  spec.validate();
  Rng rng(spec.seed);

  // Draw order is part of the format: keys, then targets, then row
  // decisions, then noise. Reordering would silently change datasets.
  std::vector<std::size_t> all_attrs(spec.n_attrs);
  std::iota(all_attrs.begin(), all_attrs.end(), std::size_t{0});
  std::vector<std::size_t> keys = rng.sample(std::move(all_attrs), spec.n_keys);
  std::sort(keys.begin(), keys.end());

  std::vector<std::vector<double>> targets(spec.n_objectives);
  for (auto& target : targets) {
    target.resize(spec.n_keys);
    for (double& t : target) t = rng.next_unit();
  }

  std::vector<std::vector<double>> decisions(spec.n_rows);
  for (auto& xs : decisions) {
    xs.resize(spec.n_attrs);
    for (double& x : xs) x = rng.next_unit();
  }

  std::vector<std::vector<double>> clean(spec.n_rows);
  std::vector<std::vector<double>> noisy(spec.n_rows);
  for (std::size_t r = 0; r < spec.n_rows; ++r) {
    clean[r].reserve(spec.n_objectives);
    noisy[r].reserve(spec.n_objectives);
    for (std::size_t j = 0; j < spec.n_objectives; ++j) {
      const double f = mean_sq_distance(decisions[r], keys, targets[j]);
      clean[r].push_back(f);
      noisy[r].push_back(
          spec.noise > 0.0 ? f + spec.noise * rng.next_gaussian() : f);
    }
  }

  // Planted optimum: the row a whole-pool scan of the noise-free
  // objectives would return, i.e. minimum distance to the ideal point
  // under noise-free per-objective min/max bounds (ties: lowest id).
  std::vector<Interval> clean_bounds(spec.n_objectives);
  for (std::size_t j = 0; j < spec.n_objectives; ++j) {
    OnlineStats stats;
    for (std::size_t r = 0; r < spec.n_rows; ++r) stats.add(clean[r][j]);
    clean_bounds[j] = stats.bounds();
  }
  const std::vector<Goal> goals(spec.n_objectives, Goal::minimize);
  const HeavenPoint heaven = HeavenPoint::from_goals(goals);
  RowId planted = 0;
  double planted_dist = 0.0;
  for (std::size_t r = 0; r < spec.n_rows; ++r) {
    const double d = distance_to_heaven(clean[r], clean_bounds, heaven);
    if (r == 0 || d < planted_dist) {
      planted = static_cast<RowId>(r);
      planted_dist = d;
    }
  }

  const std::size_t attr_width = std::to_string(spec.n_attrs).size();
  std::vector<std::string> names;
  names.reserve(spec.n_attrs + spec.n_objectives);
  for (std::size_t a = 1; a <= spec.n_attrs; ++a)
    names.push_back("A" + padded(a, attr_width));
  for (std::size_t j = 1; j <= spec.n_objectives; ++j)
    names.push_back("Obj" + std::to_string(j) + "-");
  std::vector<ColumnSpec> columns = parse_header(names);

  std::vector<Row> rows(spec.n_rows);
  for (std::size_t r = 0; r < spec.n_rows; ++r) {
    rows[r].id = static_cast<RowId>(r);
    rows[r].cells.reserve(names.size());
    for (const double x : decisions[r]) rows[r].cells.push_back(Cell::number(x));
    for (const double y : noisy[r]) rows[r].cells.push_back(Cell::number(y));
  }

  std::ostringstream name;
  name << "synth-r" << spec.n_rows << "-a" << spec.n_attrs << "-k"
       << spec.n_keys << "-o" << spec.n_objectives << "-n"
       << format_double(spec.noise) << "-s" << spec.seed;

  SynthResult result{
      Dataset(name.str(), std::move(columns), std::move(rows)), planted,
      std::move(keys), std::move(targets)};
  return result;
}

std::string synth_manifest_json(const SynthSpec& spec,
                                const SynthResult& result) {
  nlohmann::ordered_json j;
  j["dataset"] = result.dataset.name();
  j["planted_optimum_id"] = result.planted_optimum;
  j["key_columns"] = result.key_columns;
  j["n_rows"] = spec.n_rows;
  j["n_attrs"] = spec.n_attrs;
  j["n_keys"] = spec.n_keys;
  j["n_objectives"] = spec.n_objectives;
  j["noise"] = spec.noise;
  j["seed"] = spec.seed;
  return j.dump(2) + "\n";
}

void write_synth_files(const SynthSpec& spec, const SynthResult& result,
                       const std::filesystem::path& prefix) {
  std::filesystem::path csv_path = prefix;
  csv_path += ".csv";
  std::filesystem::path manifest_path = prefix;
  manifest_path += ".json";

  std::ofstream csv(csv_path);
  if (!csv) throw Error("cannot write '" + csv_path.string() + "'");
  write_csv(result.dataset, csv);
  if (!csv.good()) throw Error("failed writing '" + csv_path.string() + "'");

  std::ofstream manifest(manifest_path);
  if (!manifest) throw Error("cannot write '" + manifest_path.string() + "'");
  manifest << synth_manifest_json(spec, result);
  if (!manifest.good())
    throw Error("failed writing '" + manifest_path.string() + "'");
}

}  // namespace herder
