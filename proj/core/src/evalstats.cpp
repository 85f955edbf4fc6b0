#include "herder/evalstats.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <set>

#include <json.hpp>

#include "herder/error.hpp"

namespace herder {

double eval_distance(const Dataset& ds, RowId id, const EvalContext& ctx) {
  const std::vector<double> values = ds.objective_values(id);
  return distance_to_heaven(values, ctx.bounds, ctx.heaven);
}

EvalContext make_eval_context(const Dataset& ds) {
  EvalContext ctx;
  ctx.bounds = ds.objective_bounds();
  ctx.goals = ds.objective_goals();
  ctx.heaven = HeavenPoint::from_goals(ctx.goals);
  const RefOptimal ref = reference_optimal(ds);
  ctx.opt_row = ref.row;
  ctx.y_opt = ref.dist;
  ctx.y_av = random_baseline_mean(ds);
  return ctx;
}

RefOptimal reference_optimal(const Dataset& ds) {
  const std::vector<RowId>& pool = ds.labelable_rows();
  if (pool.empty())
    throw Error("reference_optimal: '" + ds.name() + "' has no labelable rows");
  const HeavenPoint heaven = HeavenPoint::from_goals(ds.objective_goals());
  const std::vector<Interval>& bounds = ds.objective_bounds();

  RefOptimal best{pool.front(), 0.0};
  bool first = true;
  for (const RowId id : pool) {
    const double d =
        distance_to_heaven(ds.objective_values(id), bounds, heaven);
    if (first || d < best.dist) {  // pool is ascending by id, so strict
      best = {id, d};              // improvement keeps the lowest id
      first = false;
    }
  }
  return best;
}

double random_baseline_mean(const Dataset& ds) {
  const std::vector<RowId>& pool = ds.labelable_rows();
  if (pool.empty())
    throw Error("random_baseline_mean: '" + ds.name() +
                "' has no labelable rows");
  const HeavenPoint heaven = HeavenPoint::from_goals(ds.objective_goals());
  const std::vector<Interval>& bounds = ds.objective_bounds();
  double sum = 0.0;
  for (const RowId id : pool)
    sum += distance_to_heaven(ds.objective_values(id), bounds, heaven);
  return sum / static_cast<double>(pool.size());
}

std::optional<double> optimality(double y_run, double y_opt, double y_av) {
  if (!std::isfinite(y_run) || !std::isfinite(y_opt) || !std::isfinite(y_av))
    throw Error("optimality: inputs must be finite");
  if (y_av == y_opt) return std::nullopt;
  return 1.0 - (y_run - y_opt) / (y_av - y_opt);
}

double cliffs_delta(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || b.empty()) throw Error("cliffs_delta: empty sample");
  long long gt = 0;
  long long lt = 0;
  for (const double x : a) {
    for (const double y : b) {
      if (x > y)
        ++gt;
      else if (x < y)
        ++lt;
    }
  }
  return static_cast<double>(gt - lt) /
         (static_cast<double>(a.size()) * static_cast<double>(b.size()));
}

KsResult ks_significant(std::span<const double> a, std::span<const double> b,
                        double alpha) {
  if (a.empty() || b.empty()) throw Error("ks_significant: empty sample");
  if (!(alpha > 0.0 && alpha < 1.0))
    throw Error("ks_significant: alpha must be in (0, 1)");

  std::vector<double> sa(a.begin(), a.end());
  std::vector<double> sb(b.begin(), b.end());
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());

  const std::size_t n = sa.size();
  const std::size_t m = sb.size();
  std::size_t i = 0;
  std::size_t j = 0;
  double stat = 0.0;
  while (i < n || j < m) {
    const double v = (i < n && (j >= m || sa[i] <= sb[j])) ? sa[i] : sb[j];
    while (i < n && sa[i] <= v) ++i;
    while (j < m && sb[j] <= v) ++j;
    const double gap = std::fabs(static_cast<double>(i) / n -
                                 static_cast<double>(j) / m);
    stat = std::max(stat, gap);
  }

  KsResult result;
  result.statistic = stat;
  if (n >= 5 && m >= 5) {
    const double c = std::sqrt(-std::log(alpha / 2.0) / 2.0);  // 1.358 at 0.05
    const double critical =
        c * std::sqrt(static_cast<double>(n + m) /
                      (static_cast<double>(n) * static_cast<double>(m)));
    result.significant = stat > critical;
  }
  return result;
}

namespace {

double median(std::vector<double> xs) {
  std::sort(xs.begin(), xs.end());
  const std::size_t n = xs.size();
  if (n % 2 == 1) return xs[n / 2];
  return (xs[n / 2 - 1] + xs[n / 2]) / 2.0;
}

}  // namespace

RankReport rank_methods(const std::vector<RunRecord>& records) {
  if (records.empty()) throw Error("rank_methods: no records");

  std::set<std::string> methods;
  std::set<std::size_t> budgets;
  std::set<std::string> datasets;
  for (const RunRecord& r : records) {
    methods.insert(r.method);
    budgets.insert(r.budget);
    datasets.insert(r.dataset);
  }
  if (methods.size() < 2)
    throw Error("rank_methods: needs at least two methods to compare");

  // samples[budget][dataset][method] -> optimality values
  std::map<std::size_t,
           std::map<std::string, std::map<std::string, std::vector<double>>>>
      samples;
  for (const RunRecord& r : records)
    samples[r.budget][r.dataset][r.method].push_back(r.optimality);

  RankReport report;
  for (const std::size_t budget : budgets) {
    std::map<std::string, std::size_t> wins;
    for (const std::string& m : methods) wins[m] = 0;
    std::size_t total = 0;

    for (const std::string& dataset : datasets) {
      const auto& by_method = samples[budget][dataset];
      bool complete = true;
      for (const std::string& m : methods) {
        const auto it = by_method.find(m);
        if (it == by_method.end() || it->second.size() < 2) {
          complete = false;
          break;
        }
      }
      if (!complete) {
        report.warnings.push_back(
            "dataset '" + dataset + "' excluded at budget " +
            std::to_string(budget) + ": missing or single-seed cells");
        continue;
      }
      ++total;

      // Highest median sets the bar; name order breaks exact ties.
      const std::string* best_method = nullptr;
      double best_median = 0.0;
      for (const std::string& m : methods) {
        const double med = median(by_method.at(m));
        if (best_method == nullptr || med > best_median) {
          best_method = &m;
          best_median = med;
        }
      }

      const std::vector<double>& best_sample = by_method.at(*best_method);
      for (const std::string& m : methods) {
        if (m == *best_method) {
          ++wins[m];
          continue;
        }
        const std::vector<double>& sample = by_method.at(m);
        const KsResult ks = ks_significant(sample, best_sample);
        const double delta = std::fabs(cliffs_delta(sample, best_sample));
        if (!ks.significant || delta < kNegligibleDelta) ++wins[m];
      }
    }

    for (const std::string& m : methods)
      report.entries.push_back({budget, m, wins[m], total});
  }
  return report;
}

std::vector<MeanEntry> mean_optimality(const std::vector<RunRecord>& records) {
  std::map<std::pair<std::size_t, std::string>, std::pair<double, std::size_t>>
      acc;
  for (const RunRecord& r : records) {
    auto& slot = acc[{r.budget, r.method}];
    slot.first += r.optimality;
    slot.second += 1;
  }
  std::vector<MeanEntry> out;
  out.reserve(acc.size());
  for (const auto& [key, sum_count] : acc)
    out.push_back({key.first, key.second,
                   sum_count.first / static_cast<double>(sum_count.second),
                   sum_count.second});
  return out;
}

std::string to_json_line(const RunRecord& r) {
  nlohmann::ordered_json j;
  j["dataset"] = r.dataset;
  j["method"] = r.method;
  j["budget"] = r.budget;
  j["seed"] = r.seed;
  j["best_D"] = r.best_dist;
  j["optimality"] = r.optimality;
  j["wall_time"] = r.wall_time;
  return j.dump();
}

namespace {

RunRecord record_from_parsed(const nlohmann::json& j) {
  if (!j.is_object()) throw Error("record is not a JSON object");
  RunRecord r;
  auto need = [&](const char* field) -> const nlohmann::json& {
    const auto it = j.find(field);
    if (it == j.end())
      throw Error(std::string("missing field '") + field + "'");
    return *it;
  };
  const auto& dataset = need("dataset");
  const auto& method = need("method");
  const auto& budget = need("budget");
  const auto& seed = need("seed");
  const auto& best_d = need("best_D");
  const auto& opt = need("optimality");
  const auto& wall = need("wall_time");
  if (!dataset.is_string()) throw Error("field 'dataset' must be a string");
  if (!method.is_string()) throw Error("field 'method' must be a string");
  if (!budget.is_number_unsigned() || budget.get<std::uint64_t>() == 0)
    throw Error("field 'budget' must be a positive integer");
  if (!seed.is_number_integer() && !seed.is_number_unsigned())
    throw Error("field 'seed' must be an integer");
  if (!best_d.is_number()) throw Error("field 'best_D' must be a number");
  if (!opt.is_number()) throw Error("field 'optimality' must be a number");
  if (!wall.is_number()) throw Error("field 'wall_time' must be a number");
  r.dataset = dataset.get<std::string>();
  r.method = method.get<std::string>();
  r.budget = budget.get<std::size_t>();
  r.seed = seed.get<std::uint64_t>();
  r.best_dist = best_d.get<double>();
  r.optimality = opt.get<double>();
  r.wall_time = wall.get<double>();
  if (!std::isfinite(r.best_dist) || !std::isfinite(r.optimality))
    throw Error("best_D and optimality must be finite");
  return r;
}

}  // namespace

RunRecord run_record_from_json(const std::string& line) {
  nlohmann::json parsed;
  try {
    parsed = nlohmann::json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  try {
    return record_from_parsed(parsed);
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

std::vector<RunRecord> read_jsonl(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  std::vector<RunRecord> records;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      records.push_back(run_record_from_json(line));
    } catch (const ParseError& e) {
      throw ParseError("'" + path.string() + "' line " +
                           std::to_string(line_no) + ": " + e.what(),
                       line_no, "");
    }
  }
  return records;
}

void write_jsonl(std::span<const RunRecord> records, std::ostream& out) {
  for (const RunRecord& r : records) out << to_json_line(r) << '\n';
}

}  // namespace herder
