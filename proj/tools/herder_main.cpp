// herder: pool-based multi-objective optimization harness.
//
//   herder run    one optimizer run, JSON record on stdout
//   herder bench  a full sweep, JSONL records to a file
//   herder rank   win-fraction and mean-optimality summaries of a JSONL file
//   herder synth  generate a sparse-influence benchmark dataset
//
// Domain errors (bad files, unknown methods, impossible budgets) exit
// with code 2 and a message on stderr.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "herder/bench.hpp"
#include "herder/dataset.hpp"
#include "herder/error.hpp"
#include "herder/evalstats.hpp"
#include "herder/synth.hpp"

namespace {

constexpr int kErrorExit = 2;

void require_known_method(const std::string& method) {
  if (!herder::is_known_method(method)) {
    std::string known;
    for (const auto& m : herder::known_methods()) {
      if (!known.empty()) known += ", ";
      known += m;
    }
    throw herder::Error("unknown method '" + method + "' (known: " + known +
                        ")");
  }
}

int cmd_run(const std::string& data, const std::string& method,
            std::size_t budget, std::uint64_t seed) {
  require_known_method(method);
  if (budget == 0) throw herder::Error("budget must be at least 1");
  const herder::Dataset ds = herder::load_csv(data);
  if (ds.labelable_rows().size() < budget)
    throw herder::Error("budget " + std::to_string(budget) + " exceeds the " +
                        std::to_string(ds.labelable_rows().size()) +
                        " labelable rows of '" + data + "'");
  const herder::EvalContext ctx = herder::make_eval_context(ds);
  if (ctx.y_av == ctx.y_opt)
    throw herder::Error("optimality undefined on '" + data +
                        "' (y_av equals y_opt)");
  const herder::RunRecord record =
      herder::execute_run(ds, ctx, data, method, budget, seed);
  std::cout << herder::to_json_line(record) << "\n";
  return 0;
}

int cmd_bench(herder::BenchPlan plan, const std::string& manifest,
              const std::string& out_path) {
  if (!manifest.empty())
    for (const auto& p : herder::read_manifest(manifest))
      plan.datasets.push_back(p);
  if (plan.datasets.empty())
    throw herder::Error("no datasets given (use --data and/or --manifest)");
  for (const auto& m : plan.methods) require_known_method(m);

  const std::vector<herder::RunRecord> records = herder::run_bench_plan(plan);

  std::ofstream out(out_path);
  if (!out) throw herder::Error("cannot write '" + out_path + "'");
  herder::write_jsonl(records, out);
  if (!out.good()) throw herder::Error("failed writing '" + out_path + "'");
  std::cerr << "wrote " << records.size() << " records to " << out_path
            << "\n";
  return 0;
}

int cmd_rank(const std::string& records_path, const std::string& csv_path) {
  const std::vector<herder::RunRecord> records =
      herder::read_jsonl(records_path);
  if (records.empty())
    throw herder::Error("'" + records_path + "' holds no records");

  const herder::RankReport report = herder::rank_methods(records);
  for (const std::string& w : report.warnings)
    std::cerr << "warning: " << w << "\n";

  std::set<std::size_t> budgets;
  std::set<std::string> methods;
  std::map<std::pair<std::size_t, std::string>, const herder::RankEntry*> cell;
  for (const herder::RankEntry& e : report.entries) {
    budgets.insert(e.budget);
    methods.insert(e.method);
    cell[{e.budget, e.method}] = &e;
  }

  std::cout << "win fraction (share of datasets where the method ties the "
               "best)\n\n";
  std::cout << "method    ";
  for (const std::size_t b : budgets) std::printf(" %8zu", b);
  std::cout << "\n";
  for (const std::string& m : methods) {
    std::printf("%-10s", m.c_str());
    for (const std::size_t b : budgets) {
      const herder::RankEntry* e = cell.at({b, m});
      if (e->total == 0)
        std::printf(" %8s", "-");
      else
        std::printf(" %8.3f", static_cast<double>(e->wins) /
                                  static_cast<double>(e->total));
    }
    std::cout << "\n";
  }

  const std::vector<herder::MeanEntry> means =
      herder::mean_optimality(records);
  std::map<std::pair<std::size_t, std::string>, double> mean_cell;
  for (const herder::MeanEntry& e : means)
    mean_cell[{e.budget, e.method}] = e.mean;

  std::cout << "\nmean optimality by budget\n\n";
  std::cout << "budget    ";
  for (const std::string& m : methods) std::printf(" %10s", m.c_str());
  std::cout << "\n";
  for (const std::size_t b : budgets) {
    std::printf("%-10zu", b);
    for (const std::string& m : methods) {
      const auto it = mean_cell.find({b, m});
      if (it == mean_cell.end())
        std::printf(" %10s", "-");
      else
        std::printf(" %10.3f", it->second);
    }
    std::cout << "\n";
  }

  // CSV block: to a file when requested, stdout otherwise.
  std::ostringstream csv;
  csv << "method,budget,win_fraction\n";
  for (const herder::RankEntry& e : report.entries) {
    if (e.total == 0) continue;
    csv << e.method << ',' << e.budget << ','
        << herder::format_double(static_cast<double>(e.wins) /
                                 static_cast<double>(e.total))
        << '\n';
  }
  if (csv_path.empty()) {
    std::cout << "\n" << csv.str();
  } else {
    std::ofstream out(csv_path);
    if (!out) throw herder::Error("cannot write '" + csv_path + "'");
    out << csv.str();
    if (!out.good()) throw herder::Error("failed writing '" + csv_path + "'");
  }
  return 0;
}

int cmd_synth(const herder::SynthSpec& spec, const std::string& prefix) {
  const herder::SynthResult result = herder::gen_sparse(spec);
  herder::write_synth_files(spec, result, prefix);
  std::cout << "planted optimum id: " << result.planted_optimum << "\n";
  std::cout << "wrote " << prefix << ".csv and " << prefix << ".json\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pool-based multi-objective optimization harness"};
  app.require_subcommand(1);

  // run
  auto* run = app.add_subcommand("run", "one optimizer run");
  std::string run_data;
  std::string run_method = "ezr";
  std::size_t run_budget = 32;
  std::uint64_t run_seed = 1;
  run->add_option("--data", run_data, "dataset CSV")->required();
  run->add_option("--method", run_method, "ezr, kpp, or random");
  run->add_option("--budget", run_budget, "label budget");
  run->add_option("--seed", run_seed, "random seed");

  // bench
  auto* bench = app.add_subcommand("bench", "benchmark sweep to JSONL");
  herder::BenchPlan plan;
  plan.methods = herder::known_methods();
  std::string bench_manifest;
  std::string bench_out = "results.jsonl";
  bench->add_option("--data", plan.datasets, "dataset CSV (repeatable)");
  bench->add_option("--manifest", bench_manifest,
                    "file listing dataset paths, one per line");
  bench->add_option("--methods", plan.methods, "methods to run")
      ->delimiter(',');
  bench->add_option("--budgets", plan.budgets, "label budgets")
      ->delimiter(',');
  bench->add_option("--repeats", plan.repeats, "runs per cell");
  bench->add_option("--seed", plan.base_seed,
                    "base seed; repeat r uses base+r");
  bench->add_option("--threads", plan.threads,
                    "worker threads (0: hardware)");
  bench->add_option("--out", bench_out, "output JSONL path");

  // rank
  auto* rank = app.add_subcommand("rank", "summarize a JSONL results file");
  std::string rank_records;
  std::string rank_csv;
  rank->add_option("--records", rank_records, "JSONL file from bench")
      ->required();
  rank->add_option("--csv", rank_csv,
                   "write the method,budget,win_fraction table here");

  // synth
  auto* synth = app.add_subcommand("synth", "generate a benchmark dataset");
  herder::SynthSpec spec;
  std::string synth_out = "synth";
  synth->add_option("--rows", spec.n_rows, "rows in the pool");
  synth->add_option("--attrs", spec.n_attrs, "decision columns");
  synth->add_option("--keys", spec.n_keys, "influential decision columns");
  synth->add_option("--objectives", spec.n_objectives, "objective columns");
  synth->add_option("--noise", spec.noise, "objective noise stddev");
  synth->add_option("--seed", spec.seed, "generator seed");
  synth->add_option("--out", synth_out, "output prefix (.csv/.json)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) return cmd_run(run_data, run_method, run_budget,
                                      run_seed);
    if (bench->parsed()) return cmd_bench(std::move(plan), bench_manifest,
                                          bench_out);
    if (rank->parsed()) return cmd_rank(rank_records, rank_csv);
    if (synth->parsed()) return cmd_synth(spec, synth_out);
  } catch (const herder::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kErrorExit;
  }
  return 0;
}
