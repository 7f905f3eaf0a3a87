// Command line front end: localize (single run + compression scheme),
// sweep (strategy comparison / margin sweep CSVs), active (query curves),
// verify (partition theorem sweep).

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "cutplane/compression.hpp"
#include "cutplane/errors.hpp"
#include "cutplane/experiments.hpp"
#include "cutplane/numfmt.hpp"

namespace {

using namespace cutplane;

// Flags shared by every experiment subcommand. Values arriving on the
// command line override values from --config; seed must come from one of
// the two.
struct SpecCli {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> runs;
  std::optional<long long> jobs;
  std::optional<std::size_t> n_points;
  std::optional<double> side;
  std::optional<double> gamma;
  std::optional<std::string> strategies;
  std::optional<std::string> gamma_grid;
  std::optional<std::size_t> pool_size;
  std::optional<double> pool_gamma;
  std::optional<std::size_t> budget;
  std::optional<std::size_t> center_samples;
  std::optional<std::size_t> volume_samples;
  std::optional<std::size_t> test_points;
  std::optional<std::string> scorer;
  std::optional<std::string> pool_paths;
  std::optional<std::string> pool_format;
  std::optional<std::string> dims;
  std::optional<std::string> lambdas;
  std::optional<std::size_t> bodies_per_dim;
  std::optional<std::size_t> partition_samples;
  std::string out_path;
};

void add_common_options(CLI::App* cmd, SpecCli& cli) {
  cmd->add_option("--config", cli.config_path,
                  "key=value file; command line flags win on conflict")
      ->check(CLI::ExistingFile);
  cmd->add_option("--seed", cli.seed, "root RNG seed (required here or in --config)");
  cmd->add_option("--jobs", cli.jobs, "worker threads (never changes output bytes)");
  cmd->add_option("--out", cli.out_path, "output CSV path")->required();
}

ExperimentSpec build_spec(const SpecCli& cli, ExperimentKind kind) {
  ExperimentSpec spec;
  bool seed_set = false;
  if (!cli.config_path.empty()) {
    ConfigMap config = parse_config_file(cli.config_path);
    if (auto it = config.find("experiment"); it != config.end()) {
      if (parse_experiment(it->second) != kind)
        throw ParseError("config experiment '" + it->second +
                         "' does not match this subcommand");
    }
    config["experiment"] = experiment_name(kind);
    seed_set = config.count("seed") > 0;
    spec = spec_from_config(config);
  }
  spec.kind = kind;
  if (cli.seed) { spec.seed = *cli.seed; seed_set = true; }
  if (!seed_set) throw ParseError("no seed given (use --seed or a config file)");
  if (cli.runs) spec.runs = *cli.runs;
  if (cli.jobs) spec.jobs = *cli.jobs;
  if (cli.n_points) spec.n_points = *cli.n_points;
  if (cli.side) spec.side = *cli.side;
  if (cli.gamma) spec.gamma = *cli.gamma;
  if (cli.strategies) {
    spec.strategies.clear();
    for (const auto& name : parse_string_list(*cli.strategies))
      spec.strategies.push_back(parse_strategy(name));
  }
  if (cli.gamma_grid) spec.gamma_grid = parse_double_list(*cli.gamma_grid);
  if (cli.pool_size) spec.pool_size = *cli.pool_size;
  if (cli.pool_gamma) spec.pool_gamma = *cli.pool_gamma;
  if (cli.budget) spec.budget = *cli.budget;
  if (cli.center_samples) spec.center_samples = *cli.center_samples;
  if (cli.volume_samples) spec.volume_samples = *cli.volume_samples;
  if (cli.test_points) spec.test_points = *cli.test_points;
  if (cli.scorer) spec.scorer = parse_scorer(*cli.scorer);
  if (cli.pool_paths) spec.pool_paths = parse_string_list(*cli.pool_paths);
  if (cli.pool_format) {
    if (*cli.pool_format != "dense" && *cli.pool_format != "sparse")
      throw ParseError("pool_format must be dense or sparse");
    spec.pool_format = *cli.pool_format;
  }
  if (cli.dims) spec.dims = parse_int_list(*cli.dims);
  if (cli.lambdas) spec.lambdas = parse_double_list(*cli.lambdas);
  if (cli.bodies_per_dim) spec.bodies_per_dim = *cli.bodies_per_dim;
  if (cli.partition_samples) spec.partition_samples = *cli.partition_samples;
  return spec;
}

void run_spec(const ExperimentSpec& spec, const std::string& out_path) {
  run_experiment_to_file(spec, out_path);
  std::printf("%s: wrote %s (config %s)\n",
              experiment_name(spec.kind).c_str(), out_path.c_str(),
              spec_hash(spec).c_str());
}

std::string vec_to_string(const Vec& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += format_double(v[i]);
  }
  return out + ")";
}

struct LocalizeCli {
  std::string data_path;
  std::string format = "dense";
  std::size_t sparse_dim = 0;
  std::size_t n_points = 1000;
  double side = 20.0;
  double gamma = 0.1;
  std::uint64_t seed = 0;
  std::string strategy = "LargestError";
  std::uint64_t budget = default_update_budget();
  std::string scheme_out;
  bool replay_check = false;
};

int run_localize(const LocalizeCli& cli) {
  Dataset dataset;
  if (!cli.data_path.empty()) {
    dataset = cli.format == "sparse"
                  ? load_sparse_file(cli.data_path, cli.sparse_dim)
                  : load_dense_csv_file(cli.data_path);
  } else {
    SyntheticConfig gen;
    gen.n_points = cli.n_points;
    gen.side = cli.side;
    gen.margin_gamma = cli.gamma;
    gen.seed = cli.seed;
    dataset = generate_synthetic(gen).dataset;
  }
  OracleStrategy strategy{parse_strategy(cli.strategy),
                          substream_seed(cli.seed, 1)};
  LocalizationTrace trace = localize(dataset, strategy, cli.budget);

  std::size_t errors = 0;
  for (const auto& p : dataset.points)
    if (p.y * dot(trace.w_final, p.x) < 0.0) ++errors;
  std::printf("points:    %zu (dim %zu)\n", dataset.size(), dataset.dim);
  std::printf("strategy:  %s\n", strategy_name(strategy.kind).c_str());
  std::printf("planes:    %zu\n", trace.plane_indices.size());
  std::printf("updates:   %llu\n",
              static_cast<unsigned long long>(trace.total_updates));
  std::printf("w:         %s\n", vec_to_string(trace.w_final).c_str());
  std::printf("errors:    %zu\n", errors);
  if (trace.plane_indices.size() < dataset.size())
    std::printf("bound:     %s\n",
                format_double(generalization_report(
                                  dataset.size(), trace.plane_indices.size(),
                                  errors))
                    .c_str());

  CompressionScheme scheme = extract_scheme(trace, strategy);
  if (!cli.scheme_out.empty()) {
    save_scheme(scheme, cli.scheme_out);
    std::printf("scheme:    %s (%zu indices)\n", cli.scheme_out.c_str(),
                scheme.indices.size());
  }
  if (cli.replay_check) {
    Vec replayed = replay(dataset, scheme);
    bool exact = replayed == trace.w_final;
    std::printf("replay:    %s\n", exact ? "exact" : "MISMATCH");
    if (!exact) {
      std::printf("replayed:  %s\n", vec_to_string(replayed).c_str());
      return 1;
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Version space localization by cutting planes"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "cutplane 0.1.0");

  LocalizeCli loc;
  CLI::App* localize_cmd = app.add_subcommand(
      "localize", "Localize one dataset and extract its compression scheme");
  localize_cmd->add_option("--data", loc.data_path, "labeled dataset path")
      ->check(CLI::ExistingFile);
  localize_cmd->add_option("--format", loc.format, "dense | sparse")
      ->check(CLI::IsMember({"dense", "sparse"}));
  localize_cmd->add_option("--dim", loc.sparse_dim,
                           "dimension override for sparse files");
  localize_cmd->add_option("--points", loc.n_points,
                           "synthetic points (no --data)");
  localize_cmd->add_option("--side", loc.side, "synthetic square side");
  localize_cmd->add_option("--gamma", loc.gamma, "synthetic margin");
  localize_cmd->add_option("--seed", loc.seed, "RNG seed")->required();
  localize_cmd->add_option("--strategy", loc.strategy,
                           "LargestError | SmallestError | RandomError");
  localize_cmd->add_option("--budget", loc.budget, "Perceptron update cap");
  localize_cmd->add_option("--scheme-out", loc.scheme_out,
                           "write the compression scheme here");
  localize_cmd->add_flag("--replay-check", loc.replay_check,
                         "re-run on the compression set and compare");

  SpecCli sweep_cli;
  std::string sweep_kind = "strategies";
  CLI::App* sweep_cmd = app.add_subcommand(
      "sweep", "Strategy comparison or margin sweep over synthetic runs");
  sweep_cmd->add_option("--experiment", sweep_kind, "strategies | margins")
      ->check(CLI::IsMember({"strategies", "margins"}));
  add_common_options(sweep_cmd, sweep_cli);
  sweep_cmd->add_option("--runs", sweep_cli.runs, "runs per configuration");
  sweep_cmd->add_option("--n_points", sweep_cli.n_points, "points per dataset");
  sweep_cmd->add_option("--side", sweep_cli.side, "square side");
  sweep_cmd->add_option("--gamma", sweep_cli.gamma,
                        "margin (strategy comparison)");
  sweep_cmd->add_option("--strategies", sweep_cli.strategies,
                        "comma separated strategy list");
  sweep_cmd->add_option("--gamma_grid", sweep_cli.gamma_grid,
                        "comma separated margins (margin sweep)");

  SpecCli active_cli;
  CLI::App* active_cmd = app.add_subcommand(
      "active", "Active learning query curves over pools");
  add_common_options(active_cmd, active_cli);
  active_cmd->add_option("--runs", active_cli.runs, "pools to run");
  active_cmd->add_option("--pool_size", active_cli.pool_size,
                         "synthetic pool size");
  active_cmd->add_option("--pool_gamma", active_cli.pool_gamma,
                         "synthetic pool margin");
  active_cmd->add_option("--side", active_cli.side, "synthetic square side");
  active_cmd->add_option("--budget", active_cli.budget, "label budget");
  active_cmd->add_option("--center_samples", active_cli.center_samples,
                         "hit-and-run samples per centroid");
  active_cmd->add_option("--volume_samples", active_cli.volume_samples,
                         "per-round volume samples (0 disables)");
  active_cmd->add_option("--test_points", active_cli.test_points,
                         "held out test points (synthetic pools)");
  active_cmd->add_option("--scorer", active_cli.scorer,
                         "AbsNormalized | SignedRaw | UniformRandom");
  active_cmd->add_option("--pool", active_cli.pool_paths,
                         "comma separated pool files (else synthetic)");
  active_cmd->add_option("--pool_format", active_cli.pool_format,
                         "dense | sparse");

  SpecCli verify_cli;
  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "Partition ratio checks on random spherical polytopes");
  add_common_options(verify_cmd, verify_cli);
  verify_cmd->add_option("--dims", verify_cli.dims, "comma separated dimensions");
  verify_cmd->add_option("--lambdas", verify_cli.lambdas,
                         "comma separated lambda values");
  verify_cmd->add_option("--bodies_per_dim", verify_cli.bodies_per_dim,
                         "random bodies per dimension");
  verify_cmd->add_option("--partition_samples", verify_cli.partition_samples,
                         "Monte Carlo samples per body");

  CLI11_PARSE(app, argc, argv);
  try {
    if (localize_cmd->parsed()) return run_localize(loc);
    if (sweep_cmd->parsed()) {
      run_spec(build_spec(sweep_cli, parse_experiment(sweep_kind)),
               sweep_cli.out_path);
      return 0;
    }
    if (active_cmd->parsed()) {
      run_spec(build_spec(active_cli, ExperimentKind::ActiveCurves),
               active_cli.out_path);
      return 0;
    }
    if (verify_cmd->parsed()) {
      run_spec(build_spec(verify_cli, ExperimentKind::TheoremSweep),
               verify_cli.out_path);
      return 0;
    }
  } catch (const std::exception& err) {
    std::fprintf(stderr, "error: %s\n", err.what());
    return 1;
  }
  return 0;
}
