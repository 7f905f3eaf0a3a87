#include <fstream>
#include <sstream>

#include "cutplane/errors.hpp"
#include "cutplane/experiments.hpp"
#include "doctest.h"

using namespace cutplane;

namespace {

ExperimentSpec small_spec(ExperimentKind kind) {
  ExperimentSpec spec;
  spec.kind = kind;
  spec.seed = 404;
  spec.runs = 2;
  spec.n_points = 150;
  spec.gamma_grid = {0.1, 0.3};
  spec.pool_size = 50;
  spec.budget = 4;
  spec.center_samples = 200;
  spec.test_points = 200;
  spec.dims = {2};
  spec.lambdas = {0.0, 0.2};
  spec.bodies_per_dim = 2;
  spec.partition_samples = 20000;
  return spec;
}

std::string run_to_string(const ExperimentSpec& spec) {
  std::ostringstream out;
  run_experiment(spec, out);
  return out.str();
}

std::size_t count_prefix(const std::string& text, const std::string& prefix) {
  std::istringstream in(text);
  std::string line;
  std::size_t count = 0;
  while (std::getline(in, line))
    if (line.rfind(prefix, 0) == 0) ++count;
  return count;
}

}  // namespace

TEST_CASE("experiment names round-trip") {
  for (ExperimentKind kind :
       {ExperimentKind::StrategyComparison, ExperimentKind::MarginSweep,
        ExperimentKind::ActiveCurves, ExperimentKind::TheoremSweep})
    CHECK(parse_experiment(experiment_name(kind)) == kind);
  CHECK_THROWS_AS(parse_experiment("bogus"), ParseError);
}

TEST_CASE("spec serializes to a config map and back") {
  ExperimentSpec spec = small_spec(ExperimentKind::ActiveCurves);
  spec.pool_paths = {"/a.csv", "/b.csv"};
  spec.scorer = QueryScorer::SignedRaw;
  ConfigMap config = spec_to_config(spec);
  CHECK(config.at("experiment") == "active");
  CHECK(config.at("seed") == "404");
  CHECK(config.at("strategies") ==
        "LargestError,SmallestError,RandomError");
  CHECK(config.at("pool_paths") == "/a.csv,/b.csv");
  CHECK(config.at("scorer") == "SignedRaw");

  ExperimentSpec back = spec_from_config(config);
  CHECK(spec_to_config(back) == config);
  CHECK(back.kind == spec.kind);
  CHECK(back.pool_paths == spec.pool_paths);
  CHECK(back.lambdas == spec.lambdas);
}

TEST_CASE("unknown config keys are rejected") {
  ConfigMap config = {{"experiment", "strategies"}, {"sed", "1"}};
  CHECK_THROWS_AS(spec_from_config(config), ParseError);
  ConfigMap jobs_ok = {{"experiment", "strategies"}, {"jobs", "4"}};
  CHECK(spec_from_config(jobs_ok).jobs == 4);
}

TEST_CASE("concurrency is excluded from the spec hash") {
  ExperimentSpec a = small_spec(ExperimentKind::StrategyComparison);
  ExperimentSpec b = a;
  b.jobs = 16;
  CHECK(spec_hash(a) == spec_hash(b));
  b.seed = 405;
  CHECK(spec_hash(a) != spec_hash(b));
}

TEST_CASE("every runner is deterministic and jobs-invariant") {
  for (ExperimentKind kind :
       {ExperimentKind::StrategyComparison, ExperimentKind::MarginSweep,
        ExperimentKind::ActiveCurves, ExperimentKind::TheoremSweep}) {
    ExperimentSpec spec = small_spec(kind);
    std::string once = run_to_string(spec);
    CHECK(once == run_to_string(spec));
    ExperimentSpec parallel = spec;
    parallel.jobs = 5;
    CHECK(once == run_to_string(parallel));
  }
}

TEST_CASE("strategy comparison emits run and distribution rows") {
  ExperimentSpec spec = small_spec(ExperimentKind::StrategyComparison);
  std::string csv = run_to_string(spec);
  CHECK(csv.rfind("row_kind,seed,config_hash,strategy,gamma,run,n_points,"
                  "n_planes,total_updates,updates_per_round,indicative_bound,"
                  "value\n",
                  0) == 0);
  CHECK(count_prefix(csv, "run,") == 3 * spec.runs);
  CHECK(count_prefix(csv, "dist,") >= 3);  // at least one plane per strategy
}

TEST_CASE("margin sweep emits per-run, baseline and mean rows") {
  ExperimentSpec spec = small_spec(ExperimentKind::MarginSweep);
  std::string csv = run_to_string(spec);
  CHECK(csv.rfind("row_kind,seed,config_hash,algorithm,gamma,run,", 0) == 0);
  // 3 strategies + the Perceptron baseline, per gamma per run.
  CHECK(count_prefix(csv, "run,") == 4 * spec.runs * spec.gamma_grid.size());
  CHECK(count_prefix(csv, "mean,") == 4 * spec.gamma_grid.size());
  CHECK(csv.find("Perceptron") != std::string::npos);
}

TEST_CASE("active curves pair methods over shared pools") {
  ExperimentSpec spec = small_spec(ExperimentKind::ActiveCurves);
  std::string csv = run_to_string(spec);
  CHECK(csv.rfind("row_kind,seed,config_hash,method,scorer,run,round,", 0) ==
        0);
  CHECK(count_prefix(csv, "round,") == 3 * spec.runs * spec.budget);
  CHECK(count_prefix(csv, "mean,") == 3 * spec.budget);
  CHECK(csv.find("ActiveBPM") != std::string::npos);
  CHECK(csv.find("ActiveSVM") != std::string::npos);
  CHECK(csv.find("RandomQuery") != std::string::npos);
  CHECK(count_prefix(csv, "warning,") == 0);
}

TEST_CASE("active curves read pools from files and degrade on misses") {
  std::string pool_path = "/tmp/cutplane-test-pool.csv";
  {
    // Antipodal pairs around the origin, separable by w = (1, 0).
    std::ofstream out(pool_path);
    for (int i = 1; i <= 10; ++i) {
      out << i << "," << (i % 3 + 1) << ",1\n";
      out << -i << "," << -(i % 3 + 1) << ",-1\n";
    }
  }
  ExperimentSpec spec = small_spec(ExperimentKind::ActiveCurves);
  spec.runs = 2;
  spec.budget = 3;
  spec.pool_paths = {pool_path, "/nonexistent/pool.csv"};
  std::string csv = run_to_string(spec);
  // Run 1 hits the missing file, warns once, and falls back to synthetic.
  CHECK(count_prefix(csv, "warning,") == 1);
  CHECK(csv.find("/nonexistent/pool.csv") != std::string::npos);
  CHECK(count_prefix(csv, "round,") == 3 * spec.runs * spec.budget);
  CHECK(run_to_string(spec) == csv);
}

TEST_CASE("theorem sweep emits one row per body and lambda") {
  ExperimentSpec spec = small_spec(ExperimentKind::TheoremSweep);
  std::string csv = run_to_string(spec);
  CHECK(csv.rfind("row_kind,seed,config_hash,body,dim,lambda,ratio,bound,"
                  "stderr,satisfied,ratio_minus,offset,precondition_ok,"
                  "volume,volume_stderr\n",
                  0) == 0);
  CHECK(count_prefix(csv, "report,") ==
        spec.dims.size() * spec.bodies_per_dim * spec.lambdas.size());
  CHECK(csv.find("d2-b0") != std::string::npos);
  CHECK(csv.find("d2-b1") != std::string::npos);
}

TEST_CASE("run_experiment_to_file writes the same bytes") {
  ExperimentSpec spec = small_spec(ExperimentKind::StrategyComparison);
  std::string path = "/tmp/cutplane-test-experiment.csv";
  run_experiment_to_file(spec, path);
  std::ifstream in(path, std::ios::binary);
  std::stringstream buffer;
  buffer << in.rdbuf();
  CHECK(buffer.str() == run_to_string(spec));
  CHECK_THROWS_AS(run_experiment_to_file(spec, "/nonexistent/dir/out.csv"),
                  DatasetUnavailable);
}
