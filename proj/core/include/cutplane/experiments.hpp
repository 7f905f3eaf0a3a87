#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "cutplane/active.hpp"
#include "cutplane/config.hpp"
#include "cutplane/perceptron.hpp"
#include "cutplane/synthetic.hpp"

namespace cutplane {

enum class ExperimentKind {
  StrategyComparison,
  MarginSweep,
  ActiveCurves,
  TheoremSweep
};

std::string experiment_name(ExperimentKind kind);
ExperimentKind parse_experiment(const std::string& name);

// Full experiment description. Every field is a flat config key with the
// same name (lists comma-separated); see docs/formats.md for the key table.
// The canonical serialization of the effective spec is hashed into every
// output row, so a CSV is always traceable to the spec that made it.
struct ExperimentSpec {
  ExperimentKind kind = ExperimentKind::StrategyComparison;
  std::uint64_t seed = 0;
  std::size_t runs = 100;
  long long jobs = 1;

  // Synthetic data generation (localization experiments).
  std::size_t n_points = 1000;
  double side = 20.0;
  double gamma = 0.1;

  std::vector<StrategyKind> strategies = {StrategyKind::LargestError,
                                          StrategyKind::SmallestError,
                                          StrategyKind::RandomError};
  std::vector<double> gamma_grid = {0.01, 0.02, 0.05, 0.1, 0.2, 0.3};

  // Active-learning curves.
  std::size_t pool_size = 400;
  double pool_gamma = 0.3;
  std::size_t budget = 60;
  std::size_t center_samples = 2000;
  std::size_t volume_samples = 0;
  std::size_t test_points = 2000;
  QueryScorer scorer = QueryScorer::AbsNormalized;
  std::vector<std::string> pool_paths;  // empty: synthetic pools
  std::string pool_format = "dense";    // dense | sparse

  // Theorem sweep.
  std::vector<long long> dims = {2, 3, 4};
  std::vector<double> lambdas = {0.0, 0.1, 0.2, 0.5};
  std::size_t bodies_per_dim = 20;
  std::size_t partition_samples = 100000;
};

ConfigMap spec_to_config(const ExperimentSpec& spec);
ExperimentSpec spec_from_config(const ConfigMap& config);
std::string spec_hash(const ExperimentSpec& spec);

// Each runner writes one CSV (header row first) to `out`. Identical spec and
// seed give byte-identical output; `jobs` only changes wall time, never
// bytes. Row order is fixed by run index regardless of completion order.
void run_strategy_comparison(const ExperimentSpec& spec, std::ostream& out);
void run_margin_sweep(const ExperimentSpec& spec, std::ostream& out);
void run_active_curves(const ExperimentSpec& spec, std::ostream& out);
void run_theorem_sweep(const ExperimentSpec& spec, std::ostream& out);

void run_experiment(const ExperimentSpec& spec, std::ostream& out);
void run_experiment_to_file(const ExperimentSpec& spec,
                            const std::string& path);

}  // namespace cutplane
