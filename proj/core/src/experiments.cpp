#include "cutplane/experiments.hpp"

#include <atomic>
#include <exception>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "cutplane/compression.hpp"
#include "cutplane/csv.hpp"
#include "cutplane/errors.hpp"
#include "cutplane/geometry.hpp"
#include "cutplane/numfmt.hpp"
#include "cutplane/rng.hpp"

namespace cutplane {

std::string experiment_name(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::StrategyComparison: return "strategies";
    case ExperimentKind::MarginSweep: return "margins";
    case ExperimentKind::ActiveCurves: return "active";
    case ExperimentKind::TheoremSweep: return "theorem";
  }
  return "strategies";
}

ExperimentKind parse_experiment(const std::string& name) {
  if (name == "strategies") return ExperimentKind::StrategyComparison;
  if (name == "margins") return ExperimentKind::MarginSweep;
  if (name == "active") return ExperimentKind::ActiveCurves;
  if (name == "theorem") return ExperimentKind::TheoremSweep;
  throw ParseError("unknown experiment '" + name + "'");
}

namespace {

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ',';
    out += parts[i];
  }
  return out;
}

template <typename T, typename F>
std::string join_mapped(const std::vector<T>& items, F&& f) {
  std::vector<std::string> parts;
  parts.reserve(items.size());
  for (const auto& item : items) parts.push_back(f(item));
  return join(parts);
}

// Runs fn(0..n-1) on up to `jobs` threads. Results must be written into
// per-index slots; the first exception is rethrown on the calling thread.
void parallel_tasks(std::size_t n, long long jobs,
                    const std::function<void(std::size_t)>& fn) {
  if (jobs <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= n || failed.load()) return;
      try {
        fn(i);
      } catch (...) {
        std::scoped_lock lock(error_mutex);
        if (!error) error = std::current_exception();
        failed.store(true);
        return;
      }
    }
  };
  std::size_t n_threads =
      std::min<std::size_t>(static_cast<std::size_t>(jobs), n);
  std::vector<std::thread> threads;
  threads.reserve(n_threads);
  for (std::size_t t = 0; t < n_threads; ++t) threads.emplace_back(worker);
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);
}

std::size_t count_errors(const Vec& w, const Dataset& dataset) {
  std::size_t errors = 0;
  for (const auto& p : dataset.points)
    if (p.y * dot(w, p.x) < 0.0) ++errors;
  return errors;
}

std::string indicative_bound_field(std::size_t n, std::size_t planes,
                                   std::size_t errors) {
  if (planes >= n) return "";
  return format_double(generalization_report(n, planes, errors));
}

}  // namespace

ConfigMap spec_to_config(const ExperimentSpec& spec) {
  ConfigMap out;
  out["experiment"] = experiment_name(spec.kind);
  out["seed"] = std::to_string(spec.seed);
  out["runs"] = std::to_string(spec.runs);
  out["n_points"] = std::to_string(spec.n_points);
  out["side"] = format_double(spec.side);
  out["gamma"] = format_double(spec.gamma);
  out["strategies"] = join_mapped(
      spec.strategies, [](StrategyKind k) { return strategy_name(k); });
  out["gamma_grid"] =
      join_mapped(spec.gamma_grid, [](double g) { return format_double(g); });
  out["pool_size"] = std::to_string(spec.pool_size);
  out["pool_gamma"] = format_double(spec.pool_gamma);
  out["budget"] = std::to_string(spec.budget);
  out["center_samples"] = std::to_string(spec.center_samples);
  out["volume_samples"] = std::to_string(spec.volume_samples);
  out["test_points"] = std::to_string(spec.test_points);
  out["scorer"] = scorer_name(spec.scorer);
  out["pool_paths"] = join(spec.pool_paths);
  out["pool_format"] = spec.pool_format;
  out["dims"] = join_mapped(spec.dims,
                            [](long long d) { return std::to_string(d); });
  out["lambdas"] =
      join_mapped(spec.lambdas, [](double l) { return format_double(l); });
  out["bodies_per_dim"] = std::to_string(spec.bodies_per_dim);
  out["partition_samples"] = std::to_string(spec.partition_samples);
  // `jobs` is deliberately absent: concurrency must not change output bytes.
  return out;
}

ExperimentSpec spec_from_config(const ConfigMap& config) {
  ExperimentSpec spec;
  for (const auto& [key, value] : config) {
    if (key == "experiment") {
      spec.kind = parse_experiment(value);
    } else if (key == "seed") {
      spec.seed = std::stoull(value);
    } else if (key == "runs") {
      spec.runs = std::stoull(value);
    } else if (key == "jobs") {
      spec.jobs = std::stoll(value);
    } else if (key == "n_points") {
      spec.n_points = std::stoull(value);
    } else if (key == "side") {
      spec.side = parse_double_strict(value);
    } else if (key == "gamma") {
      spec.gamma = parse_double_strict(value);
    } else if (key == "strategies") {
      spec.strategies.clear();
      for (const auto& name : parse_string_list(value))
        spec.strategies.push_back(parse_strategy(name));
    } else if (key == "gamma_grid") {
      spec.gamma_grid = parse_double_list(value);
    } else if (key == "pool_size") {
      spec.pool_size = std::stoull(value);
    } else if (key == "pool_gamma") {
      spec.pool_gamma = parse_double_strict(value);
    } else if (key == "budget") {
      spec.budget = std::stoull(value);
    } else if (key == "center_samples") {
      spec.center_samples = std::stoull(value);
    } else if (key == "volume_samples") {
      spec.volume_samples = std::stoull(value);
    } else if (key == "test_points") {
      spec.test_points = std::stoull(value);
    } else if (key == "scorer") {
      spec.scorer = parse_scorer(value);
    } else if (key == "pool_paths") {
      spec.pool_paths = parse_string_list(value);
    } else if (key == "pool_format") {
      if (value != "dense" && value != "sparse")
        throw ParseError("pool_format must be dense or sparse");
      spec.pool_format = value;
    } else if (key == "dims") {
      spec.dims = parse_int_list(value);
    } else if (key == "lambdas") {
      spec.lambdas = parse_double_list(value);
    } else if (key == "bodies_per_dim") {
      spec.bodies_per_dim = std::stoull(value);
    } else if (key == "partition_samples") {
      spec.partition_samples = std::stoull(value);
    } else {
      throw ParseError("unknown config key '" + key + "'");
    }
  }
  return spec;
}

std::string spec_hash(const ExperimentSpec& spec) {
  return config_hash(spec_to_config(spec));
}

void run_strategy_comparison(const ExperimentSpec& spec, std::ostream& out) {
  const std::string hash = spec_hash(spec);
  write_csv_row(out, {"row_kind", "seed", "config_hash", "strategy", "gamma",
                      "run", "n_points", "n_planes", "total_updates",
                      "updates_per_round", "indicative_bound", "value"});

  struct RunResult {
    std::uint64_t seed = 0;
    std::size_t n_points = 0;
    std::size_t n_planes = 0;
    std::uint64_t total_updates = 0;
    std::string updates_per_round;
    std::string bound;
  };
  std::size_t n_strategies = spec.strategies.size();
  std::vector<RunResult> results(n_strategies * spec.runs);

  parallel_tasks(results.size(), spec.jobs, [&](std::size_t task) {
    std::size_t s = task / spec.runs;
    std::size_t r = task % spec.runs;
    std::uint64_t run_seed = substream_seed(spec.seed, r);
    SyntheticConfig gen;
    gen.n_points = spec.n_points;
    gen.side = spec.side;
    gen.margin_gamma = spec.gamma;
    gen.seed = run_seed;
    SyntheticData data = generate_synthetic(gen);
    OracleStrategy strategy{spec.strategies[s], substream_seed(run_seed, 1)};
    LocalizationTrace trace = localize(data.dataset, strategy);
    RunResult& res = results[task];
    res.seed = run_seed;
    res.n_points = data.dataset.size();
    res.n_planes = trace.plane_indices.size();
    res.total_updates = trace.total_updates;
    res.updates_per_round = join_mapped(
        trace.updates_per_round,
        [](std::uint64_t u) { return std::to_string(u); });
    res.bound =
        indicative_bound_field(data.dataset.size(), trace.plane_indices.size(),
                               count_errors(trace.w_final, data.dataset));
  });

  for (std::size_t s = 0; s < n_strategies; ++s) {
    for (std::size_t r = 0; r < spec.runs; ++r) {
      const RunResult& res = results[s * spec.runs + r];
      write_csv_row(out, {"run", std::to_string(res.seed), hash,
                          strategy_name(spec.strategies[s]),
                          format_double(spec.gamma), std::to_string(r),
                          std::to_string(res.n_points),
                          std::to_string(res.n_planes),
                          std::to_string(res.total_updates),
                          res.updates_per_round, res.bound, ""});
    }
  }
  // Empirical tail distribution of plane counts per strategy.
  for (std::size_t s = 0; s < n_strategies; ++s) {
    std::size_t max_planes = 0;
    for (std::size_t r = 0; r < spec.runs; ++r)
      max_planes = std::max(max_planes, results[s * spec.runs + r].n_planes);
    for (std::size_t i = 1; i <= max_planes; ++i) {
      std::size_t count = 0;
      for (std::size_t r = 0; r < spec.runs; ++r)
        if (results[s * spec.runs + r].n_planes >= i) ++count;
      double p = static_cast<double>(count) / static_cast<double>(spec.runs);
      write_csv_row(out, {"dist", std::to_string(spec.seed), hash,
                          strategy_name(spec.strategies[s]),
                          format_double(spec.gamma), "", "",
                          std::to_string(i), "", "", "", format_double(p)});
    }
  }
}

void run_margin_sweep(const ExperimentSpec& spec, std::ostream& out) {
  const std::string hash = spec_hash(spec);
  write_csv_row(out, {"row_kind", "seed", "config_hash", "algorithm", "gamma",
                      "run", "margin_exact", "n_planes", "total_updates",
                      "indicative_bound"});

  struct AlgoResult {
    std::string n_planes;  // empty for the plain Perceptron baseline
    std::uint64_t total_updates = 0;
    std::string bound;
  };
  struct RunResult {
    std::uint64_t seed = 0;
    double margin_exact = 0.0;
    std::vector<AlgoResult> algos;
  };
  std::size_t n_gammas = spec.gamma_grid.size();
  std::vector<RunResult> results(n_gammas * spec.runs);

  parallel_tasks(results.size(), spec.jobs, [&](std::size_t task) {
    std::size_t gi = task / spec.runs;
    std::size_t r = task % spec.runs;
    std::uint64_t run_seed = substream_seed(substream_seed(spec.seed, gi), r);
    SyntheticConfig gen;
    gen.n_points = spec.n_points;
    gen.side = spec.side;
    gen.margin_gamma = spec.gamma_grid[gi];
    gen.seed = run_seed;
    SyntheticData data = generate_synthetic(gen);
    RunResult& res = results[task];
    res.seed = run_seed;
    res.margin_exact = min_margin(data.w_star, data.dataset).value;
    for (StrategyKind kind : spec.strategies) {
      OracleStrategy strategy{kind, substream_seed(run_seed, 1)};
      LocalizationTrace trace = localize(data.dataset, strategy);
      AlgoResult algo;
      algo.n_planes = std::to_string(trace.plane_indices.size());
      algo.total_updates = trace.total_updates;
      algo.bound = indicative_bound_field(
          data.dataset.size(), trace.plane_indices.size(),
          count_errors(trace.w_final, data.dataset));
      res.algos.push_back(std::move(algo));
    }
    // Plain Perceptron over the full dataset as the reference baseline,
    // on unit-normalized points so update counts compare like for like.
    std::vector<Vec> constraints;
    constraints.reserve(data.dataset.size());
    for (const auto& p : data.dataset.points)
      constraints.push_back(normalized(signed_point(p)));
    PassResult pass = perceptron_pass(Vec(data.dataset.dim, 0.0), constraints);
    res.algos.push_back({"", pass.updates, ""});
  });

  std::vector<std::string> algo_names;
  for (StrategyKind kind : spec.strategies)
    algo_names.push_back(strategy_name(kind));
  algo_names.push_back("Perceptron");

  for (std::size_t gi = 0; gi < n_gammas; ++gi) {
    for (std::size_t r = 0; r < spec.runs; ++r) {
      const RunResult& res = results[gi * spec.runs + r];
      for (std::size_t a = 0; a < algo_names.size(); ++a) {
        const AlgoResult& algo = res.algos[a];
        write_csv_row(out, {"run", std::to_string(res.seed), hash,
                            algo_names[a], format_double(spec.gamma_grid[gi]),
                            std::to_string(r), format_double(res.margin_exact),
                            algo.n_planes, std::to_string(algo.total_updates),
                            algo.bound});
      }
    }
    for (std::size_t a = 0; a < algo_names.size(); ++a) {
      double mean_updates = 0.0, mean_planes = 0.0;
      bool has_planes = !results[gi * spec.runs].algos[a].n_planes.empty();
      for (std::size_t r = 0; r < spec.runs; ++r) {
        const AlgoResult& algo = results[gi * spec.runs + r].algos[a];
        mean_updates += static_cast<double>(algo.total_updates);
        if (has_planes) mean_planes += parse_double_strict(algo.n_planes);
      }
      mean_updates /= static_cast<double>(spec.runs);
      mean_planes /= static_cast<double>(spec.runs);
      write_csv_row(out, {"mean", std::to_string(spec.seed), hash,
                          algo_names[a], format_double(spec.gamma_grid[gi]),
                          "", "",
                          has_planes ? format_double(mean_planes) : "",
                          format_double(mean_updates), ""});
    }
  }
}

namespace {

struct PoolData {
  Pool pool;
  std::vector<int> labels;
  std::vector<Vec> test_xs;
  std::vector<int> test_ys;
  std::vector<std::pair<std::size_t, int>> init_labeled;
  std::uint64_t seed = 0;
  std::string warning;
};

PoolData make_pool(const ExperimentSpec& spec, std::size_t run) {
  PoolData data;
  data.seed = substream_seed(spec.seed, run);
  bool synthetic = spec.pool_paths.empty();
  if (!synthetic) {
    const std::string& path = spec.pool_paths[run % spec.pool_paths.size()];
    try {
      Dataset file = spec.pool_format == "sparse" ? load_sparse_file(path)
                                                  : load_dense_csv_file(path);
      data.pool = to_pool(file);
      for (const auto& p : file.points) data.labels.push_back(p.y);
      data.test_xs = data.pool.points;
      data.test_ys = data.labels;
    } catch (const DatasetUnavailable& err) {
      data.warning = std::string(err.what()) + "; using a synthetic pool";
      synthetic = true;
    }
  }
  if (synthetic) {
    SyntheticConfig gen;
    gen.n_points = spec.pool_size;
    gen.side = spec.side;
    gen.margin_gamma = spec.pool_gamma;
    gen.seed = substream_seed(data.seed, 2);
    gen.reflect_negatives = false;
    SyntheticData synth = generate_synthetic(gen);
    data.pool = to_pool(synth.dataset);
    for (const auto& p : synth.dataset.points) data.labels.push_back(p.y);
    Rng test_rng(substream_seed(data.seed, 3));
    double half = spec.side / 2.0;
    data.test_xs.reserve(spec.test_points);
    for (std::size_t i = 0; i < spec.test_points; ++i) {
      Vec x(2);
      do {
        x[0] = test_rng.uniform(-half, half);
        x[1] = test_rng.uniform(-half, half);
      } while (is_zero(x));
      data.test_ys.push_back(dot(synth.w_star, x) >= 0.0 ? 1 : -1);
      data.test_xs.push_back(std::move(x));
    }
  }
  // Two free labeled seeds: the first point of each class in pool order.
  long long first_pos = -1, first_neg = -1;
  for (std::size_t i = 0; i < data.labels.size(); ++i) {
    if (data.labels[i] > 0 && first_pos < 0)
      first_pos = static_cast<long long>(i);
    if (data.labels[i] < 0 && first_neg < 0)
      first_neg = static_cast<long long>(i);
    if (first_pos >= 0 && first_neg >= 0) break;
  }
  if (first_pos >= 0)
    data.init_labeled.emplace_back(static_cast<std::size_t>(first_pos), 1);
  if (first_neg >= 0)
    data.init_labeled.emplace_back(static_cast<std::size_t>(first_neg), -1);
  return data;
}

double accuracy(const Vec& center, const std::vector<Vec>& xs,
                const std::vector<int>& ys) {
  if (xs.empty()) return 0.0;
  std::size_t correct = 0;
  for (std::size_t i = 0; i < xs.size(); ++i)
    if (classify(center, xs[i]) == ys[i]) ++correct;
  return static_cast<double>(correct) / static_cast<double>(xs.size());
}

}  // namespace

void run_active_curves(const ExperimentSpec& spec, std::ostream& out) {
  const std::string hash = spec_hash(spec);
  write_csv_row(out, {"row_kind", "seed", "config_hash", "method", "scorer",
                      "run", "round", "query_index", "label", "violated",
                      "acc_test", "acc_pool", "volume", "volume_stderr",
                      "message"});

  struct MethodDef {
    std::string name;
    CenterMethod center;
    QueryScorer scorer;
  };
  const std::vector<MethodDef> methods = {
      {"ActiveBPM", CenterMethod::CentroidMC, spec.scorer},
      {"ActiveSVM", CenterMethod::Chebyshev, spec.scorer},
      {"RandomQuery", CenterMethod::CentroidMC, QueryScorer::UniformRandom},
  };

  std::vector<PoolData> pools(spec.runs);
  for (std::size_t r = 0; r < spec.runs; ++r) pools[r] = make_pool(spec, r);
  for (std::size_t r = 0; r < spec.runs; ++r) {
    if (!pools[r].warning.empty())
      write_csv_row(out, {"warning", std::to_string(pools[r].seed), hash, "",
                          "", std::to_string(r), "", "", "", "", "", "", "",
                          "", pools[r].warning});
  }

  struct RoundRow {
    std::size_t query_index = 0;
    int label = 0;
    bool violated = false;
    double acc_test = 0.0;
    double acc_pool = 0.0;
    std::string volume, volume_stderr;
  };
  std::vector<std::vector<RoundRow>> rows(methods.size() * spec.runs);

  parallel_tasks(rows.size(), spec.jobs, [&](std::size_t task) {
    std::size_t m = task / spec.runs;
    std::size_t r = task % spec.runs;
    const PoolData& data = pools[r];
    ActiveOptions options;
    options.method = methods[m].center;
    options.scorer = methods[m].scorer;
    options.budget = spec.budget;
    options.center_samples = spec.center_samples;
    options.volume_samples = spec.volume_samples;
    SamplerConfig sampler;
    sampler.seed = substream_seed(data.seed, 100 + m);
    LabelOracle oracle = [&data](std::size_t i) { return data.labels[i]; };
    ActiveRun run =
        run_active(data.pool, oracle, options, data.init_labeled, sampler);
    auto& run_rows = rows[task];
    run_rows.resize(run.queried.size());
    for (std::size_t k = 0; k < run.queried.size(); ++k) {
      RoundRow& row = run_rows[k];
      row.query_index = run.queried[k].index;
      row.label = run.queried[k].label;
      row.violated = run.queried[k].violated;
      row.acc_test =
          accuracy(run.centers[k].point, data.test_xs, data.test_ys);
      row.acc_pool = accuracy(run.centers[k].point, data.pool.points,
                              data.labels);
      if (k < run.volumes.size()) {
        row.volume = format_double(run.volumes[k].value);
        row.volume_stderr = format_double(run.volumes[k].stderr_value);
      }
    }
  });

  for (std::size_t m = 0; m < methods.size(); ++m) {
    for (std::size_t r = 0; r < spec.runs; ++r) {
      const auto& run_rows = rows[m * spec.runs + r];
      for (std::size_t k = 0; k < run_rows.size(); ++k) {
        const RoundRow& row = run_rows[k];
        write_csv_row(
            out, {"round", std::to_string(pools[r].seed), hash,
                  methods[m].name, scorer_name(methods[m].scorer),
                  std::to_string(r), std::to_string(k),
                  std::to_string(row.query_index), std::to_string(row.label),
                  row.violated ? "1" : "0", format_double(row.acc_test),
                  format_double(row.acc_pool), row.volume, row.volume_stderr,
                  ""});
      }
    }
  }
  // Mean curves across runs (rounds every run reached).
  for (std::size_t m = 0; m < methods.size(); ++m) {
    std::size_t min_rounds = 0;
    for (std::size_t r = 0; r < spec.runs; ++r) {
      std::size_t n = rows[m * spec.runs + r].size();
      min_rounds = r == 0 ? n : std::min(min_rounds, n);
    }
    for (std::size_t k = 0; k < min_rounds; ++k) {
      double mean_test = 0.0, mean_pool = 0.0;
      for (std::size_t r = 0; r < spec.runs; ++r) {
        mean_test += rows[m * spec.runs + r][k].acc_test;
        mean_pool += rows[m * spec.runs + r][k].acc_pool;
      }
      mean_test /= static_cast<double>(spec.runs);
      mean_pool /= static_cast<double>(spec.runs);
      write_csv_row(out, {"mean", std::to_string(spec.seed), hash,
                          methods[m].name, scorer_name(methods[m].scorer), "",
                          std::to_string(k), "", "", "",
                          format_double(mean_test), format_double(mean_pool),
                          "", "", ""});
    }
  }
}

void run_theorem_sweep(const ExperimentSpec& spec, std::ostream& out) {
  const std::string hash = spec_hash(spec);
  write_csv_row(out, {"row_kind", "seed", "config_hash", "body", "dim",
                      "lambda", "ratio", "bound", "stderr", "satisfied",
                      "ratio_minus", "offset", "precondition_ok", "volume",
                      "volume_stderr"});

  struct BodyRows {
    std::vector<std::vector<std::string>> rows;
  };
  std::size_t n_bodies = spec.dims.size() * spec.bodies_per_dim;
  std::vector<BodyRows> bodies(n_bodies);

  parallel_tasks(n_bodies, spec.jobs, [&](std::size_t task) {
    std::size_t di = task / spec.bodies_per_dim;
    std::size_t b = task % spec.bodies_per_dim;
    auto dim = static_cast<std::size_t>(spec.dims[di]);
    std::uint64_t body_seed =
        substream_seed(substream_seed(spec.seed, 1000 + dim), b);
    Rng body_rng(body_seed);
    std::size_t n_halfspaces = 2 + body_rng.uniform_index(dim + 1);
    SphericalPolytope polytope =
        random_polytope(dim, n_halfspaces, substream_seed(body_seed, 1));
    Vec normal = body_rng.unit_sphere(dim);
    std::string body_id =
        "d" + std::to_string(dim) + "-b" + std::to_string(b);
    PartitionConfig config;
    config.n_samples = spec.partition_samples;
    config.seed = substream_seed(body_seed, 777);
    config.body_id = body_id;
    for (double lambda : spec.lambdas) {
      std::vector<std::string> row = {"report", std::to_string(body_seed),
                                      hash};
      try {
        PartitionReport report =
            generalized_partition_check(polytope, normal, lambda, config);
        for (auto& field : partition_report_row(report))
          row.push_back(std::move(field));
        row.push_back(format_double(1.0 - report.ratio));
        row.push_back(format_double(report.offset));
        row.push_back("1");
        row.push_back(format_double(report.vol_total.value));
        row.push_back(format_double(report.vol_total.stderr_value));
      } catch (const OffsetOutsideBody&) {
        row.insert(row.end(), {body_id, std::to_string(dim),
                               format_double(lambda), "", "", "", "", "", "",
                               "0", "", ""});
      }
      bodies[task].rows.push_back(std::move(row));
    }
  });

  for (const auto& body : bodies)
    for (const auto& row : body.rows) write_csv_row(out, row);
}

void run_experiment(const ExperimentSpec& spec, std::ostream& out) {
  switch (spec.kind) {
    case ExperimentKind::StrategyComparison:
      run_strategy_comparison(spec, out);
      return;
    case ExperimentKind::MarginSweep:
      run_margin_sweep(spec, out);
      return;
    case ExperimentKind::ActiveCurves:
      run_active_curves(spec, out);
      return;
    case ExperimentKind::TheoremSweep:
      run_theorem_sweep(spec, out);
      return;
  }
}

void run_experiment_to_file(const ExperimentSpec& spec,
                            const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DatasetUnavailable(path);
  run_experiment(spec, out);
}

}  // namespace cutplane
