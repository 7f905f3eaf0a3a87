#include "cutplane/active.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "cutplane/errors.hpp"
#include "cutplane/numfmt.hpp"
#include "cutplane/rng.hpp"

namespace cutplane {

std::string scorer_name(QueryScorer scorer) {
  switch (scorer) {
    case QueryScorer::AbsNormalized: return "AbsNormalized";
    case QueryScorer::SignedRaw: return "SignedRaw";
    case QueryScorer::UniformRandom: return "UniformRandom";
  }
  return "AbsNormalized";
}

QueryScorer parse_scorer(const std::string& name) {
  if (name == "AbsNormalized" || name == "abs")
    return QueryScorer::AbsNormalized;
  if (name == "SignedRaw" || name == "signed") return QueryScorer::SignedRaw;
  if (name == "UniformRandom" || name == "random")
    return QueryScorer::UniformRandom;
  throw ParseError("unknown query scorer '" + name + "'");
}

std::size_t select_query(const Vec& center, const Pool& pool,
                         const std::vector<bool>& queried, QueryScorer scorer,
                         Rng* rng) {
  if (queried.size() != pool.size())
    throw DimensionMismatch(pool.size(), queried.size());
  std::vector<std::size_t> open;
  for (std::size_t i = 0; i < pool.size(); ++i)
    if (!queried[i]) open.push_back(i);
  if (open.empty()) throw PoolExhausted();

  if (scorer == QueryScorer::UniformRandom) {
    if (!rng)
      throw std::invalid_argument("UniformRandom scorer needs an rng");
    return open[rng->uniform_index(open.size())];
  }

  if (center.size() != pool.dim)
    throw DimensionMismatch(pool.dim, center.size());
  if (is_zero(center)) throw ZeroCenter();
  bool first = true;
  std::size_t best = 0;
  double best_score = 0.0;
  for (std::size_t i : open) {
    const Vec& x = pool.points[i];
    double raw = dot(center, x);
    double score = scorer == QueryScorer::AbsNormalized
                       ? std::abs(raw) / norm(x)
                       : raw;
    if (first || score < best_score ||
        (score == best_score && lex_less(x, pool.points[best]))) {
      first = false;
      best = i;
      best_score = score;
    }
  }
  return best;
}

int classify(const Vec& center, const Vec& x) {
  return dot(center, x) >= 0.0 ? 1 : -1;
}

ActiveRun run_active(const Pool& pool, const LabelOracle& oracle,
                     const ActiveOptions& options,
                     const std::vector<std::pair<std::size_t, int>>& init_labeled,
                     const SamplerConfig& config) {
  if (pool.size() == 0) throw EmptyDataset();
  ActiveRun run;
  run.method = options.method;
  run.scorer = options.scorer;
  run.budget = options.budget;
  run.dim = pool.dim;
  run.init_labeled = init_labeled;
  run.polytope = unit_ball(pool.dim);

  std::vector<bool> queried(pool.size(), false);
  for (const auto& [idx, label] : init_labeled) {
    if (idx >= pool.size()) throw IndexOutOfRange(idx, pool.size());
    if (label != 1 && label != -1)
      throw std::invalid_argument("init label must be -1 or +1");
    queried[idx] = true;
    Vec direction = scaled(pool.points[idx], static_cast<double>(label));
    add_halfspace(run.polytope, direction, idx);
  }

  Rng query_rng(substream_seed(config.seed, 0x71c4));
  for (std::size_t round = 0; round < options.budget; ++round) {
    bool any_open = false;
    for (std::size_t i = 0; i < pool.size(); ++i)
      if (!queried[i]) {
        any_open = true;
        break;
      }
    if (!any_open) break;

    SamplerConfig round_config = config;
    round_config.seed = substream_seed(config.seed, round + 1);
    CenterEstimate center =
        options.method == CenterMethod::CentroidMC
            ? centroid_estimate(run.polytope, options.center_samples,
                                round_config)
            : chebyshev_center(run.polytope, options.chebyshev_tol,
                               options.chebyshev_max_iter);

    if (options.volume_samples > 0) {
      VolumeEstimate volume;
      try {
        // Every round reuses the same sample stream (common random numbers):
        // the polytopes are nested, so the accepted count, and with it the
        // estimate, is non-increasing pathwise, not just in expectation.
        volume = estimate_volume(run.polytope, options.volume_samples,
                                 substream_seed(config.seed, 0x9000));
      } catch (const ZeroAcceptance&) {
        volume.value = 0.0;
        volume.stderr_value = ball_volume(pool.dim) /
                              static_cast<double>(options.volume_samples);
        volume.n_samples = options.volume_samples;
        volume.n_accepted = 0;
      }
      run.volumes.push_back(volume);
    }

    std::size_t idx =
        select_query(center.point, pool, queried, options.scorer, &query_rng);
    queried[idx] = true;
    int label = oracle(idx);
    if (label != 1 && label != -1)
      throw std::invalid_argument("label oracle returned " +
                                  std::to_string(label));
    double agreement = label * dot(center.point, pool.points[idx]);
    bool violated = agreement < 0.0;
    if (violated) {
      Vec direction = scaled(pool.points[idx], static_cast<double>(label));
      add_halfspace(run.polytope, direction, idx);
    }
    run.centers.push_back(std::move(center));
    run.queried.push_back({idx, label, violated});

    if (options.volume_stop > 0.0 && !run.volumes.empty() &&
        run.volumes.back().value < options.volume_stop)
      break;
  }
  return run;
}

void serialize_active_run(const ActiveRun& run, std::ostream& out) {
  out << "cutplane-active 1 method "
      << (run.method == CenterMethod::CentroidMC ? "CentroidMC" : "Chebyshev")
      << " scorer " << scorer_name(run.scorer) << " budget " << run.budget
      << " dim " << run.dim << '\n';
  out << "init " << run.init_labeled.size();
  for (const auto& [idx, label] : run.init_labeled)
    out << ' ' << idx << ':' << label;
  out << '\n';
  for (std::size_t r = 0; r < run.queried.size(); ++r) {
    const auto& q = run.queried[r];
    out << "round " << r << " index " << q.index << " label " << q.label
        << " violated " << (q.violated ? 1 : 0) << " center";
    for (double v : run.centers[r].point) out << ' ' << format_double(v);
    if (r < run.volumes.size())
      out << " volume " << format_double(run.volumes[r].value) << ' '
          << format_double(run.volumes[r].stderr_value);
    out << '\n';
  }
}

ActiveRun parse_active_run(std::istream& in) {
  ActiveRun run;
  std::string line;
  if (!std::getline(in, line)) throw ParseError("empty active-run record");
  {
    std::istringstream header(line);
    std::string tok;
    int version = 0;
    if (!(header >> tok >> version) || tok != "cutplane-active" ||
        version != 1)
      throw ParseError("not an active-run record (bad header)");
    auto expect = [&](const char* key) {
      if (!(header >> tok) || tok != key)
        throw ParseError(std::string("expected '") + key + "' in header");
    };
    expect("method");
    header >> tok;
    run.method = tok == "Chebyshev" ? CenterMethod::Chebyshev
                                    : CenterMethod::CentroidMC;
    expect("scorer");
    header >> tok;
    run.scorer = parse_scorer(tok);
    expect("budget");
    header >> run.budget;
    expect("dim");
    header >> run.dim;
    if (run.dim == 0) throw ParseError("active-run record with dim 0");
  }
  run.polytope = unit_ball(run.dim);

  if (!std::getline(in, line)) throw ParseError("missing init line");
  {
    std::istringstream init(line);
    std::string tok;
    std::size_t n_init = 0;
    if (!(init >> tok >> n_init) || tok != "init")
      throw ParseError("missing init line");
    for (std::size_t i = 0; i < n_init; ++i) {
      if (!(init >> tok)) throw ParseError("missing init pair");
      auto colon = tok.find(':');
      if (colon == std::string::npos)
        throw ParseError("malformed init pair '" + tok + "'");
      run.init_labeled.emplace_back(std::stoull(tok.substr(0, colon)),
                                    std::stoi(tok.substr(colon + 1)));
    }
  }

  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string tok;
    auto expect = [&](const char* key) {
      if (!(row >> tok) || tok != key)
        throw ParseError(std::string("expected '") + key + "' in round line");
    };
    expect("round");
    std::size_t r = 0;
    row >> r;
    QueryRecord q;
    expect("index");
    row >> q.index;
    expect("label");
    row >> q.label;
    expect("violated");
    int flag = 0;
    row >> flag;
    q.violated = flag != 0;
    expect("center");
    CenterEstimate center;
    center.method = run.method;
    center.point.resize(run.dim);
    for (std::size_t i = 0; i < run.dim; ++i) {
      if (!(row >> tok)) throw ParseError("missing center coordinate");
      center.point[i] = parse_double_strict(tok);
    }
    if (row >> tok) {
      if (tok != "volume") throw ParseError("unexpected token '" + tok + "'");
      VolumeEstimate volume;
      if (!(row >> tok)) throw ParseError("missing volume value");
      volume.value = parse_double_strict(tok);
      if (!(row >> tok)) throw ParseError("missing volume stderr");
      volume.stderr_value = parse_double_strict(tok);
      run.volumes.push_back(volume);
    }
    run.queried.push_back(q);
    run.centers.push_back(std::move(center));
  }
  return run;
}

}  // namespace cutplane
