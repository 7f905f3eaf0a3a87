#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <utility>
#include <vector>

#include "cutplane/centers.hpp"
#include "cutplane/dataset.hpp"
#include "cutplane/geometry.hpp"
#include "cutplane/version_space.hpp"

namespace cutplane {

// Answers one label query. Must return -1 or +1 and answer consistently for
// a given index; every call is a purchased label.
using LabelOracle = std::function<int(std::size_t)>;

// How the next query is chosen among unqueried pool points.
//   AbsNormalized: smallest |<center, x>| / ||x|| (default).
//   SignedRaw:     smallest <center, x>, no normalization.
//   UniformRandom: seeded uniform choice, the reference baseline.
enum class QueryScorer { AbsNormalized, SignedRaw, UniformRandom };

std::string scorer_name(QueryScorer scorer);
QueryScorer parse_scorer(const std::string& name);

// Next query index. `queried` marks pool points already spent (size must
// equal the pool's). Ties break lexicographically on raw point coordinates,
// then by index. Throws PoolExhausted when every point is marked and
// ZeroCenter when a score-based scorer receives the zero center. `rng` is
// consumed only by UniformRandom and is then required.
std::size_t select_query(const Vec& center, const Pool& pool,
                         const std::vector<bool>& queried,
                         QueryScorer scorer = QueryScorer::AbsNormalized,
                         Rng* rng = nullptr);

struct ActiveOptions {
  CenterMethod method = CenterMethod::CentroidMC;
  std::size_t budget = 30;
  QueryScorer scorer = QueryScorer::AbsNormalized;
  std::size_t center_samples = 2000;  // CentroidMC only
  double chebyshev_tol = 1e-9;
  std::uint64_t chebyshev_max_iter = 2000000;
  // When nonzero, the polytope volume is estimated with this many samples at
  // the start of every round (ZeroAcceptance degrades to value 0 with a
  // one-count stderr floor rather than stopping the run).
  std::size_t volume_samples = 0;
  // When positive, the run stops early once the round volume estimate falls
  // below this threshold.
  double volume_stop = 0.0;
};

struct QueryRecord {
  std::size_t index = 0;
  int label = 0;
  bool violated = false;
};

struct ActiveRun {
  CenterMethod method = CenterMethod::CentroidMC;
  QueryScorer scorer = QueryScorer::AbsNormalized;
  std::size_t budget = 0;
  std::size_t dim = 0;
  std::vector<std::pair<std::size_t, int>> init_labeled;
  std::vector<QueryRecord> queried;         // one per purchased label
  std::vector<CenterEstimate> centers;      // center at the start of each round
  std::vector<VolumeEstimate> volumes;      // empty unless volume_samples > 0
  SphericalPolytope polytope;               // final localized version space
};

// Pool-based active localization. Seeds the version space with one halfspace
// per init-labeled point, then per round: estimate the center of the current
// polytope, query the best-scoring unqueried point, buy its label, and
// append its halfspace only when the label contradicts the center
// (y <center, x> < 0). Runs until `budget` labels are bought or the pool is
// exhausted (which returns the state reached, not an error). Per-round
// center sampling and the random scorer consume substreams of config.seed,
// so runs replay exactly.
ActiveRun run_active(const Pool& pool, const LabelOracle& oracle,
                     const ActiveOptions& options,
                     const std::vector<std::pair<std::size_t, int>>& init_labeled,
                     const SamplerConfig& config);

// sign(<center, x>) with sign(0) = +1.
int classify(const Vec& center, const Vec& x);

// Newline-delimited record of a run: a header line, one `init` line, then
// one line per round carrying index, label, violated flag, the center
// vector, and the volume estimate when present. See docs/formats.md.
void serialize_active_run(const ActiveRun& run, std::ostream& out);
ActiveRun parse_active_run(std::istream& in);

}  // namespace cutplane
