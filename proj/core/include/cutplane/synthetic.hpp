#pragma once

#include <cstdint>

#include "cutplane/dataset.hpp"
#include "cutplane/version_space.hpp"

namespace cutplane {

// Planar benchmark generator: n_points drawn uniformly on a centered
// side x side square, labeled by a hidden unit direction w*, negatives
// mirrored through the origin so every label becomes +1 (the version-space
// geometry is unchanged by the mirroring), then points with signed margin
// y <w*, x> below margin_gamma pruned. margin_gamma is an unnormalized
// threshold, like the generator that motivated it; the exact normalized
// margin of a dataset comes from min_margin.
struct SyntheticConfig {
  std::size_t n_points = 1000;
  double side = 20.0;
  double margin_gamma = 0.0;
  std::uint64_t seed = 0;
  // Keep the +/-1 labels instead of mirroring; used for active-learning
  // pools where a two-class pool is wanted.
  bool reflect_negatives = true;
};

struct SyntheticData {
  Dataset dataset;
  Vec w_star;  // hidden unit direction, for margin scans and test labels
};

// Throws AllPruned when the margin threshold removes every point.
SyntheticData generate_synthetic(const SyntheticConfig& config);

// Random verification body: the unit ball cut by n_halfspaces halfspaces
// whose normals all make an angle of at most about 70 degrees with a hidden
// direction, which keeps the interior nonempty.
SphericalPolytope random_polytope(std::size_t dim, std::size_t n_halfspaces,
                                  std::uint64_t seed);

}  // namespace cutplane
