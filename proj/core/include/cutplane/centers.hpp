#pragma once

#include <cstdint>
#include <vector>

#include "cutplane/linalg.hpp"
#include "cutplane/version_space.hpp"

namespace cutplane {

// Hit-and-run chain parameters. Negative burn_in or thinning means "derive
// from the dimension at sampling time": burn_in = 10*d*d, thinning = d.
// Resolved values must satisfy burn_in >= 0 and thinning >= 1.
struct SamplerConfig {
  long long burn_in = -1;
  long long thinning = -1;
  std::uint64_t seed = 0;
};

enum class CenterMethod { CentroidMC, Chebyshev };

struct CenterEstimate {
  Vec point;
  CenterMethod method = CenterMethod::CentroidMC;
  std::size_t n_samples = 0;      // CentroidMC only
  double inscribed_radius = 0.0;  // Chebyshev only
};

// Uniform samples over the polytope via hit-and-run. The chain starts at the
// largest-inscribed-ball center (the origin when that solve is unavailable),
// walks along uniform random directions, and jumps to a uniform point of the
// feasible chord. A chord is the segment of the line inside the ball clipped
// by every halfspace. Chords degenerate below length 1e-12 on 100
// consecutive attempts raise ChordCollapse (empty or lower-dimensional
// interior).
std::vector<Vec> hit_and_run(const SphericalPolytope& polytope, std::size_t n,
                             const SamplerConfig& config);

// Mean of n hit-and-run samples.
CenterEstimate centroid_estimate(const SphericalPolytope& polytope,
                                 std::size_t n, const SamplerConfig& config);

// Chebyshev center (center of the largest inscribed ball). For a spherical
// polytope the problem reduces to one search over unit directions:
//   u* = argmax_{||u||=1} min_i <a_i, u>,  m = the attained max-min margin,
//   center = u* / (1 + m),  radius = m / (1 + m).
// See docs/chebyshev.md for the derivation. Step 1 is solved by projected
// subgradient ascent on the sphere, stopping once the best margin improves
// by less than tol over a full sweep, then polished by an equal-margin
// solve over the near-active normals. The bare ball returns the origin with
// radius 1. Throws NotSeparable when the max-min margin is <= tol and
// MaxIterExceeded when max_iter iterations pass without the stop firing.
CenterEstimate chebyshev_center(const SphericalPolytope& polytope,
                                double tol = 1e-9,
                                std::uint64_t max_iter = 2000000);

}  // namespace cutplane
