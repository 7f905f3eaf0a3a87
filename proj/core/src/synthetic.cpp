#include "cutplane/synthetic.hpp"

#include "cutplane/errors.hpp"
#include "cutplane/rng.hpp"

namespace cutplane {

SyntheticData generate_synthetic(const SyntheticConfig& config) {
  Rng rng(config.seed);
  SyntheticData out;
  out.w_star = rng.unit_sphere(2);
  out.dataset.dim = 2;
  double half = config.side / 2.0;
  for (std::size_t i = 0; i < config.n_points; ++i) {
    Vec x(2);
    do {
      x[0] = rng.uniform(-half, half);
      x[1] = rng.uniform(-half, half);
    } while (is_zero(x));
    double raw = dot(out.w_star, x);
    int y = raw >= 0.0 ? 1 : -1;
    if (config.reflect_negatives && y < 0) {
      x[0] = -x[0];
      x[1] = -x[1];
      y = 1;
    }
    // Signed margin prune; strictly-below threshold points are dropped.
    if (y * dot(out.w_star, x) < config.margin_gamma) continue;
    add_point(out.dataset, std::move(x), y);
  }
  if (out.dataset.empty()) throw AllPruned(config.margin_gamma);
  return out;
}

SphericalPolytope random_polytope(std::size_t dim, std::size_t n_halfspaces,
                                  std::uint64_t seed) {
  Rng rng(seed);
  Vec hidden = rng.unit_sphere(dim);
  SphericalPolytope polytope = unit_ball(dim);
  for (std::size_t i = 0; i < n_halfspaces; ++i) {
    Vec normal;
    do {
      normal = rng.unit_sphere(dim);
    } while (dot(normal, hidden) < 0.35);
    add_halfspace(polytope, normal, i);
  }
  return polytope;
}

}  // namespace cutplane
