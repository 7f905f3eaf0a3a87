#pragma once

#include <cmath>
#include <cstdint>

#include "cutplane/dataset.hpp"
#include "cutplane/rng.hpp"

namespace cutplane::testing {

struct Separable {
  Dataset dataset;
  Vec w_star;
};

// Gaussian cloud labeled by a hidden unit direction, with points of
// normalized margin below `margin` rejected, so localization terminates and
// mistake bounds apply.
inline Separable make_separable(std::size_t dim, std::size_t n, double margin,
                                std::uint64_t seed) {
  Rng rng(seed);
  Separable out;
  out.w_star = rng.unit_sphere(dim);
  while (out.dataset.size() < n) {
    Vec x = rng.gaussian_vec(dim);
    double nx = norm(x);
    if (nx <= 1e-9) continue;
    double raw = dot(out.w_star, x);
    if (std::abs(raw) / nx < margin) continue;
    add_point(out.dataset, std::move(x), raw >= 0.0 ? 1 : -1);
  }
  return out;
}

}  // namespace cutplane::testing
