#pragma once

#include <cstddef>
#include <vector>

#include "cutplane/dataset.hpp"
#include "cutplane/linalg.hpp"

namespace cutplane {

// Tolerance for unit-norm and halfspace membership comparisons. Boundary
// membership has measure zero under every sampler here, so a loose one-sided
// tolerance is safe.
inline constexpr double kMembershipTol = 1e-12;

// Homogeneous halfspace {w : <normal, w> >= 0}. The normal has unit norm.
// source_index records which dataset point induced it (or, for synthetic
// bodies, an arbitrary id); purely informational.
struct Halfspace {
  Vec normal;
  std::size_t source_index = 0;
};

// Intersection of the unit ball with homogeneous halfspaces. Halfspace order
// is insertion order and is significant only for reproducibility.
struct SphericalPolytope {
  std::size_t dim = 0;
  std::vector<Halfspace> halfspaces;
};

// Unit ball in R^d with no halfspace.
SphericalPolytope unit_ball(std::size_t dim);

// Appends one halfspace, normalizing the direction. Refines the polytope
// monotonically: the result is a subset of the input.
void add_halfspace(SphericalPolytope& polytope, const Vec& direction,
                   std::size_t source_index);

// Version space of a dataset: the unit ball cut by one halfspace per point,
// with normal y_i * x_i / ||x_i||. Deterministic in the dataset.
SphericalPolytope build_version_space(const Dataset& dataset);

// Non-strict membership: ||w|| <= 1 + tol and <a_i, w> >= -tol for every
// halfspace.
bool contains(const SphericalPolytope& polytope, const Vec& w);

struct MarginScan {
  double value = 0.0;     // min_i y_i <w, x_i> / (||w|| ||x_i||)
  std::size_t index = 0;  // smallest index attaining the minimum
};

// Exhaustive normalized-margin scan of a dataset against a direction w.
MarginScan min_margin(const Vec& w, const Dataset& dataset);

}  // namespace cutplane
