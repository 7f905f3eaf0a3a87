#include "cutplane/version_space.hpp"

#include "cutplane/errors.hpp"

namespace cutplane {

SphericalPolytope unit_ball(std::size_t dim) {
  if (dim == 0) throw DimensionMismatch(1, 0);
  return SphericalPolytope{dim, {}};
}

void add_halfspace(SphericalPolytope& polytope, const Vec& direction,
                   std::size_t source_index) {
  if (direction.size() != polytope.dim)
    throw DimensionMismatch(polytope.dim, direction.size());
  if (is_zero(direction)) throw ZeroVector("halfspace direction");
  polytope.halfspaces.push_back({normalized(direction), source_index});
}

SphericalPolytope build_version_space(const Dataset& dataset) {
  if (dataset.empty()) throw EmptyDataset();
  SphericalPolytope polytope = unit_ball(dataset.dim);
  polytope.halfspaces.reserve(dataset.size());
  for (std::size_t i = 0; i < dataset.size(); ++i)
    add_halfspace(polytope, signed_point(dataset.points[i]), i);
  return polytope;
}

bool contains(const SphericalPolytope& polytope, const Vec& w) {
  if (w.size() != polytope.dim)
    throw DimensionMismatch(polytope.dim, w.size());
  if (norm(w) > 1.0 + kMembershipTol) return false;
  for (const auto& h : polytope.halfspaces)
    if (dot(h.normal, w) < -kMembershipTol) return false;
  return true;
}

MarginScan min_margin(const Vec& w, const Dataset& dataset) {
  if (dataset.empty()) throw EmptyDataset();
  if (w.size() != dataset.dim) throw DimensionMismatch(dataset.dim, w.size());
  double wn = norm(w);
  if (wn == 0.0) throw ZeroVector("min_margin query direction");
  MarginScan best;
  bool first = true;
  for (std::size_t i = 0; i < dataset.size(); ++i) {
    const auto& p = dataset.points[i];
    double m = p.y * dot(w, p.x) / (wn * norm(p.x));
    if (first || m < best.value) {
      best.value = m;
      best.index = i;
      first = false;
    }
  }
  return best;
}

}  // namespace cutplane
