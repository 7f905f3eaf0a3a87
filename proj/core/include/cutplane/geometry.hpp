#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cutplane/linalg.hpp"
#include "cutplane/rng.hpp"
#include "cutplane/version_space.hpp"

namespace cutplane {

// Volume of the unit ball in R^d.
double ball_volume(std::size_t d);

// Uniform point in the unit ball: Gaussian direction scaled by U^(1/d).
Vec sample_unit_ball(std::size_t d, Rng& rng);

struct VolumeEstimate {
  double value = 0.0;
  double stderr_value = 0.0;
  std::size_t n_samples = 0;
  std::size_t n_accepted = 0;
};

// Monte Carlo volume by rejection from the unit ball:
// value = Pi_d * accepted/n, stderr = Pi_d * sqrt(p(1-p)/n).
// Requires n >= 1000; throws ZeroAcceptance when nothing is accepted.
VolumeEstimate estimate_volume(const SphericalPolytope& polytope,
                               std::size_t n, std::uint64_t seed);

// Right spherical hypercone in R^dim: base an (dim-1)-ball of radius
// `base_radius`, apex at distance `height` above the base center.
struct HyperCone {
  std::size_t dim = 2;
  double base_radius = 1.0;
  double height = 1.0;
};

// Closed forms (n = dim - 1):
//   volume            = Pi_n R^n H / (n+1)
//   centroid offset   = H / (n+2), measured from the base along the axis
//   partition ratio   = (1 - 1/(n+2))^(n+1), the apex-side volume fraction
//                       when the cone is cut through its centroid parallel
//                       to the base; decreasing in dim with limit e^-1.
double cone_volume(const HyperCone& cone);
double cone_centroid_offset(const HyperCone& cone);
double cone_partition_ratio(std::size_t dim);

// Measured statistics of a convex body along a cut direction, produced by
// the partition checks and consumed by generalized_bound. h_plus/h_minus are
// the maximal extents along +/- the direction measured from the centroid
// (h_minus stored as a positive magnitude); r_base is the radius of the
// (dim-1)-ball matching the volume of the body's section at the centroid.
struct BodyStats {
  std::size_t dim = 0;
  double volume = 0.0;
  double h_plus = 0.0;
  double h_minus = 0.0;
  double r_base = 0.0;
};

struct GeneralizedBound {
  double offset = 0.0;  // distance to shift the cut plane along the normal
  double bound = 0.0;   // e^-1 * (1 - lambda)^dim
};

// Offset and volume bound for a cut at distance `offset` past the centroid:
// with n = dim - 1,
//   offset = lambda * (n+1) V / (Pi_n r_base^n)
//            * (h_plus / ((n+2) h_minus))^n * (1 - 1/(n+2))
// and the guaranteed fraction on the far side is e^-1 (1 - lambda)^dim.
// lambda = 0 returns (0, e^-1) exactly. Throws LambdaOutOfRange for
// lambda outside [0, 1) and DegenerateBody for h_minus <= 0 (or, when
// lambda > 0, a nonpositive r_base or volume).
GeneralizedBound generalized_bound(double lambda, const BodyStats& stats);

struct PartitionConfig {
  std::size_t n_samples = 100000;
  std::uint64_t seed = 0;
  std::string body_id;  // free-form label carried into the report
};

struct PartitionReport {
  std::string body;
  std::size_t dim = 0;
  double lambda = 0.0;
  VolumeEstimate vol_total;
  VolumeEstimate vol_plus;
  double ratio = 0.0;         // vol_plus / vol_total
  double ratio_stderr = 0.0;  // binomial stderr of the ratio over accepted
  double bound = 0.0;
  double offset = 0.0;  // cut plane distance past the centroid
  bool satisfied = false;
  BodyStats stats;
};

// Cuts the body through its Monte Carlo centroid with the given normal and
// reports both side fractions against the e^-1 floor; satisfied means both
// sides clear bound - 3 * ratio_stderr.
PartitionReport grunbaum_check(const SphericalPolytope& polytope,
                               const Vec& normal,
                               const PartitionConfig& config);

// Shifts the cut plane `offset` past the centroid along the normal, where
// `offset` comes from generalized_bound over measured body stats, and
// reports the far-side fraction against e^-1 (1-lambda)^dim. Throws
// OffsetOutsideBody when the offset point leaves the body (the bound's
// precondition). lambda = 0 reduces to grunbaum_check, samples included.
PartitionReport generalized_partition_check(const SphericalPolytope& polytope,
                                            const Vec& normal, double lambda,
                                            const PartitionConfig& config);

// The CSV row shape shared by every partition report.
std::vector<std::string> partition_report_header();
std::vector<std::string> partition_report_row(const PartitionReport& report);

}  // namespace cutplane
