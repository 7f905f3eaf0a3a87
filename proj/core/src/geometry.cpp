#include "cutplane/geometry.hpp"

#include <cmath>
#include <stdexcept>

#include "cutplane/errors.hpp"
#include "cutplane/numfmt.hpp"

namespace cutplane {

double ball_volume(std::size_t d) {
  // Exact recurrence Pi_d = Pi_{d-2} * 2*pi/d avoids tgamma rounding.
  constexpr double pi = 3.14159265358979323846;
  double even = 1.0;  // Pi_0
  double odd = 2.0;   // Pi_1
  if (d == 0) return even;
  if (d == 1) return odd;
  double v = 0.0;
  for (std::size_t k = 2; k <= d; ++k) {
    v = (k % 2 == 0 ? even : odd) * 2.0 * pi / static_cast<double>(k);
    (k % 2 == 0 ? even : odd) = v;
  }
  return v;
}

Vec sample_unit_ball(std::size_t d, Rng& rng) {
  Vec x = rng.unit_sphere(d);
  double r = std::pow(rng.uniform01(), 1.0 / static_cast<double>(d));
  for (auto& v : x) v *= r;
  return x;
}

VolumeEstimate estimate_volume(const SphericalPolytope& polytope,
                               std::size_t n, std::uint64_t seed) {
  if (n < 1000)
    throw std::invalid_argument("volume estimation needs n >= 1000");
  Rng rng(seed);
  std::size_t accepted = 0;
  for (std::size_t i = 0; i < n; ++i) {
    Vec x = sample_unit_ball(polytope.dim, rng);
    if (contains(polytope, x)) ++accepted;
  }
  if (accepted == 0) throw ZeroAcceptance(n);
  double pi_d = ball_volume(polytope.dim);
  double p = static_cast<double>(accepted) / static_cast<double>(n);
  VolumeEstimate est;
  est.value = pi_d * p;
  est.stderr_value = pi_d * std::sqrt(p * (1.0 - p) / static_cast<double>(n));
  est.n_samples = n;
  est.n_accepted = accepted;
  return est;
}

double cone_volume(const HyperCone& cone) {
  auto n = static_cast<double>(cone.dim - 1);
  return ball_volume(cone.dim - 1) * std::pow(cone.base_radius, n) *
         cone.height / (n + 1.0);
}

double cone_centroid_offset(const HyperCone& cone) {
  auto n = static_cast<double>(cone.dim - 1);
  return cone.height / (n + 2.0);
}

double cone_partition_ratio(std::size_t dim) {
  auto n = static_cast<double>(dim - 1);
  return std::pow(1.0 - 1.0 / (n + 2.0), n + 1.0);
}

GeneralizedBound generalized_bound(double lambda, const BodyStats& stats) {
  if (!(lambda >= 0.0) || lambda >= 1.0) throw LambdaOutOfRange(lambda);
  if (stats.h_minus <= 0.0)
    throw DegenerateBody("h_minus = " + format_double(stats.h_minus));
  double bound =
      std::exp(-1.0) * std::pow(1.0 - lambda, static_cast<double>(stats.dim));
  if (lambda == 0.0) return {0.0, std::exp(-1.0)};
  if (stats.r_base <= 0.0)
    throw DegenerateBody("r_base = " + format_double(stats.r_base));
  if (stats.volume <= 0.0)
    throw DegenerateBody("volume = " + format_double(stats.volume));
  auto n = static_cast<double>(stats.dim - 1);
  double section = ball_volume(stats.dim - 1) * std::pow(stats.r_base, n);
  double offset = lambda * (n + 1.0) * stats.volume / section *
                  std::pow(stats.h_plus / ((n + 2.0) * stats.h_minus), n) *
                  (1.0 - 1.0 / (n + 2.0));
  return {offset, bound};
}

namespace {

// Half-width of the slab used to estimate the centroid section volume.
constexpr double kSlabHalfWidth = 0.01;

PartitionReport partition_check(const SphericalPolytope& polytope,
                                const Vec& normal, double lambda,
                                const PartitionConfig& config) {
  if (normal.size() != polytope.dim)
    throw DimensionMismatch(polytope.dim, normal.size());
  if (is_zero(normal)) throw ZeroVector("partition cut normal");
  if (!(lambda >= 0.0) || lambda >= 1.0) throw LambdaOutOfRange(lambda);
  if (config.n_samples < 1000)
    throw std::invalid_argument("partition check needs n >= 1000");
  Vec v = normalized(normal);

  Rng rng(config.seed);
  std::vector<Vec> accepted;
  for (std::size_t i = 0; i < config.n_samples; ++i) {
    Vec x = sample_unit_ball(polytope.dim, rng);
    if (contains(polytope, x)) accepted.push_back(std::move(x));
  }
  if (accepted.empty()) throw ZeroAcceptance(config.n_samples);

  auto n_total = static_cast<double>(config.n_samples);
  auto n_acc = static_cast<double>(accepted.size());
  double pi_d = ball_volume(polytope.dim);

  PartitionReport report;
  report.body = config.body_id;
  report.dim = polytope.dim;
  report.lambda = lambda;
  {
    double p = n_acc / n_total;
    report.vol_total = {pi_d * p, pi_d * std::sqrt(p * (1.0 - p) / n_total),
                        config.n_samples, accepted.size()};
  }

  Vec centroid(polytope.dim, 0.0);
  for (const auto& s : accepted) add_in_place(centroid, s);
  for (auto& c : centroid) c /= n_acc;

  BodyStats stats;
  stats.dim = polytope.dim;
  stats.volume = report.vol_total.value;
  std::size_t in_slab = 0;
  bool first = true;
  double lo = 0.0, hi = 0.0;
  for (const auto& s : accepted) {
    double proj = dot(v, s) - dot(v, centroid);
    if (first || proj > hi) hi = proj;
    if (first || proj < lo) lo = proj;
    first = false;
    if (std::abs(proj) <= kSlabHalfWidth) ++in_slab;
  }
  stats.h_plus = hi;
  stats.h_minus = -lo;
  double section_volume =
      pi_d * (static_cast<double>(in_slab) / n_total) / (2.0 * kSlabHalfWidth);
  auto n = static_cast<double>(polytope.dim - 1);
  stats.r_base =
      section_volume > 0.0
          ? std::pow(section_volume / ball_volume(polytope.dim - 1), 1.0 / n)
          : 0.0;
  report.stats = stats;

  GeneralizedBound gb = generalized_bound(lambda, stats);
  report.bound = gb.bound;
  report.offset = gb.offset;

  Vec cut_point = centroid;
  axpy_in_place(cut_point, gb.offset, v);
  if (!contains(polytope, cut_point)) throw OffsetOutsideBody();

  double threshold = dot(v, cut_point);
  std::size_t n_plus = 0;
  for (const auto& s : accepted)
    if (dot(v, s) >= threshold) ++n_plus;
  double q = static_cast<double>(n_plus) / n_total;
  report.vol_plus = {pi_d * q, pi_d * std::sqrt(q * (1.0 - q) / n_total),
                     config.n_samples, n_plus};
  report.ratio = static_cast<double>(n_plus) / n_acc;
  report.ratio_stderr =
      std::sqrt(report.ratio * (1.0 - report.ratio) / n_acc);
  double floor = report.bound - 3.0 * report.ratio_stderr;
  if (lambda == 0.0) {
    // Both sides of a centroid cut are covered by the bound.
    report.satisfied =
        report.ratio >= floor && (1.0 - report.ratio) >= floor;
  } else {
    report.satisfied = report.ratio >= floor;
  }
  return report;
}

}  // namespace

PartitionReport grunbaum_check(const SphericalPolytope& polytope,
                               const Vec& normal,
                               const PartitionConfig& config) {
  return partition_check(polytope, normal, 0.0, config);
}

PartitionReport generalized_partition_check(const SphericalPolytope& polytope,
                                            const Vec& normal, double lambda,
                                            const PartitionConfig& config) {
  return partition_check(polytope, normal, lambda, config);
}

std::vector<std::string> partition_report_header() {
  return {"body", "dim", "lambda", "ratio", "bound", "stderr", "satisfied"};
}

std::vector<std::string> partition_report_row(const PartitionReport& report) {
  return {report.body,
          std::to_string(report.dim),
          format_double(report.lambda),
          format_double(report.ratio),
          format_double(report.bound),
          format_double(report.ratio_stderr),
          report.satisfied ? "1" : "0"};
}

}  // namespace cutplane
