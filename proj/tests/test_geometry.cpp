#include <cmath>

#include "cutplane/errors.hpp"
#include "cutplane/geometry.hpp"
#include "cutplane/synthetic.hpp"
#include "doctest.h"

using namespace cutplane;

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kEInv = 0.36787944117144233;

// Riemann cell count over the bounding square, fully independent of the
// rejection sampler.
double grid_area_2d(const SphericalPolytope& p, int cells) {
  double h = 2.0 / cells;
  std::size_t inside = 0;
  for (int i = 0; i < cells; ++i) {
    for (int j = 0; j < cells; ++j) {
      Vec x = {-1.0 + (i + 0.5) * h, -1.0 + (j + 0.5) * h};
      if (contains(p, x)) ++inside;
    }
  }
  return inside * h * h;
}

// Monte Carlo integration over the cone's bounding box; an implementation
// with nothing in common with the closed forms under test.
struct ConeMc {
  double volume = 0.0;
  double centroid_height = 0.0;  // measured from the base
  double apex_side_fraction = 0.0;
};

ConeMc cone_mc(const HyperCone& cone, std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  std::size_t d = cone.dim;
  double box = 1.0;
  for (std::size_t i = 0; i + 1 < d; ++i) box *= 2.0 * cone.base_radius;
  box *= cone.height;
  std::size_t accepted = 0;
  double height_sum = 0.0;
  std::vector<double> heights;
  for (std::size_t i = 0; i < n; ++i) {
    double r2 = 0.0;
    for (std::size_t k = 0; k + 1 < d; ++k) {
      double c = rng.uniform(-cone.base_radius, cone.base_radius);
      r2 += c * c;
    }
    double z = rng.uniform(0.0, cone.height);
    double allowed = cone.base_radius * (1.0 - z / cone.height);
    if (r2 <= allowed * allowed) {
      ++accepted;
      height_sum += z;
      heights.push_back(z);
    }
  }
  ConeMc out;
  out.volume = box * static_cast<double>(accepted) / static_cast<double>(n);
  out.centroid_height = height_sum / static_cast<double>(accepted);
  std::size_t apex_side = 0;
  for (double z : heights)
    if (z > out.centroid_height) ++apex_side;
  out.apex_side_fraction =
      static_cast<double>(apex_side) / static_cast<double>(accepted);
  return out;
}

BodyStats half_disk_stats() {
  // Exact statistics of the unit half disk for the cut direction (1, 0).
  constexpr double c = 0.4244131815783876;  // 4 / (3 pi)
  BodyStats stats;
  stats.dim = 2;
  stats.volume = kPi / 2.0;
  stats.h_plus = 1.0 - c;
  stats.h_minus = c;
  stats.r_base = std::sqrt(1.0 - c * c);
  return stats;
}

}  // namespace

TEST_CASE("ball volumes match closed forms") {
  CHECK(ball_volume(0) == doctest::Approx(1.0));
  CHECK(ball_volume(1) == doctest::Approx(2.0));
  CHECK(ball_volume(2) == doctest::Approx(kPi).epsilon(1e-14));
  CHECK(ball_volume(3) == doctest::Approx(4.0 * kPi / 3.0).epsilon(1e-14));
  CHECK(ball_volume(4) == doctest::Approx(kPi * kPi / 2.0).epsilon(1e-14));
  CHECK(ball_volume(5) ==
        doctest::Approx(8.0 * kPi * kPi / 15.0).epsilon(1e-14));
  // Recurrence consistency further out.
  CHECK(ball_volume(10) ==
        doctest::Approx(ball_volume(8) * 2.0 * kPi / 10.0).epsilon(1e-14));
}

TEST_CASE("unit ball samples are uniform in radius^d") {
  Rng rng(77);
  const std::size_t d = 3, n = 100000;
  std::size_t inner = 0;
  for (std::size_t i = 0; i < n; ++i) {
    Vec x = sample_unit_ball(d, rng);
    REQUIRE(norm(x) <= 1.0 + 1e-12);
    if (norm(x) <= 0.5) ++inner;
  }
  // P(r <= 0.5) = 0.5^3.
  CHECK(static_cast<double>(inner) / n == doctest::Approx(0.125).epsilon(0.05));
}

TEST_CASE("volume estimates hit analytic values") {
  SphericalPolytope half = unit_ball(2);
  add_halfspace(half, {1.0, 0.0}, 0);
  VolumeEstimate v2 = estimate_volume(half, 200000, 5);
  CHECK(v2.value == doctest::Approx(kPi / 2.0).epsilon(0.01));
  CHECK(std::abs(v2.value - kPi / 2.0) <= 5.0 * v2.stderr_value);

  // Orthogonal skew normals: a rotated quarter disk, area pi / 4.
  SphericalPolytope quarter = unit_ball(2);
  add_halfspace(quarter, {1.0, 2.0}, 0);
  add_halfspace(quarter, {2.0, -1.0}, 1);
  VolumeEstimate vq = estimate_volume(quarter, 200000, 6);
  CHECK(vq.value == doctest::Approx(kPi / 4.0).epsilon(0.02));

  SphericalPolytope half3 = unit_ball(3);
  add_halfspace(half3, {0.0, 0.0, -1.0}, 0);
  VolumeEstimate v3 = estimate_volume(half3, 200000, 7);
  CHECK(v3.value == doctest::Approx(2.0 * kPi / 3.0).epsilon(0.02));

  CHECK(v2.n_samples == 200000);
  CHECK(v2.n_accepted > 0);
}

TEST_CASE("volume estimate agrees with a grid count on random bodies") {
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    SphericalPolytope p = random_polytope(2, 2 + seed, 40 + seed);
    VolumeEstimate est = estimate_volume(p, 150000, 900 + seed);
    double oracle = grid_area_2d(p, 2000);
    CHECK(std::abs(est.value - oracle) <=
          std::max(0.01, 5.0 * est.stderr_value));
  }
}

TEST_CASE("volume estimation guards its inputs") {
  SphericalPolytope p = unit_ball(2);
  CHECK_THROWS_AS(estimate_volume(p, 999, 0), std::invalid_argument);
  add_halfspace(p, {1.0, 0.0}, 0);
  add_halfspace(p, {-1.0, 0.0}, 1);
  CHECK_THROWS_AS(estimate_volume(p, 10000, 0), ZeroAcceptance);
}

TEST_CASE("cone closed forms match Monte Carlo integration") {
  for (std::size_t dim : {2, 3, 4}) {
    HyperCone cone{dim, 0.8, 1.7};
    ConeMc mc = cone_mc(cone, 400000, 1000 + dim);
    CHECK(cone_volume(cone) == doctest::Approx(mc.volume).epsilon(0.02));
    CHECK(cone_centroid_offset(cone) ==
          doctest::Approx(mc.centroid_height).epsilon(0.02));
    CHECK(cone_partition_ratio(dim) ==
          doctest::Approx(mc.apex_side_fraction).epsilon(0.02));
  }
}

TEST_CASE("cone partition ratios decrease to 1/e") {
  CHECK(cone_partition_ratio(2) == doctest::Approx(4.0 / 9.0).epsilon(1e-14));
  CHECK(cone_partition_ratio(3) == doctest::Approx(27.0 / 64.0).epsilon(1e-14));
  double prev = 1.0;
  for (std::size_t d = 2; d <= 200; ++d) {
    double r = cone_partition_ratio(d);
    CHECK(r >= kEInv);
    CHECK(r < prev);
    prev = r;
  }
  CHECK(prev - kEInv < 1e-3);
}

TEST_CASE("generalized bound formula") {
  BodyStats stats = half_disk_stats();
  GeneralizedBound zero = generalized_bound(0.0, stats);
  CHECK(zero.offset == 0.0);
  CHECK(zero.bound == doctest::Approx(kEInv).epsilon(1e-14));

  GeneralizedBound half = generalized_bound(0.5, stats);
  CHECK(half.offset == doctest::Approx(0.2614122477867417).epsilon(1e-12));
  CHECK(half.bound == doctest::Approx(kEInv * 0.25).epsilon(1e-12));

  CHECK_THROWS_AS(generalized_bound(-0.01, stats), LambdaOutOfRange);
  CHECK_THROWS_AS(generalized_bound(1.0, stats), LambdaOutOfRange);
  CHECK_THROWS_AS(generalized_bound(1.5, stats), LambdaOutOfRange);

  BodyStats degenerate = stats;
  degenerate.h_minus = 0.0;
  CHECK_THROWS_AS(generalized_bound(0.2, degenerate), DegenerateBody);
  BodyStats flat = stats;
  flat.r_base = 0.0;
  CHECK_THROWS_AS(generalized_bound(0.2, flat), DegenerateBody);
  CHECK_NOTHROW(generalized_bound(0.0, flat));
}

TEST_CASE("grunbaum check matches half-disk side areas") {
  SphericalPolytope half = unit_ball(2);
  add_halfspace(half, {1.0, 0.0}, 0);
  PartitionConfig config;
  config.n_samples = 200000;
  config.seed = 17;
  config.body_id = "half-disk";

  PartitionReport along = grunbaum_check(half, {1.0, 0.0}, config);
  CHECK(along.body == "half-disk");
  CHECK(along.dim == 2);
  CHECK(along.lambda == 0.0);
  CHECK(along.offset == 0.0);
  CHECK(along.bound == doctest::Approx(kEInv));
  CHECK(along.ratio == doctest::Approx(0.47631241857008416).epsilon(0.02));
  CHECK(along.satisfied);
  CHECK(along.vol_total.value == doctest::Approx(kPi / 2.0).epsilon(0.01));
  // Measured body extents line up with the exact ones.
  CHECK(along.stats.h_plus ==
        doctest::Approx(1.0 - 0.4244131815783876).epsilon(0.02));
  CHECK(along.stats.h_minus == doctest::Approx(0.4244131815783876).epsilon(0.02));
  CHECK(along.stats.r_base ==
        doctest::Approx(std::sqrt(1.0 - 0.4244131815783876 *
                                            0.4244131815783876))
            .epsilon(0.08));

  PartitionReport across = grunbaum_check(half, {0.0, 1.0}, config);
  CHECK(across.ratio == doctest::Approx(0.5).epsilon(0.02));
  CHECK(across.satisfied);
}

TEST_CASE("generalized check reduces to grunbaum at lambda zero") {
  SphericalPolytope p = random_polytope(3, 3, 8);
  PartitionConfig config;
  config.n_samples = 50000;
  config.seed = 23;
  Vec normal = {0.3, -0.8, 0.52};
  PartitionReport a = grunbaum_check(p, normal, config);
  PartitionReport b = generalized_partition_check(p, normal, 0.0, config);
  CHECK(a.ratio == b.ratio);
  CHECK(a.vol_total.value == b.vol_total.value);
  CHECK(a.vol_plus.value == b.vol_plus.value);
  CHECK(a.offset == b.offset);
  CHECK(a.bound == b.bound);
  CHECK(a.stats.h_plus == b.stats.h_plus);
  CHECK(a.satisfied == b.satisfied);
}

TEST_CASE("generalized check on the half disk matches the exact cut") {
  SphericalPolytope half = unit_ball(2);
  add_halfspace(half, {1.0, 0.0}, 0);
  PartitionConfig config;
  config.n_samples = 200000;
  config.seed = 29;
  PartitionReport report =
      generalized_partition_check(half, {1.0, 0.0}, 0.5, config);
  CHECK(report.lambda == 0.5);
  CHECK(report.bound == doctest::Approx(kEInv * 0.25).epsilon(1e-12));
  // Exact-statistics cut keeps 0.2011 of the area; measured statistics move
  // the offset a little, so the tolerance is loose.
  CHECK(report.ratio == doctest::Approx(0.20113272567556473).epsilon(0.2));
  CHECK(report.offset == doctest::Approx(0.2614122477867417).epsilon(0.1));
  CHECK(report.satisfied);
}

TEST_CASE("partition check rejects bad cut setups") {
  SphericalPolytope half = unit_ball(2);
  add_halfspace(half, {1.0, 0.0}, 0);
  PartitionConfig config;
  config.n_samples = 5000;
  config.seed = 3;
  CHECK_THROWS_AS(grunbaum_check(half, {0.0, 0.0}, config), ZeroVector);
  CHECK_THROWS_AS(grunbaum_check(half, {1.0, 0.0, 0.0}, config),
                  DimensionMismatch);
  CHECK_THROWS_AS(generalized_partition_check(half, {1.0, 0.0}, 1.0, config),
                  LambdaOutOfRange);
  PartitionConfig tiny = config;
  tiny.n_samples = 10;
  CHECK_THROWS_AS(grunbaum_check(half, {1.0, 0.0}, tiny),
                  std::invalid_argument);
}

TEST_CASE("partition report rows carry the shared shape") {
  CHECK(partition_report_header() ==
        std::vector<std::string>{"body", "dim", "lambda", "ratio", "bound",
                                 "stderr", "satisfied"});
  PartitionReport report;
  report.body = "b";
  report.dim = 3;
  report.lambda = 0.25;
  report.ratio = 0.5;
  report.bound = 0.25;
  report.ratio_stderr = 0.01;
  report.satisfied = true;
  std::vector<std::string> row = partition_report_row(report);
  REQUIRE(row.size() == 7);
  CHECK(row[0] == "b");
  CHECK(row[1] == "3");
  CHECK(row[2] == "0.25");
  CHECK(row[3] == "0.5");
  CHECK(row[6] == "1");
}
