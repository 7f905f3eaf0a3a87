#include <cmath>

#include "cutplane/errors.hpp"
#include "cutplane/version_space.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace cutplane;

TEST_CASE("unit ball membership") {
  SphericalPolytope ball = unit_ball(3);
  CHECK(ball.dim == 3);
  CHECK(ball.halfspaces.empty());
  CHECK(contains(ball, {0.0, 0.0, 0.0}));
  CHECK(contains(ball, {1.0, 0.0, 0.0}));
  CHECK_FALSE(contains(ball, {1.1, 0.0, 0.0}));
}

TEST_CASE("add_halfspace normalizes and validates") {
  SphericalPolytope p = unit_ball(2);
  add_halfspace(p, {3.0, 0.0}, 7);
  REQUIRE(p.halfspaces.size() == 1);
  CHECK(p.halfspaces[0].normal == Vec{1.0, 0.0});
  CHECK(p.halfspaces[0].source_index == 7);
  CHECK(contains(p, {0.5, 0.5}));
  CHECK_FALSE(contains(p, {-0.5, 0.5}));
  CHECK_THROWS_AS(add_halfspace(p, {0.0, 0.0}, 0), ZeroVector);
  CHECK_THROWS_AS(add_halfspace(p, {1.0, 0.0, 0.0}, 0), DimensionMismatch);
}

TEST_CASE("build_version_space uses signed unit normals") {
  Dataset ds;
  add_point(ds, {2.0, 0.0}, 1);
  add_point(ds, {0.0, 3.0}, -1);
  SphericalPolytope space = build_version_space(ds);
  REQUIRE(space.halfspaces.size() == 2);
  CHECK(space.halfspaces[0].normal == Vec{1.0, 0.0});
  CHECK(space.halfspaces[1].normal == Vec{0.0, -1.0});
  CHECK(space.halfspaces[0].source_index == 0);
  CHECK(space.halfspaces[1].source_index == 1);
  CHECK(contains(space, {0.7, -0.7}));
  CHECK_FALSE(contains(space, {0.7, 0.7}));
}

TEST_CASE("membership tolerates the boundary") {
  SphericalPolytope p = unit_ball(2);
  add_halfspace(p, {1.0, 0.0}, 0);
  CHECK(contains(p, {0.0, 1.0}));
  CHECK(contains(p, {-0.5 * kMembershipTol, 0.5}));
  CHECK_FALSE(contains(p, {-1e-9, 0.5}));
}

TEST_CASE("min_margin scans and reports the smallest index") {
  Dataset ds;
  add_point(ds, {1.0, 0.0}, 1);
  add_point(ds, {0.0, 2.0}, 1);
  add_point(ds, {2.0, 0.0}, 1);
  Vec w = {1.0, 1.0};
  MarginScan scan = min_margin(w, ds);
  // margins: cos(45deg) for indices 0 and 2, cos(45deg) for 1; all equal.
  CHECK(scan.value == doctest::Approx(std::sqrt(0.5)));
  CHECK(scan.index == 0);

  add_point(ds, {1.0, -1.0}, 1);  // margin 0 under w
  scan = min_margin(w, ds);
  CHECK(scan.value == doctest::Approx(0.0));
  CHECK(scan.index == 3);
  CHECK_THROWS_AS(min_margin(Vec{0.0, 0.0}, ds), ZeroVector);
}

TEST_CASE("membership agrees with the margin scan") {
  using testing::make_separable;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto [ds, w_star] = make_separable(3, 60, 0.05, 1000 + seed);
    SphericalPolytope space = build_version_space(ds);
    Rng rng(seed);
    for (int t = 0; t < 50; ++t) {
      Vec w = rng.unit_sphere(3);
      double margin = min_margin(w, ds).value;
      if (margin > 1e-9) CHECK(contains(space, w));
      if (margin < -1e-9) CHECK_FALSE(contains(space, w));
    }
    CHECK(contains(space, w_star));
  }
}

TEST_CASE("refinement is monotone") {
  Rng rng(4);
  SphericalPolytope small = unit_ball(3);
  SphericalPolytope big = unit_ball(3);
  for (int i = 0; i < 4; ++i)
    add_halfspace(big, rng.unit_sphere(3), static_cast<std::size_t>(i));
  small = big;
  add_halfspace(small, rng.unit_sphere(3), 4);
  for (int t = 0; t < 500; ++t) {
    Vec w = rng.gaussian_vec(3);
    if (contains(small, w)) CHECK(contains(big, w));
  }
}
