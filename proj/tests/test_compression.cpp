#include <cmath>
#include <sstream>

#include "cutplane/compression.hpp"
#include "cutplane/errors.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace cutplane;
using testing::make_separable;

TEST_CASE("reduced_dataset dedups and keeps first-occurrence order") {
  Dataset ds;
  add_point(ds, {1.0, 0.0}, 1);
  add_point(ds, {2.0, 0.0}, -1);
  add_point(ds, {3.0, 0.0}, 1);
  add_point(ds, {4.0, 0.0}, -1);
  Dataset red = reduced_dataset(ds, {3, 1, 3, 2});
  REQUIRE(red.size() == 3);
  CHECK(red.points[0].x == Vec{4.0, 0.0});
  CHECK(red.points[1].x == Vec{2.0, 0.0});
  CHECK(red.points[2].x == Vec{3.0, 0.0});
  CHECK(red.points[1].y == -1);
  CHECK_THROWS_AS(reduced_dataset(ds, {4}), IndexOutOfRange);
}

TEST_CASE("replay reproduces the predictor bit for bit") {
  for (StrategyKind kind : {StrategyKind::LargestError,
                            StrategyKind::SmallestError,
                            StrategyKind::RandomError}) {
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
      for (std::size_t dim : {2, 4}) {
        auto [ds, w_star] = make_separable(dim, 150, 0.08, seed * 13 + dim);
        OracleStrategy strategy{kind, seed + 3};
        LocalizationTrace trace = localize(ds, strategy);
        CompressionScheme scheme = extract_scheme(trace, strategy);
        CHECK(scheme.indices == trace.plane_indices);
        CHECK(scheme.predictor == trace.w_final);
        Vec replayed = replay(ds, scheme);
        CHECK(replayed == trace.w_final);
      }
    }
  }
}

TEST_CASE("every prefix of the picks replays to its round query") {
  for (StrategyKind kind : {StrategyKind::LargestError,
                            StrategyKind::SmallestError,
                            StrategyKind::RandomError}) {
    auto [ds, w_star] = make_separable(2, 120, 0.05, 321);
    OracleStrategy strategy{kind, 17};
    LocalizationTrace trace = localize(ds, strategy);
    for (std::size_t k = 1; k <= trace.plane_indices.size(); ++k) {
      CompressionScheme prefix;
      prefix.strategy = strategy;
      prefix.indices.assign(trace.plane_indices.begin(),
                            trace.plane_indices.begin() +
                                static_cast<std::ptrdiff_t>(k));
      prefix.predictor = trace.queries[k - 1];
      CHECK(replay(ds, prefix) == trace.queries[k - 1]);
    }
  }
}

TEST_CASE("generalization report matches hand-computed values") {
  CHECK(generalization_report(101, 1, 0) == doctest::Approx(0.1).epsilon(1e-12));
  CHECK(generalization_report(1000, 4, 0) ==
        doctest::Approx(std::sqrt(1.0 / 996.0)).epsilon(1e-12));
  CHECK(generalization_report(1000, 500, 250) ==
        doctest::Approx(0.5 + std::sqrt(1.0 / 500.0)).epsilon(1e-12));
  CHECK_THROWS_AS(generalization_report(5, 5, 0), DegenerateDenominator);
  CHECK_THROWS_AS(generalization_report(5, 9, 0), DegenerateDenominator);
}

TEST_CASE("scheme text round-trips exactly") {
  auto [ds, w_star] = make_separable(3, 80, 0.1, 55);
  OracleStrategy strategy{StrategyKind::RandomError, 987654321};
  LocalizationTrace trace = localize(ds, strategy);
  CompressionScheme scheme = extract_scheme(trace, strategy);

  std::ostringstream out;
  serialize_scheme(scheme, out);
  std::istringstream in(out.str());
  CompressionScheme back = parse_scheme(in);
  CHECK(back.strategy.kind == scheme.strategy.kind);
  CHECK(back.strategy.seed == scheme.strategy.seed);
  CHECK(back.indices == scheme.indices);
  CHECK(back.predictor == scheme.predictor);

  std::string path = "/tmp/cutplane-test-scheme.txt";
  save_scheme(scheme, path);
  CompressionScheme loaded = load_scheme(path);
  CHECK(loaded.predictor == scheme.predictor);
  CHECK(replay(ds, loaded) == scheme.predictor);
}

TEST_CASE("scheme parser rejects malformed input") {
  auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return parse_scheme(in);
  };
  CHECK_THROWS_AS(parse(""), ParseError);
  CHECK_THROWS_AS(parse("wrong-magic 1\n"), ParseError);
  CHECK_THROWS_AS(parse("cutplane-scheme 2\n"), ParseError);
  CHECK_THROWS_AS(
      parse("cutplane-scheme 1\nstrategy Bogus 0\nplanes 0\npredictor 1 1\n"),
      ParseError);
  CHECK_THROWS_AS(parse("cutplane-scheme 1\nstrategy LargestError 0\n"
                        "planes 2\n0\n"),
                  ParseError);  // truncated plane list
  CHECK_THROWS_AS(parse("cutplane-scheme 1\nstrategy LargestError 0\n"
                        "planes 0\npredictor 3 1 2\n"),
                  ParseError);  // predictor shorter than its dim
  CHECK_THROWS_AS(load_scheme("/nonexistent/scheme.txt"), DatasetUnavailable);
}
