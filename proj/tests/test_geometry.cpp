#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <limits>
#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "progsimp/geometry.hpp"

using namespace progsimp;

TEST_CASE("point to segment distance") {
  CHECK(point_segment_distance({1, 1}, {0, 0}, {2, 0}) == 1.0);
  CHECK(point_segment_distance({0, 0}, {0, 0}, {3, 0}) == 0.0);
  CHECK(point_segment_distance({5, 0}, {0, 0}, {3, 0}) == 2.0);
  CHECK(point_segment_distance({3, 4}, {0, 0}, {0, 0}) == 5.0);
  const double nan = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(point_segment_distance({nan, 0}, {0, 0}, {1, 0}), InputError);
  CHECK_THROWS_AS(point_segment_distance({0, 0}, {0, 0}, {std::numeric_limits<double>::infinity(), 0}),
                  InputError);
}

TEST_CASE("curve construction") {
  CHECK_THROWS_AS(Curve({{0, 0}}), InputError);
  CHECK_THROWS_AS(Curve({{0, 0}, {0, 0}}), InputError);
  CHECK_THROWS_AS(Curve({{0, 0}, {std::numeric_limits<double>::quiet_NaN(), 1}}), InputError);
  std::size_t dropped = 0;
  const std::vector<Point> raw{{0, 0}, {1, 1}, {1, 1}, {1, 1}, {2, 0}};
  const Curve c = Curve::from_raw(raw, &dropped);
  CHECK(c.size() == 3);
  CHECK(dropped == 2);
}

TEST_CASE("hausdorff fixture values") {
  const Curve l = fixture::line();
  const Curve z = fixture::zigzag();
  CHECK(hausdorff_error(l, {0, 3}) == 0.0);
  CHECK(hausdorff_error(z, {0, 2}) == 1.0);
  CHECK(hausdorff_error(z, {0, 3}) == doctest::Approx(fixture::kTwoOverRootTen).epsilon(1e-12));
  CHECK(shortcut_error(z, {0, 4}, ErrorMeasure::Hausdorff) == 1.0);
  CHECK(shortcut_error(z, {1, 3}, ErrorMeasure::Hausdorff) == 1.0);
  CHECK_THROWS_AS(hausdorff_error(z, {3, 3}), InputError);
  CHECK_THROWS_AS(hausdorff_error(z, {0, 5}), InputError);
}

TEST_CASE("frechet decision fixture values") {
  const Curve l = fixture::line();
  const Curve z = fixture::zigzag();
  CHECK(frechet_valid(l, {0, 3}, 0.0));
  CHECK_FALSE(frechet_valid(z, {0, 4}, 0.9));
  CHECK(frechet_valid(z, {0, 4}, 1.0));
  CHECK(shortcut_error(z, {0, 4}, ErrorMeasure::Frechet) == doctest::Approx(1.0).epsilon(1e-8));
  // A backtracking curve: Fréchet exceeds the Hausdorff value.
  const Curve back({{0, 0}, {2, 0}, {1, 0}, {3, 0}});
  CHECK(hausdorff_error(back, {0, 3}) == 0.0);
  CHECK(frechet_error(back.points(), {0, 3}) == doctest::Approx(0.5).epsilon(1e-8));
}

TEST_CASE("area fixture values") {
  const Curve l = fixture::line();
  const Curve z = fixture::zigzag();
  CHECK(area_error(l, {0, 3}) == 0.0);
  CHECK(area_error(z, {0, 2}) == 1.0);
  CHECK(area_error(z, {0, 4}) == 2.0);
  CHECK(shortcut_error(l, {0, 2}, ErrorMeasure::Area) == 0.0);
}

TEST_CASE("measure names") {
  CHECK(parse_measure("hausdorff") == ErrorMeasure::Hausdorff);
  CHECK(parse_measure("frechet") == ErrorMeasure::Frechet);
  CHECK(parse_measure("area") == ErrorMeasure::Area);
  CHECK(to_string(ErrorMeasure::Frechet) == "frechet");
  CHECK_THROWS_AS(parse_measure("euclid"), InputError);
}

TEST_CASE("properties on random curves") {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + rng() % 49;
    const auto pts = oracle::random_points(rng, n, trial % 3);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const double h = hausdorff_error(pts, {i, j});
        if (j == i + 1) {
          REQUIRE(h == 0.0);
          REQUIRE(area_error(pts, {i, j}) == 0.0);
          REQUIRE(frechet_valid(pts, {i, j}, 0.0));
        }
        REQUIRE(std::abs(h - oracle::dense_hausdorff(pts, i, j)) <= 1e-9);
        REQUIRE(std::abs(area_error(pts, {i, j}) - oracle::shoelace(pts, i, j)) <=
                1e-9 * std::max(1.0, oracle::shoelace(pts, i, j)));
      }
    }
  }
}

TEST_CASE("frechet against a discrete oracle") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 3 + rng() % 6;
    const auto pts = oracle::random_points(rng, n, trial % 3);
    const std::size_t i = rng() % (n - 1);
    const std::size_t j = i + 1 + rng() % (n - 1 - i);
    const auto [discrete, spacing] = oracle::discrete_frechet(pts, i, j);
    const double f = frechet_error(pts, {i, j});
    REQUIRE(f <= discrete + 1e-9);
    REQUIRE(f >= discrete - spacing - 1e-9);
    // Fréchet bounds the directed Hausdorff distance from above.
    REQUIRE(f >= hausdorff_error(pts, {i, j}) - 1e-12);
    // Monotone in eps.
    bool seen_valid = false;
    for (double eps = 0.0; eps < discrete + 1.0; eps += 0.05) {
      const bool v = frechet_valid(pts, {i, j}, eps);
      REQUIRE((!seen_valid || v));
      seen_valid = seen_valid || v;
    }
    REQUIRE(seen_valid);
  }
}
