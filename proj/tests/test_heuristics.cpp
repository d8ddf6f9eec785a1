#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "progsimp/error_matrix.hpp"
#include "progsimp/heuristics.hpp"
#include "progsimp/progressive.hpp"
#include "progsimp/scales.hpp"
#include "progsimp/validate.hpp"

using namespace progsimp;

namespace {

using Seq = std::vector<std::size_t>;

GraphSource source(const Curve& c) {
  return GraphSource::make(c.points(), ErrorMeasure::Hausdorff, GraphStrategy::ErrorMatrix);
}

}  // namespace

TEST_CASE("greedy fixtures") {
  const Curve z = fixture::zigzag();
  const Curve l = fixture::line();
  const auto zs = source(z);
  const auto ls = source(l);
  const ScaleSequence s({0.5, 1.0});
  const ScaleSequence s3({0.1, 0.2, 0.3});
  for (Algorithm a : {Algorithm::GreedyTopDown, Algorithm::GreedyBottomUp, Algorithm::GreedyBottomUpCao,
                      Algorithm::DpTopDown, Algorithm::DpBottomUp}) {
    CAPTURE(to_string(a));
    const auto ps = run_algorithm(a, zs, s);
    CHECK(ps.scales[1] == Seq{0, 4});
    CHECK(ps.scales[0] == Seq{0, 1, 2, 3, 4});
    CHECK(ps.cumulative_size() == 7);
    for (const auto& sc : run_algorithm(a, ls, s3).scales) CHECK(sc == Seq{0, 3});
  }
}

TEST_CASE("douglas-peucker fixtures") {
  CHECK(douglas_peucker(fixture::line(), 0.1) == Seq{0, 3});
  CHECK(douglas_peucker(fixture::zigzag(), 0.5) == Seq{0, 1, 2, 3, 4});
  CHECK(douglas_peucker(fixture::zigzag(), 1.0) == Seq{0, 4});
  CHECK_THROWS_AS(douglas_peucker(fixture::zigzag(), -1.0), InputError);
}

TEST_CASE("douglas-peucker only ends on pieces within eps") {
  std::mt19937_64 rng(81);
  for (int trial = 0; trial < 50; ++trial) {
    const auto pts = oracle::random_points(rng, 2 + rng() % 60, trial % 3);
    const double eps = 0.05 * static_cast<double>(rng() % 40);
    const auto s = douglas_peucker(pts, eps);
    for (std::size_t e = 0; e + 1 < s.size(); ++e) {
      REQUIRE(oracle::vertex_hausdorff(pts, s[e], s[e + 1]) <= eps);
    }
  }
}

TEST_CASE("douglas-peucker directions agree") {
  std::mt19937_64 rng(82);
  for (int trial = 0; trial < 50; ++trial) {
    const auto pts = oracle::random_points(rng, 2 + rng() % 150, trial % 3);
    const auto em = compute_all_errors_hull(pts);
    if (em.max_useful_error() == 0.0) continue;
    const auto scales = sample_scales(em, 1 + rng() % 8, trial % 2 ? SamplingRule::All : SamplingRule::SmallestDecile);
    REQUIRE(dp_progressive(pts, scales, Direction::TopDown) == dp_progressive(pts, scales, Direction::BottomUp));
  }
}

TEST_CASE("heuristics are valid and the exact ones never beat the optimum") {
  std::mt19937_64 rng(83);
  for (int trial = 0; trial < 40; ++trial) {
    const auto pts = oracle::random_points(rng, 2 + rng() % 80, trial % 3);
    const Curve c(pts);
    const auto src = source(c);
    if (src.max_useful_error() == 0.0) continue;
    const auto scales = sample_scales(*src.errors(), 1 + rng() % 6, SamplingRule::All);
    const auto opt = min_progressive(src, scales).simplification;
    REQUIRE(validate(pts, ErrorMeasure::Hausdorff, opt).ok());
    for (Algorithm a : all_algorithms()) {
      CAPTURE(to_string(a));
      const auto ps = run_algorithm(a, src, scales);
      const bool cao = a == Algorithm::GreedyBottomUpCao;
      REQUIRE(validate(pts, ErrorMeasure::Hausdorff, ps, cao).ok());
      // Cao's output is only valid up to the summed tolerances, so it may
      // undercut the optimum.
      if (!cao) REQUIRE(ps.cumulative_size() >= opt.cumulative_size());
    }
  }
}

TEST_CASE("wedge strategy gives the same heuristics") {
  std::mt19937_64 rng(84);
  for (int trial = 0; trial < 20; ++trial) {
    const auto pts = oracle::random_points(rng, 5 + rng() % 80, 2);
    const auto matrix = GraphSource::make(pts, ErrorMeasure::Hausdorff, GraphStrategy::ErrorMatrix);
    const auto wedge = GraphSource::make(pts, ErrorMeasure::Hausdorff, GraphStrategy::ChanChin);
    // Midpoints between consecutive distinct errors avoid boundary ties.
    std::vector<double> v(matrix.errors()->values().begin(), matrix.errors()->values().end());
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    std::vector<double> eps;
    for (std::size_t k = 1; k < v.size(); k += std::max<std::size_t>(1, v.size() / 4)) eps.push_back((v[k - 1] + v[k]) / 2);
    const ScaleSequence scales(eps);
    for (Algorithm a : {Algorithm::GreedyTopDown, Algorithm::GreedyBottomUp, Algorithm::Optimal}) {
      REQUIRE(run_algorithm(a, matrix, scales) == run_algorithm(a, wedge, scales));
    }
  }
}

TEST_CASE("other measures run through the greedy algorithms") {
  std::mt19937_64 rng(85);
  for (ErrorMeasure m : {ErrorMeasure::Frechet, ErrorMeasure::Area}) {
    const auto pts = oracle::random_points(rng, 30, 2);
    const auto src = GraphSource::make(pts, m, GraphStrategy::ErrorMatrix);
    const auto scales = sample_scales(*src.errors(), 4, SamplingRule::All);
    const auto opt = min_progressive(src, scales).simplification;
    for (Algorithm a : {Algorithm::GreedyTopDown, Algorithm::GreedyBottomUp}) {
      const auto ps = run_algorithm(a, src, scales);
      REQUIRE(validate(pts, m, ps).ok());
      REQUIRE(ps.cumulative_size() >= opt.cumulative_size());
    }
    CHECK_THROWS_AS(run_algorithm(Algorithm::DpTopDown, src, scales), InputError);
  }
}

TEST_CASE("algorithm names") {
  for (Algorithm a : all_algorithms()) CHECK(parse_algorithm(to_string(a)) == a);
  CHECK_THROWS_AS(parse_algorithm("fastest"), InputError);
}
