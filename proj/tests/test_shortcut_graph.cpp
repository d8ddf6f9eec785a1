#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "progsimp/error_matrix.hpp"
#include "progsimp/graph_source.hpp"
#include "progsimp/interval_set.hpp"

using namespace progsimp;

namespace {

using Rows = std::vector<std::vector<Interval>>;

ShortcutIntervalSet single_row(std::size_t n, std::vector<Interval> row) {
  Rows rows(n);
  rows[0] = std::move(row);
  return ShortcutIntervalSet(n, 0.0, std::move(rows));
}

// An eps that is not within relative 1e-9 of any matrix entry.
double separated_eps(std::mt19937_64& rng, const ErrorMatrix& em) {
  std::uniform_real_distribution<double> u(0.0, 1.2);
  const double top = std::max(em.max_useful_error(), 1e-3);
  while (true) {
    const double eps = u(rng) * top;
    bool clear = true;
    for (double v : em.values()) {
      if (std::abs(v - eps) <= 1e-9 * std::max(std::abs(v), 1e-300)) clear = false;
    }
    if (clear) return eps;
  }
}

}  // namespace

TEST_CASE("filtering the fixture matrices") {
  const auto z = compute_all_errors_naive(fixture::zigzag(), ErrorMeasure::Hausdorff);
  const auto half = build_graph_from_errors(z, 0.5);
  for (std::size_t i = 0; i < 4; ++i) {
    REQUIRE(half.intervals(i).size() == 1);
    CHECK(half.intervals(i)[0] == Interval{i + 1, i + 1});
  }
  CHECK(half.intervals(4).empty());
  const auto one = build_graph_from_errors(z, 1.0);
  for (std::size_t i = 0; i < 4; ++i) CHECK(one.intervals(i)[0] == Interval{i + 1, 4});

  const auto l = compute_all_errors_naive(fixture::line(), ErrorMeasure::Hausdorff);
  const auto lg = build_graph_from_errors(l, 0.0);
  for (std::size_t i = 0; i < 3; ++i) CHECK(lg.intervals(i)[0] == Interval{i + 1, 3});

  CHECK_THROWS_AS(build_graph_from_errors(z, -1.0), InputError);
}

TEST_CASE("wedge construction on fixtures") {
  const Curve z = fixture::zigzag();
  const auto z_errors = compute_all_errors_naive(z, ErrorMeasure::Hausdorff);
  CHECK(build_graph_chan_chin(z, 1.0) == build_graph_from_errors(z_errors, 1.0));
  const auto l = build_graph_chan_chin(fixture::line(), 0.1);
  for (std::size_t i = 0; i < 3; ++i) CHECK(l.intervals(i)[0] == Interval{i + 1, 3});
}

TEST_CASE("wedge construction equals filtering on random inputs") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + rng() % 120;
    const auto pts = oracle::random_points(rng, n, trial % 3);
    const auto em = compute_all_errors_naive(pts, ErrorMeasure::Hausdorff);
    const double eps = separated_eps(rng, em);
    const auto filtered = build_graph_from_errors(em, eps);
    REQUIRE(build_graph_chan_chin(pts, eps) == filtered);
    // And both agree with the explicit oracle.
    REQUIRE(compress({n, eps, oracle::filter_pairs(pts, eps)}) == filtered);
  }
}

TEST_CASE("member-restricted graphs") {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 3 + rng() % 60;
    const auto pts = oracle::random_points(rng, n, trial % 3);
    std::vector<std::size_t> members{0};
    for (std::size_t v = 1; v + 1 < n; ++v) {
      if (rng() % 2) members.push_back(v);
    }
    members.push_back(n - 1);
    const auto em = compute_all_errors_naive(pts, ErrorMeasure::Hausdorff);
    const double eps = separated_eps(rng, em);
    const auto a = build_graph_from_errors(em, eps, members);
    const auto b = build_graph_chan_chin(pts, eps, members);
    REQUIRE(a == b);
    for (std::size_t x = 0; x < members.size(); ++x) {
      for (std::size_t y = x + 1; y < members.size(); ++y) {
        REQUIRE(a.contains(x, y) == (oracle::vertex_hausdorff(pts, members[x], members[y]) <= eps));
      }
    }
  }
}

TEST_CASE("interval intersection") {
  const auto a1 = single_row(20, {{2, 8}});
  const auto b1 = single_row(20, {{4, 12}});
  CHECK(intersect_interval_sets(a1, b1).intervals(0)[0] == Interval{4, 8});

  const auto a2 = single_row(20, {{2, 5}, {9, 12}});
  const auto b2 = single_row(20, {{3, 10}});
  const auto ab = intersect_interval_sets(a2, b2);
  REQUIRE(ab.intervals(0).size() == 2);
  CHECK(ab.intervals(0)[0] == Interval{3, 5});
  CHECK(ab.intervals(0)[1] == Interval{9, 10});
  CHECK(intersect_interval_sets(a2, b2) == intersect_interval_sets(b2, a2));
  CHECK(intersect_interval_sets(a2, a2) == a2);

  CHECK(intersect_interval_sets(single_row(20, {{2, 4}}), single_row(20, {{5, 9}})).intervals(0).empty());
  CHECK_THROWS_AS(intersect_interval_sets(single_row(20, {}), single_row(21, {})), InputError);
}

TEST_CASE("interval set invariants are enforced") {
  CHECK_THROWS_AS(single_row(10, {{3, 4}, {5, 6}}), InputError);  // mergeable
  CHECK_THROWS_AS(single_row(10, {{5, 6}, {2, 3}}), InputError);  // unsorted
  CHECK_THROWS_AS(single_row(10, {{0, 3}}), InputError);          // not forward
  CHECK_THROWS_AS(single_row(10, {{3, 10}}), InputError);         // out of range
}

TEST_CASE("explicit expansion and compression") {
  Rows rows(6);
  rows[0] = {{1, 4}};
  for (std::size_t i = 1; i < 5; ++i) rows[i] = {{i + 1, i + 1}};
  const ShortcutIntervalSet s(6, 0.0, rows);
  const auto g = to_explicit(s);
  CHECK(g.successors[0] == std::vector<std::size_t>{1, 2, 3, 4});
  CHECK(compress(g) == s);

  Rows holes(3);
  holes[0] = {{2, 2}};
  CHECK_THROWS_AS(to_explicit(ShortcutIntervalSet(3, 0.0, holes)), InputError);

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + rng() % 40;
    Rows r(n);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      std::vector<std::size_t> succ{i + 1};
      for (std::size_t j = i + 2; j < n; ++j) {
        if (rng() % 3 == 0) succ.push_back(j);
      }
      RowBuilder b;
      for (std::size_t j : succ) b.add(j);
      r[i] = b.take();
    }
    const ShortcutIntervalSet set(n, 0.0, r);
    REQUIRE(compress(to_explicit(set)) == set);
    REQUIRE(set.has_adjacent_edges());
  }
}

TEST_CASE("statistics") {
  const auto z = compute_all_errors_naive(fixture::zigzag(), ErrorMeasure::Hausdorff);
  const auto one = stats(build_graph_from_errors(z, 1.0));
  CHECK(one.shortcut_count == 10);
  CHECK(one.interval_count == 4);
  CHECK(one.density == 1.0);
  const auto half = stats(build_graph_from_errors(z, 0.5));
  CHECK(half.shortcut_count == 4);
  CHECK(half.interval_count == 4);
  CHECK(half.density == doctest::Approx(0.4));
  const auto l = compute_all_errors_naive(fixture::line(), ErrorMeasure::Hausdorff);
  CHECK(stats(build_graph_from_errors(l, 0.0)).density == 1.0);
}

TEST_CASE("graphs nest as eps grows and keep adjacent edges") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 2 + rng() % 60;
    const auto pts = oracle::random_points(rng, n, trial % 3);
    const auto src = GraphSource::make(pts, ErrorMeasure::Hausdorff, GraphStrategy::ErrorMatrix);
    double prev_eps = 0.0;
    auto prev = src.build(0.0);
    REQUIRE(prev.has_adjacent_edges());
    for (int step = 0; step < 5; ++step) {
      const double eps = prev_eps + 0.3 * static_cast<double>(rng() % 4);
      const auto cur = src.build(eps);
      REQUIRE(cur.has_adjacent_edges());
      for (std::size_t i = 0; i < n; ++i) {
        for (const auto& iv : prev.intervals(i)) {
          for (std::size_t j = iv.first; j <= iv.last; ++j) REQUIRE(cur.contains(i, j));
        }
      }
      prev = cur;
      prev_eps = eps;
    }
  }
}

TEST_CASE("graph sources") {
  const Curve z = fixture::zigzag();
  CHECK_THROWS_AS(GraphSource::make(z.points(), ErrorMeasure::Frechet, GraphStrategy::ChanChin), InputError);
  const auto matrix = GraphSource::make(z.points(), ErrorMeasure::Hausdorff, GraphStrategy::ErrorMatrix);
  const auto wedge = GraphSource::make(z.points(), ErrorMeasure::Hausdorff, GraphStrategy::ChanChin);
  CHECK(matrix.build(0.7) == wedge.build(0.7));
  CHECK(matrix.max_useful_error() == 1.0);
  CHECK(wedge.max_useful_error() == 1.0);
  CHECK(wedge.errors() == nullptr);
  const auto area = GraphSource::make(z.points(), ErrorMeasure::Area, GraphStrategy::ErrorMatrix);
  CHECK(area.error(0, 4) == 2.0);
}
