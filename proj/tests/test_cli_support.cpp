#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "fixtures.hpp"
#include "progsimp/bench.hpp"
#include "progsimp/error_matrix.hpp"
#include "progsimp/io.hpp"
#include "progsimp/scales.hpp"
#include "progsimp/svg.hpp"
#include "progsimp/synth.hpp"
#include "progsimp/validate.hpp"

using namespace progsimp;

namespace {

std::size_t count(const std::string& text, const std::string& what) {
  std::size_t n = 0;
  for (auto pos = text.find(what); pos != std::string::npos; pos = text.find(what, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("ingest") {
  std::istringstream plain("0,0\n1,1\n2,0\n");
  CHECK(read_curve_csv(plain).curve.size() == 3);

  std::istringstream dup("x,y\n0,0\n1,1\n1,1\n\n2,0\n");
  const auto r = read_curve_csv(dup);
  CHECK(r.curve.size() == 3);
  CHECK(r.dropped == 1);

  std::istringstream bad("abc,1\n2,2\n");
  try {
    read_curve_csv(bad);
    FAIL("expected a parse error");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("line 1") != std::string::npos);
  }
  std::istringstream bad3("0,0\n1,1,1\n");
  CHECK_THROWS_WITH_AS(read_curve_csv(bad3), doctest::Contains("line 2"), InputError);
  std::istringstream single("5,5\n5,5\n");
  CHECK_THROWS_AS(read_curve_csv(single), InputError);
  CHECK_THROWS_AS(read_curve_file("/nonexistent/curve.csv"), InputError);
}

TEST_CASE("number formatting round-trips") {
  for (double v : {0.0, 1.0, 0.1, 2.0 / 3.0, 1e-300, 123456789.123}) {
    CHECK(std::stod(format_double(v)) == v);
  }
  CHECK(format_double(1.0) == "1");
}

TEST_CASE("error matrix csv round trip") {
  const auto em = compute_all_errors_naive(fixture::zigzag(), ErrorMeasure::Hausdorff);
  std::ostringstream out;
  write_error_matrix_csv(out, em);
  CHECK(out.str().rfind("i,j,epsilon\n1,2,0\n1,3,1\n", 0) == 0);
  std::istringstream in(out.str());
  const auto back = read_error_matrix_csv(in);
  CHECK(std::equal(em.values().begin(), em.values().end(), back.values().begin()));
}

TEST_CASE("interval and raster export") {
  const auto em = compute_all_errors_naive(fixture::zigzag(), ErrorMeasure::Hausdorff);
  const auto g = build_graph_from_errors(em, 1.0);
  std::ostringstream csv;
  write_intervals_csv(csv, g);
  CHECK(csv.str() == "i,x,y\n1,2,5\n2,3,5\n3,4,5\n4,5,5\n");
  std::ostringstream pgm;
  write_density_pgm(pgm, build_graph_from_errors(em, 0.5));
  CHECK(pgm.str().rfind("P2\n5 5\n255\n255 0 255 255 255\n", 0) == 0);
}

TEST_CASE("simplification csv round trip") {
  ProgressiveSimplification ps;
  ps.eps = {0.5, 1.0};
  ps.scales = {{0, 1, 2, 3, 4}, {0, 4}};
  std::ostringstream out;
  write_simplification_csv(out, ps);
  CHECK(out.str().rfind("scale_index,epsilon,vertex_index\n1,0.5,1\n", 0) == 0);
  std::istringstream in(out.str());
  CHECK(read_simplification_csv(in) == ps);
}

TEST_CASE("continuous csv") {
  ContinuousResult r;
  r.breakpoints = {0.0, 1.0};
  r.simplifications = {{0, 1, 2}, {0, 2}};
  r.integral = 3.0;
  std::ostringstream out;
  write_continuous_csv(out, r);
  CHECK(out.str() == "breakpoint_epsilon,vertex_index\n0,1\n0,2\n0,3\n1,1\n1,3\nintegral,3\n");
}

TEST_CASE("scale sampling") {
  const auto z = compute_all_errors_naive(fixture::zigzag(), ErrorMeasure::Hausdorff);
  const auto two = sample_scales(z, 2, SamplingRule::All);
  REQUIRE(two.size() == 2);
  CHECK(two[0] == doctest::Approx(fixture::kTwoOverRootTen).epsilon(1e-12));
  CHECK(two[1] == 1.0);
  // Positive pool sorted: r, r, 1, 1, 1, 1; the median rank is 3.
  const auto one = sample_scales(z, 1, SamplingRule::All);
  REQUIRE(one.size() == 1);
  CHECK(one[0] == 1.0);
  const auto l = compute_all_errors_naive(fixture::line(), ErrorMeasure::Hausdorff);
  CHECK_THROWS_AS(sample_scales(l, 3, SamplingRule::All), InputError);
  CHECK_THROWS_AS(sample_scales(z, 0, SamplingRule::All), InputError);
  // The decile of six values is the smallest one.
  const auto dec = sample_scales(z, 5, SamplingRule::SmallestDecile);
  REQUIRE(dec.size() == 1);

  const auto parsed = parse_scale_list("0.5, 1,2");
  CHECK(parsed.size() == 3);
  CHECK(parsed[2] == 2.0);
  CHECK_THROWS_AS(parse_scale_list("0.5,x"), InputError);
  CHECK_THROWS_AS(parse_scale_list("1,0.5"), InputError);
  CHECK(parse_sampling("decile") == SamplingRule::SmallestDecile);
  CHECK_THROWS_AS(parse_sampling("tenth"), InputError);
}

TEST_CASE("synthetic curves") {
  const Curve z = synth_curve(SynthKind::Zigzag, 5, 123);
  CHECK(std::equal(z.points().begin(), z.points().end(), fixture::zigzag().points().begin()));
  const Curve a = synth_curve(SynthKind::RandomWalk, 100, 42);
  const Curve b = synth_curve(SynthKind::RandomWalk, 100, 42);
  CHECK(std::equal(a.points().begin(), a.points().end(), b.points().begin()));
  const Curve other = synth_curve(SynthKind::RandomWalk, 100, 43);
  CHECK_FALSE(std::equal(a.points().begin(), a.points().end(), other.points().begin()));
  CHECK(synth_curve(SynthKind::NoisyCircle, 3, 1).size() == 3);
  CHECK_THROWS_AS(synth_curve(SynthKind::Zigzag, 1, 0), InputError);
  CHECK(parse_synth_kind("noisy-circle") == SynthKind::NoisyCircle);
}

TEST_CASE("svg rendering") {
  const Curve z = fixture::zigzag();
  ProgressiveSimplification ps;
  ps.eps = {0.5, 1.0};
  ps.scales = {{0, 1, 2, 3, 4}, {0, 4}};
  std::ostringstream out;
  render_svg(out, z, ps);
  const std::string svg = out.str();
  CHECK(count(svg, "<g ") == 2);
  CHECK(count(svg, "<circle") == 7);
  CHECK(count(svg, "#d00000") == 3);  // vertices 2..4 are new at the fine scale
  CHECK(svg.find("|S|=2") != std::string::npos);

  std::ostringstream empty;
  render_svg(empty, z, ProgressiveSimplification{});
  CHECK(count(empty.str(), "<g ") == 1);
  CHECK(count(empty.str(), "<circle") == 0);
}

TEST_CASE("bench harness") {
  BenchConfig cfg;
  cfg.kind = SynthKind::Zigzag;
  cfg.sizes = {100};
  cfg.num_scales = 5;
  cfg.sampling = SamplingRule::All;
  const auto records = run_bench(cfg);
  REQUIRE(records.size() == all_algorithms().size());
  const std::size_t optimal = records.front().cumulative;
  for (const auto& r : records) {
    CHECK(r.error.empty());
    CHECK(r.valid);
    CHECK(r.cumulative >= optimal);
    std::size_t sum = 0;
    for (std::size_t s : r.sizes) sum += s;
    CHECK(sum == r.cumulative);
  }

  BenchConfig rw;
  rw.sizes = {60, 120};
  rw.num_scales = 4;
  std::ostringstream a, b;
  write_bench_csv(a, run_bench(rw), false);
  write_bench_csv(b, run_bench(rw), false);
  CHECK(a.str() == b.str());
  CHECK(a.str().find("time_ms") == std::string::npos);

  BenchConfig broken;
  broken.sizes = {50};
  broken.measure = ErrorMeasure::Area;
  broken.num_scales = 3;
  const auto rec = run_bench(broken);
  bool saw_failure = false;
  for (const auto& r : rec) saw_failure = saw_failure || !r.error.empty();
  CHECK(saw_failure);  // Douglas-Peucker refuses the area measure, others continue
}
