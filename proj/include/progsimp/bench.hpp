#ifndef PROGSIMP_BENCH_HPP
#define PROGSIMP_BENCH_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "progsimp/geometry.hpp"
#include "progsimp/heuristics.hpp"
#include "progsimp/scales.hpp"
#include "progsimp/synth.hpp"

namespace progsimp {

struct BenchConfig {
  /// Trajectory to benchmark; when empty a synthetic curve is generated.
  std::optional<Curve> input;
  SynthKind kind = SynthKind::RandomWalk;
  std::uint64_t seed = 42;
  /// Prefix lengths; each run uses the first n vertices.
  std::vector<std::size_t> sizes{100};
  std::size_t num_scales = 10;
  SamplingRule sampling = SamplingRule::SmallestDecile;
  std::vector<Algorithm> algorithms = all_algorithms();
  ErrorMeasure measure = ErrorMeasure::Hausdorff;
  unsigned threads = 1;
  HeuristicOptions heuristics;
};

struct BenchRecord {
  std::string algorithm;
  std::size_t n = 0;
  std::size_t m = 0;
  double time_ms = 0.0;
  std::size_t cumulative = 0;
  std::vector<std::size_t> sizes;
  std::size_t shortcut_count = 0;  // summed over the scales' full graphs
  std::size_t interval_count = 0;
  bool valid = false;              // monotone and within tolerance (cumulative bound for Cao)
  std::string error;               // non-empty when the run failed
};

/// Runs every configured algorithm on every prefix. A failing run is
/// recorded and the harness carries on.
std::vector<BenchRecord> run_bench(const BenchConfig& cfg);

/// CSV of records; per-scale sizes are joined with ';'. Timings can be
/// left out for reproducible output.
void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records,
                     bool include_time = true);

}  // namespace progsimp

#endif  // PROGSIMP_BENCH_HPP
