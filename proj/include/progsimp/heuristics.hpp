#ifndef PROGSIMP_HEURISTICS_HPP
#define PROGSIMP_HEURISTICS_HPP

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "progsimp/graph_source.hpp"
#include "progsimp/progressive.hpp"
#include "progsimp/shortest_path.hpp"

namespace progsimp {

struct HeuristicOptions {
  RangeQueryOptions path;
};

/// Min-link simplification at the coarsest tolerance, then each edge refined
/// by a min-link path at the next finer tolerance.
ProgressiveSimplification greedy_top_down(const GraphSource& src, const ScaleSequence& scales,
                                          const HeuristicOptions& options = {});

/// Min-link simplification at the finest tolerance; each coarser scale is a
/// min-link path among the vertices kept by the previous one (errors are
/// still measured against the original curve).
ProgressiveSimplification greedy_bottom_up(const GraphSource& src, const ScaleSequence& scales,
                                           const HeuristicOptions& options = {});

/// Like greedy_bottom_up, but each scale simplifies the previous
/// simplification as a curve of its own. Errors against the original curve
/// are bounded only by the sum of the tolerances so far.
ProgressiveSimplification greedy_bottom_up_cao(const GraphSource& src, const ScaleSequence& scales,
                                               const HeuristicOptions& options = {},
                                               unsigned threads = 1);

/// Douglas-Peucker on vertices first..last of `pts`: split at the vertex
/// farthest from the current segment (ties to the smaller index) until every
/// piece is within eps. Returns indices into `pts`.
std::vector<std::size_t> douglas_peucker(std::span<const Point> pts, double eps,
                                         std::size_t first, std::size_t last);
std::vector<std::size_t> douglas_peucker(std::span<const Point> pts, double eps);
inline std::vector<std::size_t> douglas_peucker(const Curve& c, double eps) {
  return douglas_peucker(c.points(), eps);
}

enum class Direction { TopDown, BottomUp };

/// Douglas-Peucker based progressive simplification (Hausdorff only).
/// TopDown refines coarse edges on the original curve; BottomUp simplifies
/// the previous scale's result.
ProgressiveSimplification dp_progressive(std::span<const Point> pts, const ScaleSequence& scales,
                                         Direction direction);

enum class Algorithm { Optimal, GreedyTopDown, GreedyBottomUp, GreedyBottomUpCao, DpTopDown, DpBottomUp };

std::string_view to_string(Algorithm a);
Algorithm parse_algorithm(std::string_view name);
std::vector<Algorithm> all_algorithms();

/// Runs one algorithm. Douglas-Peucker variants require the Hausdorff measure.
ProgressiveSimplification run_algorithm(Algorithm a, const GraphSource& src,
                                        const ScaleSequence& scales, unsigned threads = 1,
                                        const HeuristicOptions& options = {});

}  // namespace progsimp

#endif  // PROGSIMP_HEURISTICS_HPP
