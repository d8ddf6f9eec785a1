#include "progsimp/heuristics.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace progsimp {

namespace {

void check_scales(const ScaleSequence& scales) {
  if (scales.empty()) throw InputError("at least one tolerance is required");
}

std::vector<std::size_t> refine(const ShortcutIntervalSet& g, const std::vector<std::size_t>& coarse,
                                const RangeQueryOptions& opt) {
  std::vector<std::size_t> fine{coarse.front()};
  for (std::size_t e = 0; e + 1 < coarse.size(); ++e) {
    const auto piece = range_query_shortest_path(g, coarse[e], coarse[e + 1], opt).vertices;
    fine.insert(fine.end(), piece.begin() + 1, piece.end());
  }
  return fine;
}

ProgressiveSimplification empty_result(const ScaleSequence& scales) {
  ProgressiveSimplification ps;
  ps.eps.assign(scales.epsilons().begin(), scales.epsilons().end());
  ps.scales.resize(scales.size());
  return ps;
}

}  // namespace

ProgressiveSimplification greedy_top_down(const GraphSource& src, const ScaleSequence& scales,
                                          const HeuristicOptions& options) {
  check_scales(scales);
  const std::size_t n = src.points().size();
  auto ps = empty_result(scales);
  const std::size_t m = scales.size();
  ps.scales[m - 1] =
      range_query_shortest_path(src.build(scales[m - 1]), 0, n - 1, options.path).vertices;
  for (std::size_t k = m - 1; k-- > 0;) {
    ps.scales[k] = refine(src.build(scales[k]), ps.scales[k + 1], options.path);
  }
  return ps;
}

ProgressiveSimplification greedy_bottom_up(const GraphSource& src, const ScaleSequence& scales,
                                           const HeuristicOptions& options) {
  check_scales(scales);
  const std::size_t n = src.points().size();
  auto ps = empty_result(scales);
  std::vector<std::size_t> members(n);
  for (std::size_t v = 0; v < n; ++v) members[v] = v;
  for (std::size_t k = 0; k < scales.size(); ++k) {
    const auto g = src.build(scales[k], members);
    const auto path = range_query_shortest_path(g, 0, members.size() - 1, options.path).vertices;
    std::vector<std::size_t> kept;
    kept.reserve(path.size());
    for (std::size_t a : path) kept.push_back(members[a]);
    ps.scales[k] = kept;
    members = std::move(kept);
  }
  return ps;
}

ProgressiveSimplification greedy_bottom_up_cao(const GraphSource& src, const ScaleSequence& scales,
                                               const HeuristicOptions& options, unsigned threads) {
  check_scales(scales);
  const auto pts = src.points();
  const std::size_t n = pts.size();
  auto ps = empty_result(scales);
  std::vector<std::size_t> members(n);
  for (std::size_t v = 0; v < n; ++v) members[v] = v;
  for (std::size_t k = 0; k < scales.size(); ++k) {
    std::vector<Point> sub;
    sub.reserve(members.size());
    for (std::size_t v : members) sub.push_back(pts[v]);
    std::vector<std::size_t> path;
    if (k == 0) {
      path = range_query_shortest_path(src.build(scales[0]), 0, n - 1, options.path).vertices;
    } else {
      const auto local = GraphSource::make(sub, src.measure(), src.strategy(), threads);
      path = range_query_shortest_path(local.build(scales[k]), 0, sub.size() - 1, options.path)
                 .vertices;
    }
    std::vector<std::size_t> kept;
    kept.reserve(path.size());
    for (std::size_t a : path) kept.push_back(members[a]);
    ps.scales[k] = kept;
    members = std::move(kept);
  }
  return ps;
}

std::vector<std::size_t> douglas_peucker(std::span<const Point> pts, double eps, std::size_t first,
                                         std::size_t last) {
  if (!(eps >= 0.0)) throw InputError("epsilon must be >= 0");
  if (first >= last || last >= pts.size()) throw InputError("invalid subcurve range");
  std::vector<bool> keep(last - first + 1, false);
  keep.front() = keep.back() = true;
  std::vector<std::pair<std::size_t, std::size_t>> stack{{first, last}};
  while (!stack.empty()) {
    const auto [a, b] = stack.back();
    stack.pop_back();
    std::size_t split = a;
    double worst = -1.0;
    for (std::size_t k = a + 1; k < b; ++k) {
      const double d = detail::segment_distance(pts[k], pts[a], pts[b]);
      if (d > worst) {
        worst = d;
        split = k;
      }
    }
    if (split == a || worst <= eps) continue;
    keep[split - first] = true;
    stack.push_back({split, b});
    stack.push_back({a, split});
  }
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < keep.size(); ++k) {
    if (keep[k]) out.push_back(first + k);
  }
  return out;
}

std::vector<std::size_t> douglas_peucker(std::span<const Point> pts, double eps) {
  if (pts.size() < 2) throw InputError("a curve needs at least 2 vertices");
  return douglas_peucker(pts, eps, 0, pts.size() - 1);
}

ProgressiveSimplification dp_progressive(std::span<const Point> pts, const ScaleSequence& scales,
                                         Direction direction) {
  check_scales(scales);
  auto ps = empty_result(scales);
  const std::size_t m = scales.size();
  if (direction == Direction::TopDown) {
    ps.scales[m - 1] = douglas_peucker(pts, scales[m - 1]);
    for (std::size_t k = m - 1; k-- > 0;) {
      const auto& coarse = ps.scales[k + 1];
      std::vector<std::size_t> fine{coarse.front()};
      for (std::size_t e = 0; e + 1 < coarse.size(); ++e) {
        const auto piece = douglas_peucker(pts, scales[k], coarse[e], coarse[e + 1]);
        fine.insert(fine.end(), piece.begin() + 1, piece.end());
      }
      ps.scales[k] = std::move(fine);
    }
    return ps;
  }
  ps.scales[0] = douglas_peucker(pts, scales[0]);
  for (std::size_t k = 1; k < m; ++k) {
    const auto& prev = ps.scales[k - 1];
    std::vector<Point> sub;
    sub.reserve(prev.size());
    for (std::size_t v : prev) sub.push_back(pts[v]);
    std::vector<std::size_t> kept;
    for (std::size_t a : douglas_peucker(sub, scales[k])) kept.push_back(prev[a]);
    ps.scales[k] = std::move(kept);
  }
  return ps;
}

std::string_view to_string(Algorithm a) {
  switch (a) {
    case Algorithm::Optimal: return "optimal";
    case Algorithm::GreedyTopDown: return "greedy-td";
    case Algorithm::GreedyBottomUp: return "greedy-bu";
    case Algorithm::GreedyBottomUpCao: return "greedy-bu-cao";
    case Algorithm::DpTopDown: return "dp-td";
    case Algorithm::DpBottomUp: return "dp-bu";
  }
  return "unknown";
}

std::vector<Algorithm> all_algorithms() {
  return {Algorithm::Optimal,           Algorithm::GreedyTopDown, Algorithm::GreedyBottomUp,
          Algorithm::GreedyBottomUpCao, Algorithm::DpTopDown,     Algorithm::DpBottomUp};
}

Algorithm parse_algorithm(std::string_view name) {
  for (Algorithm a : all_algorithms()) {
    if (to_string(a) == name) return a;
  }
  throw InputError("unknown algorithm '" + std::string(name) +
                   "' (expected optimal, greedy-td, greedy-bu, greedy-bu-cao, dp-td or dp-bu)");
}

ProgressiveSimplification run_algorithm(Algorithm a, const GraphSource& src,
                                        const ScaleSequence& scales, unsigned threads,
                                        const HeuristicOptions& options) {
  switch (a) {
    case Algorithm::Optimal:
      return min_progressive(src, scales, SolveOptions{threads}).simplification;
    case Algorithm::GreedyTopDown:
      return greedy_top_down(src, scales, options);
    case Algorithm::GreedyBottomUp:
      return greedy_bottom_up(src, scales, options);
    case Algorithm::GreedyBottomUpCao:
      return greedy_bottom_up_cao(src, scales, options, threads);
    case Algorithm::DpTopDown:
    case Algorithm::DpBottomUp:
      if (src.measure() != ErrorMeasure::Hausdorff) {
        throw InputError("Douglas-Peucker variants support the Hausdorff measure only");
      }
      return dp_progressive(src.points(), scales,
                            a == Algorithm::DpTopDown ? Direction::TopDown : Direction::BottomUp);
  }
  throw InternalError("unknown algorithm");
}

}  // namespace progsimp
