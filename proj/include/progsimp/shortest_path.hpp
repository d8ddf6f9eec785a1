#ifndef PROGSIMP_SHORTEST_PATH_HPP
#define PROGSIMP_SHORTEST_PATH_HPP

#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "progsimp/interval_set.hpp"

namespace progsimp {

inline constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

/// A path through a shortcut graph: strictly increasing vertex indices.
struct PathResult {
  std::vector<std::size_t> vertices;
  double cost = 0.0;

  std::size_t hops() const { return vertices.empty() ? 0 : vertices.size() - 1; }
};

/// Minimum-link path by breadth-first search; among shortest paths the
/// lexicographically smallest vertex sequence is returned.
PathResult bfs_min_links(const ExplicitShortcutGraph& g, std::size_t s, std::size_t t);

/// Single-source distances restricted to vertices source..limit.
struct ShortestPathTree {
  std::size_t source = 0;
  std::vector<double> dist;        // indexed by v - source; +inf if unreached
  std::vector<std::size_t> pred;   // indexed by v - source; npos for source/unreached

  double distance(std::size_t v) const {
    return v < source || v - source >= dist.size() ? std::numeric_limits<double>::infinity()
                                                   : dist[v - source];
  }
  PathResult path_to(std::size_t target) const;
};

/// Dijkstra over the shortcut DAG. `weights` holds one non-negative cost per
/// shortcut in the set's edge numbering. Among equal-cost predecessors the
/// smallest index wins. Vertices beyond `limit` are ignored.
ShortestPathTree dijkstra_min_cost(const ShortcutIntervalSet& s, std::span<const double> weights,
                                   std::size_t source, std::size_t limit = npos);

std::vector<double> unit_weights(const ShortcutIntervalSet& s);

/// Minimum-cost source->target path with lexicographically smallest vertex
/// sequence among equal-cost paths (reverse relaxation in index order).
PathResult min_cost_path(const ShortcutIntervalSet& s, std::span<const double> weights,
                         std::size_t source, std::size_t target);

struct RangeQueryOptions {
  /// Intervals with y - x < cutoff * log2(n) are scanned directly instead of
  /// range-queried. 0 disables the scan; +inf always scans.
  double cutoff = 4.0;
  /// Re-verify every subtree annotation after each insertion (slow).
  bool check_annotations = false;
};

/// Minimum-link path computed on the compressed graph: vertices are inserted
/// from target down to source into a balanced search tree whose subtrees are
/// annotated with their best next hop; each interval of a vertex becomes one
/// range query. Tie-breaking matches bfs_min_links.
PathResult range_query_shortest_path(const ShortcutIntervalSet& s, std::size_t source,
                                     std::size_t target, const RangeQueryOptions& options = {});

}  // namespace progsimp

#endif  // PROGSIMP_SHORTEST_PATH_HPP
