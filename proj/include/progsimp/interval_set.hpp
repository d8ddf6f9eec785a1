#ifndef PROGSIMP_INTERVAL_SET_HPP
#define PROGSIMP_INTERVAL_SET_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "progsimp/error_matrix.hpp"
#include "progsimp/geometry.hpp"

namespace progsimp {

/// Inclusive vertex-index range [first, last] (0-based).
struct Interval {
  std::size_t first = 0;
  std::size_t last = 0;

  std::size_t length() const { return last - first + 1; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Accumulates increasing target indices of one row into maximal runs.
class RowBuilder {
 public:
  void add(std::size_t j) {
    if (!runs_.empty() && runs_.back().last + 1 == j) {
      runs_.back().last = j;
    } else {
      runs_.push_back({j, j});
    }
  }
  void add(Interval iv) {
    if (!runs_.empty() && runs_.back().last + 1 == iv.first) {
      runs_.back().last = iv.last;
    } else {
      runs_.push_back(iv);
    }
  }
  std::vector<Interval> take() { return std::move(runs_); }

 private:
  std::vector<Interval> runs_;
};

/// Compressed shortcut graph: for every vertex i the sorted, disjoint,
/// maximal intervals of j > i such that (i, j) is a valid shortcut.
/// Immutable after construction.
class ShortcutIntervalSet {
 public:
  ShortcutIntervalSet() = default;
  /// Validates the interval invariants; throws InputError when violated.
  ShortcutIntervalSet(std::size_t n, double eps, std::vector<std::vector<Interval>> rows);

  std::size_t size() const { return n_; }
  double epsilon() const { return eps_; }

  std::span<const Interval> intervals(std::size_t i) const {
    return {intervals_.data() + row_offsets_[i], row_offsets_[i + 1] - row_offsets_[i]};
  }

  std::size_t shortcut_count() const { return edge_offsets_.empty() ? 0 : edge_offsets_.back(); }
  std::size_t interval_count() const { return intervals_.size(); }

  /// Shortcuts are numbered row by row in increasing j; these give the
  /// number of shortcuts in rows before i, and the number of (i, j).
  std::size_t edge_offset(std::size_t i) const { return edge_offsets_[i]; }
  std::optional<std::size_t> edge_index(std::size_t i, std::size_t j) const;
  bool contains(std::size_t i, std::size_t j) const { return edge_index(i, j).has_value(); }

  /// True when every (i, i+1) is present.
  bool has_adjacent_edges() const;

  friend bool operator==(const ShortcutIntervalSet& a, const ShortcutIntervalSet& b) {
    return a.n_ == b.n_ && a.row_offsets_ == b.row_offsets_ && a.intervals_ == b.intervals_;
  }

 private:
  std::size_t n_ = 0;
  double eps_ = 0.0;
  std::vector<std::size_t> row_offsets_{0};
  std::vector<Interval> intervals_;
  std::vector<std::size_t> edge_offsets_{0};
};

/// Shortcut graph with explicit successor lists; used by test oracles and
/// the BFS baseline.
struct ExplicitShortcutGraph {
  std::size_t n = 0;
  double eps = 0.0;
  std::vector<std::vector<std::size_t>> successors;
};

struct IntervalStats {
  std::size_t shortcut_count = 0;
  std::size_t interval_count = 0;
  double density = 0.0;  // shortcut_count / (n(n-1)/2)
};

// When `members` is non-empty the graph is built over the sub-sequence of
// vertices members[0] < members[1] < ..., with indices in the returned set
// referring to positions in `members`; errors are still measured against the
// full point sequence.

/// Filters a precomputed error matrix: (i, j) is valid iff em(i, j) <= eps.
ShortcutIntervalSet build_graph_from_errors(const ErrorMatrix& em, double eps,
                                            std::span<const std::size_t> members = {});

/// Hausdorff shortcut graph in O(n^2) via the intersection of two wedge
/// sweeps (valid w.r.t. the ray from p_i through p_j, and w.r.t. the ray from
/// p_j through p_i), each produced directly as an interval set.
ShortcutIntervalSet build_graph_chan_chin(std::span<const Point> pts, double eps,
                                          std::span<const std::size_t> members = {});
inline ShortcutIntervalSet build_graph_chan_chin(const Curve& c, double eps) {
  return build_graph_chan_chin(c.points(), eps);
}

/// Per-vertex overlap of two interval sets over the same vertex count.
ShortcutIntervalSet intersect_interval_sets(const ShortcutIntervalSet& a,
                                            const ShortcutIntervalSet& b);

ExplicitShortcutGraph to_explicit(const ShortcutIntervalSet& s);
ShortcutIntervalSet compress(const ExplicitShortcutGraph& g);

IntervalStats stats(const ShortcutIntervalSet& s);

}  // namespace progsimp

#endif  // PROGSIMP_INTERVAL_SET_HPP
