#include "progsimp/shortest_path.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <queue>
#include <string>

namespace progsimp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_endpoints(std::size_t n, std::size_t s, std::size_t t) {
  if (s > t || t >= n) {
    throw InputError("invalid path endpoints " + std::to_string(s + 1) + " -> " +
                     std::to_string(t + 1));
  }
}

[[noreturn]] void unreachable(std::size_t s, std::size_t t) {
  throw InputError("vertex " + std::to_string(t + 1) + " is unreachable from " +
                   std::to_string(s + 1));
}

}  // namespace

PathResult bfs_min_links(const ExplicitShortcutGraph& g, std::size_t s, std::size_t t) {
  check_endpoints(g.n, s, t);
  const std::size_t width = t - s + 1;
  std::vector<std::vector<std::size_t>> reverse(width);
  for (std::size_t v = s; v < t; ++v) {
    for (std::size_t w : g.successors[v]) {
      if (w > t) break;
      reverse[w - s].push_back(v);
    }
  }
  // Hop distance to t, by BFS over reversed edges.
  std::vector<std::size_t> hops(width, npos);
  std::deque<std::size_t> queue{t};
  hops[t - s] = 0;
  while (!queue.empty()) {
    const std::size_t w = queue.front();
    queue.pop_front();
    for (std::size_t v : reverse[w - s]) {
      if (hops[v - s] == npos) {
        hops[v - s] = hops[w - s] + 1;
        queue.push_back(v);
      }
    }
  }
  if (hops[0] == npos) unreachable(s, t);

  PathResult out;
  out.vertices.push_back(s);
  for (std::size_t v = s; v != t;) {
    for (std::size_t w : g.successors[v]) {
      if (w <= t && hops[w - s] + 1 == hops[v - s]) {
        v = w;
        break;
      }
    }
    out.vertices.push_back(v);
  }
  out.cost = static_cast<double>(out.hops());
  return out;
}

PathResult ShortestPathTree::path_to(std::size_t target) const {
  const double d = distance(target);
  if (d == kInf) unreachable(source, target);
  PathResult out;
  out.cost = d;
  for (std::size_t v = target; v != npos; v = pred[v - source]) out.vertices.push_back(v);
  std::reverse(out.vertices.begin(), out.vertices.end());
  return out;
}

ShortestPathTree dijkstra_min_cost(const ShortcutIntervalSet& s, std::span<const double> weights,
                                   std::size_t source, std::size_t limit) {
  const std::size_t n = s.size();
  if (weights.size() != s.shortcut_count()) {
    throw InternalError("dijkstra_min_cost: expected one weight per shortcut");
  }
  if (source >= n) throw InputError("dijkstra_min_cost: source out of range");
  limit = std::min(limit, n - 1);
  ShortestPathTree tree;
  tree.source = source;
  const std::size_t width = limit >= source ? limit - source + 1 : 1;
  tree.dist.assign(width, kInf);
  tree.pred.assign(width, npos);
  std::vector<bool> settled(width, false);

  using Entry = std::pair<double, std::size_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  tree.dist[0] = 0.0;
  heap.push({0.0, source});
  while (!heap.empty()) {
    const auto [d, v] = heap.top();
    heap.pop();
    if (settled[v - source]) continue;
    settled[v - source] = true;
    std::size_t e = s.edge_offset(v);
    for (const Interval& iv : s.intervals(v)) {
      if (iv.first > limit) break;
      const std::size_t last = std::min(iv.last, limit);
      for (std::size_t w = iv.first; w <= last; ++w, ++e) {
        const double c = weights[e];
        if (c < 0.0) throw InputError("dijkstra_min_cost: negative weight");
        const double nd = d + c;
        double& dw = tree.dist[w - source];
        std::size_t& pw = tree.pred[w - source];
        if (nd < dw) {
          dw = nd;
          pw = v;
          heap.push({nd, w});
        } else if (nd == dw && v < pw) {
          pw = v;
        }
      }
      e += iv.last - last;
    }
  }
  return tree;
}

std::vector<double> unit_weights(const ShortcutIntervalSet& s) {
  return std::vector<double>(s.shortcut_count(), 1.0);
}

PathResult min_cost_path(const ShortcutIntervalSet& s, std::span<const double> weights,
                         std::size_t source, std::size_t target) {
  check_endpoints(s.size(), source, target);
  if (weights.size() != s.shortcut_count()) {
    throw InternalError("min_cost_path: expected one weight per shortcut");
  }
  const std::size_t width = target - source + 1;
  std::vector<double> to_target(width, kInf);
  to_target[width - 1] = 0.0;
  for (std::size_t v = target; v-- > source;) {
    double best = kInf;
    std::size_t e = s.edge_offset(v);
    for (const Interval& iv : s.intervals(v)) {
      if (iv.first > target) break;
      const std::size_t last = std::min(iv.last, target);
      for (std::size_t w = iv.first; w <= last; ++w, ++e) {
        best = std::min(best, weights[e] + to_target[w - source]);
      }
      e += iv.last - last;
    }
    to_target[v - source] = best;
  }
  if (to_target[0] == kInf) unreachable(source, target);

  PathResult out;
  out.cost = to_target[0];
  out.vertices.push_back(source);
  for (std::size_t v = source; v != target;) {
    std::size_t next = npos;
    std::size_t e = s.edge_offset(v);
    for (const Interval& iv : s.intervals(v)) {
      for (std::size_t w = iv.first; w <= iv.last && w <= target; ++w, ++e) {
        if (weights[e] + to_target[w - source] == to_target[v - source]) {
          next = w;
          break;
        }
      }
      if (next != npos) break;
    }
    if (next == npos) throw InternalError("min_cost_path: broken distance labels");
    v = next;
    out.vertices.push_back(v);
  }
  return out;
}

namespace {

// Balanced search tree over the fixed key range [lo, hi]: the node for a
// range is its midpoint, so every vertex is exactly one node. Nodes become
// active as they are inserted.
class AnnotatedPathTree {
 public:
  struct Best {
    std::size_t length = npos;
    std::size_t vertex = npos;
    bool operator<(const Best& o) const {
      return length != o.length ? length < o.length : vertex < o.vertex;
    }
  };

  AnnotatedPathTree(std::size_t lo, std::size_t hi)
      : lo_(lo), hi_(hi), own_(hi - lo + 1), subtree_(hi - lo + 1) {}

  /// Node annotation: path length from v and its next hop.
  void insert(std::size_t v, std::size_t length, std::size_t next) {
    own_[v - lo_] = {length, v};
    next_hop_.resize(own_.size(), npos);
    next_hop_[v - lo_] = next;
    update(lo_, hi_, v);
  }

  Best node(std::size_t v) const { return own_[v - lo_]; }
  std::size_t next_hop(std::size_t v) const { return next_hop_[v - lo_]; }

  Best query(std::size_t x, std::size_t y) const { return query(lo_, hi_, x, y); }

  bool annotations_consistent() const { return recheck(lo_, hi_).second; }

 private:
  static std::size_t mid(std::size_t lo, std::size_t hi) { return lo + (hi - lo) / 2; }

  Best subtree(std::size_t lo, std::size_t hi) const {
    return lo > hi || hi == npos ? Best{} : subtree_[mid(lo, hi) - lo_];
  }

  void update(std::size_t lo, std::size_t hi, std::size_t v) {
    const std::size_t m = mid(lo, hi);
    if (v < m) {
      update(lo, m - 1, v);
    } else if (v > m) {
      update(m + 1, hi, v);
    }
    Best b = own_[m - lo_];
    if (m > lo) b = std::min(b, subtree(lo, m - 1));
    if (m < hi) b = std::min(b, subtree(m + 1, hi));
    subtree_[m - lo_] = b;
  }

  Best query(std::size_t lo, std::size_t hi, std::size_t x, std::size_t y) const {
    if (lo > hi || hi < x || lo > y) return {};
    const std::size_t m = mid(lo, hi);
    if (x <= lo && hi <= y) return subtree_[m - lo_];
    Best b;
    if (x <= m && m <= y) b = own_[m - lo_];
    if (m > lo) b = std::min(b, query(lo, m - 1, x, y));
    if (m < hi) b = std::min(b, query(m + 1, hi, x, y));
    return b;
  }

  std::pair<Best, bool> recheck(std::size_t lo, std::size_t hi) const {
    if (lo > hi) return {Best{}, true};
    const std::size_t m = mid(lo, hi);
    Best b = own_[m - lo_];
    bool ok = true;
    if (m > lo) {
      auto [l, lok] = recheck(lo, m - 1);
      b = std::min(b, l);
      ok = ok && lok;
    }
    if (m < hi) {
      auto [r, rok] = recheck(m + 1, hi);
      b = std::min(b, r);
      ok = ok && rok;
    }
    const Best stored = subtree_[m - lo_];
    ok = ok && stored.length == b.length && stored.vertex == b.vertex;
    return {b, ok};
  }

  std::size_t lo_;
  std::size_t hi_;
  std::vector<Best> own_;
  std::vector<Best> subtree_;
  std::vector<std::size_t> next_hop_;
};

}  // namespace

PathResult range_query_shortest_path(const ShortcutIntervalSet& s, std::size_t source,
                                     std::size_t target, const RangeQueryOptions& options) {
  check_endpoints(s.size(), source, target);
  const double threshold = options.cutoff * std::log2(static_cast<double>(std::max<std::size_t>(s.size(), 2)));
  AnnotatedPathTree tree(source, target);
  tree.insert(target, 0, npos);
  for (std::size_t v = target; v-- > source;) {
    AnnotatedPathTree::Best best;
    for (const Interval& iv : s.intervals(v)) {
      if (iv.first > target) break;
      const std::size_t x = iv.first;
      const std::size_t y = std::min(iv.last, target);
      // Every vertex in (v, target] is already in the tree.
      if (static_cast<double>(y - x) < threshold) {
        for (std::size_t w = x; w <= y; ++w) best = std::min(best, tree.node(w));
      } else {
        best = std::min(best, tree.query(x, y));
      }
    }
    if (best.length == npos) {
      tree.insert(v, npos, npos);
    } else {
      tree.insert(v, best.length + 1, best.vertex);
    }
    if (options.check_annotations && !tree.annotations_consistent()) {
      throw InternalError("range_query_shortest_path: inconsistent subtree annotation");
    }
  }
  if (tree.node(source).length == npos) unreachable(source, target);

  PathResult out;
  for (std::size_t v = source; v != npos; v = tree.next_hop(v)) out.vertices.push_back(v);
  out.cost = static_cast<double>(out.hops());
  return out;
}

}  // namespace progsimp
