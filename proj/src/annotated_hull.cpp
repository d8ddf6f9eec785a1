#include "progsimp/annotated_hull.hpp"

#include <algorithm>
#include <functional>

namespace progsimp {
namespace detail {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

void HullChain::reset(Point anchor) {
  anchor_ = anchor;
  nodes_.clear();
  root_ = -1;
  size_ = 0;
  rng_state_ = 0x5eedULL;
}

int HullChain::make_node(Point p, std::size_t index) {
  Node n;
  n.p = p;
  n.index = index;
  n.d2 = squared_distance(p, anchor_);
  n.priority = splitmix64(rng_state_);
  const int id = static_cast<int>(nodes_.size());
  n.lo = n.hi = n.far = id;
  nodes_.push_back(n);
  return id;
}

int HullChain::farther(int a, int b) const {
  if (a < 0) return b;
  if (b < 0) return a;
  const Node& na = nodes_[a];
  const Node& nb = nodes_[b];
  if (na.d2 != nb.d2) return na.d2 > nb.d2 ? a : b;
  return na.index <= nb.index ? a : b;
}

void HullChain::pull(int v) {
  Node& n = nodes_[v];
  n.lo = n.left >= 0 ? nodes_[n.left].lo : v;
  n.hi = n.right >= 0 ? nodes_[n.right].hi : v;
  int far = v;
  if (n.left >= 0) far = farther(far, nodes_[n.left].far);
  if (n.right >= 0) far = farther(far, nodes_[n.right].far);
  n.far = far;
}

void HullChain::split(int t, double x, int& less, int& rest) {
  if (t < 0) {
    less = rest = -1;
    return;
  }
  if (nodes_[t].p.x < x) {
    int l = -1;
    int r = -1;
    split(nodes_[t].right, x, l, r);
    nodes_[t].right = l;
    pull(t);
    less = t;
    rest = r;
  } else {
    int l = -1;
    int r = -1;
    split(nodes_[t].left, x, l, r);
    nodes_[t].left = r;
    pull(t);
    less = l;
    rest = t;
  }
}

int HullChain::merge(int a, int b) {
  if (a < 0) return b;
  if (b < 0) return a;
  if (nodes_[a].priority > nodes_[b].priority) {
    nodes_[a].right = merge(nodes_[a].right, b);
    pull(a);
    return a;
  }
  nodes_[b].left = merge(a, nodes_[b].left);
  pull(b);
  return b;
}

int HullChain::remove_min(int t) {
  if (nodes_[t].left < 0) return nodes_[t].right;
  nodes_[t].left = remove_min(nodes_[t].left);
  pull(t);
  return t;
}

int HullChain::remove_max(int t) {
  if (nodes_[t].right < 0) return nodes_[t].left;
  nodes_[t].right = remove_max(nodes_[t].right);
  pull(t);
  return t;
}

bool HullChain::insert(Point p, std::size_t index) {
  const double s = sign_;
  int left = -1;
  int right = -1;
  split(root_, p.x, left, right);

  if (right >= 0) {
    const int b = nodes_[right].lo;
    if (nodes_[b].p.x == p.x) {
      // Same abscissa: only the outermost of the two can be on this chain.
      if (s * nodes_[b].p.y >= s * p.y) {
        root_ = merge(left, right);
        return false;
      }
      const int after = nodes_[b].next;
      right = remove_min(right);
      --size_;
      if (after >= 0) nodes_[after].prev = -1;
    }
  }
  if (left >= 0 && right >= 0) {
    const Point a = nodes_[nodes_[left].hi].p;
    const Point b = nodes_[nodes_[right].lo].p;
    if (s * orient(a, b, p) <= 0.0) {
      root_ = merge(left, right);
      return false;
    }
  }

  // Evict vertices that stop being strictly convex on either side of p.
  while (left >= 0) {
    const int a2 = nodes_[left].hi;
    const int a1 = nodes_[a2].prev;
    if (a1 < 0 || s * orient(nodes_[a1].p, nodes_[a2].p, p) < 0.0) break;
    left = remove_max(left);
    --size_;
    nodes_[a1].next = -1;
  }
  while (right >= 0) {
    const int b1 = nodes_[right].lo;
    const int b2 = nodes_[b1].next;
    if (b2 < 0 || s * orient(p, nodes_[b1].p, nodes_[b2].p) < 0.0) break;
    right = remove_min(right);
    --size_;
    nodes_[b2].prev = -1;
  }

  const int v = make_node(p, index);
  if (left >= 0) {
    const int a = nodes_[left].hi;
    nodes_[a].next = v;
    nodes_[v].prev = a;
  }
  if (right >= 0) {
    const int b = nodes_[right].lo;
    nodes_[b].prev = v;
    nodes_[v].next = b;
  }
  root_ = merge(merge(left, v), right);
  ++size_;
  return true;
}

std::vector<HullPoint> HullChain::points() const {
  std::vector<HullPoint> out;
  if (root_ < 0) return out;
  out.reserve(size_);
  for (int v = nodes_[root_].lo; v >= 0; v = nodes_[v].next) {
    out.push_back({nodes_[v].p, nodes_[v].index});
  }
  return out;
}

int HullChain::extreme_node(Point dir) const {
  if (root_ < 0) return -1;
  // Along a convex chain dot(dir, q) rises then falls (or is monotone, or
  // falls then rises). Find the first vertex whose successor is no better,
  // then settle against the two chain ends.
  int best = -1;
  for (int v = root_; v >= 0;) {
    const int nx = nodes_[v].next;
    if (nx >= 0 && dot(dir, nodes_[nx].p) > dot(dir, nodes_[v].p)) {
      v = nodes_[v].right;
    } else {
      best = v;
      v = nodes_[v].left;
    }
  }
  int candidates[4] = {best, nodes_[best].next, nodes_[root_].lo, nodes_[root_].hi};
  int winner = -1;
  double winner_value = 0.0;
  for (int c : candidates) {
    if (c < 0) continue;
    const double value = dot(dir, nodes_[c].p);
    if (winner < 0 || value > winner_value ||
        (value == winner_value && nodes_[c].index < nodes_[winner].index)) {
      winner = c;
      winner_value = value;
    }
  }
  return winner;
}

std::optional<HullPoint> HullChain::extreme(Point dir) const {
  const int v = extreme_node(dir);
  if (v < 0) return std::nullopt;
  return HullPoint{nodes_[v].p, nodes_[v].index};
}

std::optional<HullPoint> HullChain::farthest() const {
  if (root_ < 0) return std::nullopt;
  const Node& n = nodes_[nodes_[root_].far];
  return HullPoint{n.p, n.index};
}

void HullChain::visit_behind(int v, BehindQuery& q) const {
  if (v < 0) return;
  const Node& n = nodes_[v];
  const double lo_x = nodes_[n.lo].p.x;
  const double hi_x = nodes_[n.hi].p.x;
  const double f_lo = behind_value(n.lo, q.u);
  const double f_hi = behind_value(n.hi, q.u);
  // The extremes of f over the run lo..hi are at its ends unless the chain's
  // global maximiser (or minimiser) of f lies inside the run. This covers the
  // configurations where both ends are behind the anchor but an interior
  // vertex is not, and vice versa.
  const double run_max =
      (q.top_x >= lo_x && q.top_x <= hi_x) ? q.top_value : std::max(f_lo, f_hi);
  if (run_max < 0.0) {
    q.best = farther(q.best, n.far);  // whole subtree is behind the anchor
    return;
  }
  const double run_min =
      (q.bottom_x >= lo_x && q.bottom_x <= hi_x) ? q.bottom_value : std::min(f_lo, f_hi);
  if (run_min >= 0.0) return;  // nothing behind the anchor here
  if (behind_value(v, q.u) < 0.0) q.best = farther(q.best, v);
  visit_behind(n.left, q);
  visit_behind(n.right, q);
}

std::optional<HullPoint> HullChain::farthest_behind(Point u) const {
  if (root_ < 0) return std::nullopt;
  const int top = extreme_node(u);
  const int bottom = extreme_node(Point{-u.x, -u.y});
  BehindQuery q{u, behind_value(top, u), behind_value(bottom, u), nodes_[top].p.x,
                nodes_[bottom].p.x, -1};
  visit_behind(root_, q);
  if (q.best < 0) return std::nullopt;
  return HullPoint{nodes_[q.best].p, nodes_[q.best].index};
}

bool HullChain::check(std::vector<std::size_t>* inorder) const {
  std::vector<int> order;
  bool ok = true;
  std::function<void(int, std::uint64_t)> walk = [&](int v, std::uint64_t parent_priority) {
    if (v < 0) return;
    const Node& n = nodes_[v];
    if (n.priority > parent_priority) ok = false;
    walk(n.left, n.priority);
    order.push_back(v);
    walk(n.right, n.priority);
  };
  walk(root_, ~std::uint64_t{0});
  if (order.size() != size_) return false;

  // Subtree annotations against a direct scan of each subtree.
  std::function<void(int, int&, int&, int&)> recheck = [&](int v, int& lo, int& hi, int& far) {
    const Node& n = nodes_[v];
    lo = hi = far = v;
    if (n.left >= 0) {
      int l_lo, l_hi, l_far;
      recheck(n.left, l_lo, l_hi, l_far);
      lo = l_lo;
      far = farther(far, l_far);
    }
    if (n.right >= 0) {
      int r_lo, r_hi, r_far;
      recheck(n.right, r_lo, r_hi, r_far);
      hi = r_hi;
      far = farther(far, r_far);
    }
    if (n.lo != lo || n.hi != hi || n.far != far) ok = false;
  };
  if (root_ >= 0) {
    int lo, hi, far;
    recheck(root_, lo, hi, far);
  }

  for (std::size_t k = 0; k < order.size(); ++k) {
    const Node& n = nodes_[order[k]];
    const int expected_prev = k > 0 ? order[k - 1] : -1;
    const int expected_next = k + 1 < order.size() ? order[k + 1] : -1;
    if (n.prev != expected_prev || n.next != expected_next) ok = false;
    if (k > 0 && !(nodes_[order[k - 1]].p.x < n.p.x)) ok = false;
    if (k > 0 && k + 1 < order.size() &&
        !(sign_ * orient(nodes_[order[k - 1]].p, n.p, nodes_[order[k + 1]].p) < 0.0)) {
      ok = false;
    }
  }
  if (inorder) {
    inorder->clear();
    for (int v : order) inorder->push_back(nodes_[v].index);
  }
  return ok;
}

}  // namespace detail

void AnnotatedHull::reset(Point anchor) {
  anchor_ = anchor;
  upper_.reset(anchor);
  lower_.reset(anchor);
}

void AnnotatedHull::insert(Point p, std::size_t index) {
  upper_.insert(p, index);
  lower_.insert(p, index);
}

namespace {

HullPoint pick(const std::optional<HullPoint>& a, const std::optional<HullPoint>& b,
               const std::function<double(const HullPoint&)>& score) {
  if (!a) return *b;
  if (!b) return *a;
  const double sa = score(*a);
  const double sb = score(*b);
  if (sa != sb) return sa > sb ? *a : *b;
  return a->index <= b->index ? *a : *b;
}

}  // namespace

HullPoint AnnotatedHull::extreme_point(Point dir) const {
  if (empty()) throw InputError("extreme_point on an empty hull");
  return pick(upper_.extreme(dir), lower_.extreme(dir),
              [&](const HullPoint& h) { return dot(dir, h.p); });
}

HullPoint AnnotatedHull::farthest_from_anchor() const {
  if (empty()) throw InputError("farthest_from_anchor on an empty hull");
  return pick(upper_.farthest(), lower_.farthest(),
              [&](const HullPoint& h) { return squared_distance(h.p, anchor_); });
}

std::optional<HullPoint> AnnotatedHull::farthest_in_region_L(Point toward) const {
  const Point u = toward - anchor_;
  if (empty() || (u.x == 0.0 && u.y == 0.0)) return std::nullopt;
  const auto a = upper_.farthest_behind(u);
  const auto b = lower_.farthest_behind(u);
  if (!a && !b) return std::nullopt;
  return pick(a, b, [&](const HullPoint& h) { return squared_distance(h.p, anchor_); });
}

}  // namespace progsimp
