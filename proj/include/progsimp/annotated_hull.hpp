#ifndef PROGSIMP_ANNOTATED_HULL_HPP
#define PROGSIMP_ANNOTATED_HULL_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "progsimp/geometry.hpp"

namespace progsimp {

/// A hull vertex together with its position in the source curve.
struct HullPoint {
  Point p;
  std::size_t index = 0;

  friend bool operator==(const HullPoint&, const HullPoint&) = default;
};

namespace detail {

/// One x-monotone convex chain (upper when sign = +1, lower when sign = -1)
/// stored in a treap keyed by x. Every node knows its chain neighbours and
/// carries the subtree's leftmost/rightmost node and the subtree point
/// farthest from the anchor.
class HullChain {
 public:
  explicit HullChain(int sign) : sign_(sign) {}

  void reset(Point anchor);
  /// Returns true when p became a chain vertex.
  bool insert(Point p, std::size_t index);

  bool empty() const { return root_ < 0; }
  std::size_t size() const { return size_; }
  std::vector<HullPoint> points() const;

  /// Chain vertex maximising dot(dir, q); ties go to the smaller curve index.
  std::optional<HullPoint> extreme(Point dir) const;
  /// Chain vertex farthest from the anchor.
  std::optional<HullPoint> farthest() const;
  /// Farthest-from-anchor vertex among those with dot(q - anchor, u) < 0.
  std::optional<HullPoint> farthest_behind(Point u) const;

  bool check(std::vector<std::size_t>* inorder = nullptr) const;

 private:
  struct Node {
    Point p;
    std::size_t index = 0;
    double d2 = 0.0;  // squared distance to the anchor
    std::uint64_t priority = 0;
    int left = -1;
    int right = -1;
    int prev = -1;
    int next = -1;
    int lo = -1;   // leftmost node of the subtree
    int hi = -1;   // rightmost node of the subtree
    int far = -1;  // farthest-from-anchor node of the subtree
  };

  int make_node(Point p, std::size_t index);
  void pull(int v);
  int farther(int a, int b) const;
  void split(int t, double x, int& less, int& rest);
  int merge(int a, int b);
  int remove_min(int t);
  int remove_max(int t);
  int extreme_node(Point dir) const;

  struct BehindQuery {
    Point u;
    double top_value;
    double bottom_value;
    double top_x;
    double bottom_x;
    int best;
  };
  double behind_value(int v, Point u) const { return dot(nodes_[v].p - anchor_, u); }
  void visit_behind(int v, BehindQuery& q) const;

  int sign_;
  Point anchor_;
  std::vector<Node> nodes_;
  int root_ = -1;
  std::size_t size_ = 0;
  std::uint64_t rng_state_ = 0;
};

}  // namespace detail

/// Incremental convex hull of a growing point set, split into upper and lower
/// chains, each annotated with farthest-from-anchor subtree maxima. Insertion
/// is amortized O(log n): every point is evicted at most once.
class AnnotatedHull {
 public:
  explicit AnnotatedHull(Point anchor) { reset(anchor); }

  /// Empties the hull and sets a new anchor.
  void reset(Point anchor);
  void insert(Point p, std::size_t index);

  Point anchor() const { return anchor_; }
  bool empty() const { return upper_.empty(); }

  std::vector<HullPoint> upper_chain() const { return upper_.points(); }
  std::vector<HullPoint> lower_chain() const { return lower_.points(); }

  /// Hull vertex maximising dot(dir, q); ties go to the smaller curve index.
  HullPoint extreme_point(Point dir) const;

  /// Hull vertex farthest from the anchor.
  HullPoint farthest_from_anchor() const;

  /// Among hull vertices lying strictly behind the anchor as seen from
  /// `toward` (dot(q - anchor, toward - anchor) < 0), the one farthest from
  /// the anchor. Empty when no vertex lies there.
  std::optional<HullPoint> farthest_in_region_L(Point toward) const;

  /// Structural test hook: tree order, heap order, chain links, strict
  /// convexity and every subtree annotation.
  bool check_invariants() const { return upper_.check() && lower_.check(); }

 private:
  Point anchor_;
  detail::HullChain upper_{+1};
  detail::HullChain lower_{-1};
};

}  // namespace progsimp

#endif  // PROGSIMP_ANNOTATED_HULL_HPP
