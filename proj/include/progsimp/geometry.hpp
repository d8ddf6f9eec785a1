#ifndef PROGSIMP_GEOMETRY_HPP
#define PROGSIMP_GEOMETRY_HPP

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace progsimp {

/// Raised for malformed user input (bad files, invalid parameters).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an internal invariant does not hold.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
/// Orientation of c relative to the directed line a->b (positive: left turn).
inline double orient(Point a, Point b, Point c) { return cross(b - a, c - a); }
inline double squared_distance(Point a, Point b) { return dot(a - b, a - b); }
double distance(Point a, Point b);

/// A planar polyline with at least two vertices, finite coordinates and no
/// two identical consecutive vertices.
class Curve {
 public:
  explicit Curve(std::vector<Point> points);

  /// Builds a curve from raw input, collapsing runs of identical consecutive
  /// points. `dropped` receives the number of removed points.
  static Curve from_raw(std::span<const Point> raw, std::size_t* dropped = nullptr);

  std::size_t size() const { return points_.size(); }
  const Point& operator[](std::size_t i) const { return points_[i]; }
  std::span<const Point> points() const { return points_; }
  const Point& front() const { return points_.front(); }
  const Point& back() const { return points_.back(); }

 private:
  std::vector<Point> points_;
};

/// Ordered vertex pair (i, j), i < j; indices are 0-based.
struct Shortcut {
  std::size_t i = 0;
  std::size_t j = 0;

  friend bool operator==(const Shortcut&, const Shortcut&) = default;
};

enum class ErrorMeasure { Hausdorff, Frechet, Area };

std::string_view to_string(ErrorMeasure m);
ErrorMeasure parse_measure(std::string_view name);

/// Euclidean distance from p to the closed segment ab. A degenerate segment
/// (a == b) yields |p - a|. Throws InputError on non-finite coordinates.
double point_segment_distance(Point p, Point a, Point b);

namespace detail {
// Unchecked variant for inner loops; inputs were validated at ingestion.
double segment_distance(Point p, Point a, Point b);
}  // namespace detail

// The per-shortcut measures below accept any vertex sequence (not only a
// validated Curve) so that heuristics can evaluate shortcuts on reduced
// curves. They run in O(j - i).

/// Directed Hausdorff distance from the subcurve p_i..p_j to segment p_i p_j.
double hausdorff_error(std::span<const Point> pts, Shortcut s);

/// Fréchet decision: is the Fréchet distance between the segment p_i p_j and
/// the subcurve p_i..p_j at most eps?
bool frechet_valid(std::span<const Point> pts, Shortcut s, double eps);

/// Fréchet distance between segment and subcurve, located by bisection on
/// the decision procedure to absolute tolerance `tolerance`.
double frechet_error(std::span<const Point> pts, Shortcut s, double tolerance = 1e-9);

/// |signed area| of the closed polygon p_i..p_j,p_i.
double area_error(std::span<const Point> pts, Shortcut s);

double shortcut_error(std::span<const Point> pts, Shortcut s, ErrorMeasure m);

inline double hausdorff_error(const Curve& c, Shortcut s) { return hausdorff_error(c.points(), s); }
inline bool frechet_valid(const Curve& c, Shortcut s, double eps) {
  return frechet_valid(c.points(), s, eps);
}
inline double area_error(const Curve& c, Shortcut s) { return area_error(c.points(), s); }
inline double shortcut_error(const Curve& c, Shortcut s, ErrorMeasure m) {
  return shortcut_error(c.points(), s, m);
}

}  // namespace progsimp

#endif  // PROGSIMP_GEOMETRY_HPP
