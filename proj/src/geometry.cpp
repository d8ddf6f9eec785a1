#include "progsimp/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace progsimp {

namespace {

bool finite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }

void check_shortcut(std::span<const Point> pts, Shortcut s) {
  if (s.i >= s.j || s.j >= pts.size()) {
    throw InputError("invalid shortcut (" + std::to_string(s.i + 1) + "," +
                     std::to_string(s.j + 1) + ") for curve of " +
                     std::to_string(pts.size()) + " vertices");
  }
}

// Parameter range t in [0,1] for which |a + t(b-a) - p| <= eps. Returns false
// if the range is empty.
bool free_interval(Point p, Point a, Point b, double eps, double& lo, double& hi) {
  const Point d = b - a;
  const double len2 = dot(d, d);
  if (len2 == 0.0) {
    if (squared_distance(p, a) > eps * eps) return false;
    lo = 0.0;
    hi = 1.0;
    return true;
  }
  const Point ap = p - a;
  const double t = dot(ap, d) / len2;
  const double c = cross(d, ap);
  const double h2 = c * c / len2;
  const double slack = eps * eps - h2;
  if (slack < 0.0) return false;
  const double w = std::sqrt(slack / len2);
  lo = std::max(0.0, t - w);
  hi = std::min(1.0, t + w);
  return lo <= hi;
}

}  // namespace

double distance(Point a, Point b) { return std::hypot(a.x - b.x, a.y - b.y); }

Curve::Curve(std::vector<Point> points) : points_(std::move(points)) {
  if (points_.size() < 2) throw InputError("a curve needs at least 2 vertices");
  for (std::size_t k = 0; k < points_.size(); ++k) {
    if (!finite(points_[k])) {
      throw InputError("vertex " + std::to_string(k + 1) + " has a non-finite coordinate");
    }
    if (k > 0 && points_[k] == points_[k - 1]) {
      throw InputError("vertices " + std::to_string(k) + " and " + std::to_string(k + 1) +
                       " are identical");
    }
  }
}

Curve Curve::from_raw(std::span<const Point> raw, std::size_t* dropped) {
  std::vector<Point> kept;
  kept.reserve(raw.size());
  for (const Point& p : raw) {
    if (!kept.empty() && kept.back() == p) continue;
    kept.push_back(p);
  }
  if (dropped) *dropped = raw.size() - kept.size();
  if (kept.size() < 2) throw InputError("input has fewer than 2 distinct points");
  return Curve(std::move(kept));
}

std::string_view to_string(ErrorMeasure m) {
  switch (m) {
    case ErrorMeasure::Hausdorff:
      return "hausdorff";
    case ErrorMeasure::Frechet:
      return "frechet";
    case ErrorMeasure::Area:
      return "area";
  }
  return "?";
}

ErrorMeasure parse_measure(std::string_view name) {
  if (name == "hausdorff") return ErrorMeasure::Hausdorff;
  if (name == "frechet") return ErrorMeasure::Frechet;
  if (name == "area") return ErrorMeasure::Area;
  throw InputError("unknown error measure '" + std::string(name) + "'");
}

double detail::segment_distance(Point p, Point a, Point b) {
  const Point d = b - a;
  const double len2 = dot(d, d);
  const Point ap = p - a;
  if (len2 == 0.0) return std::hypot(ap.x, ap.y);
  const double t = dot(ap, d);
  if (t <= 0.0) return std::hypot(ap.x, ap.y);
  if (t >= len2) return distance(p, b);
  return std::abs(cross(d, ap)) / std::sqrt(len2);
}

double point_segment_distance(Point p, Point a, Point b) {
  if (!finite(p) || !finite(a) || !finite(b)) {
    throw InputError("point_segment_distance: non-finite coordinate");
  }
  return detail::segment_distance(p, a, b);
}

double hausdorff_error(std::span<const Point> pts, Shortcut s) {
  check_shortcut(pts, s);
  const Point a = pts[s.i];
  const Point b = pts[s.j];
  double worst = 0.0;
  for (std::size_t k = s.i + 1; k < s.j; ++k) {
    worst = std::max(worst, detail::segment_distance(pts[k], a, b));
  }
  return worst;
}

bool frechet_valid(std::span<const Point> pts, Shortcut s, double eps) {
  check_shortcut(pts, s);
  if (!(eps >= 0.0)) throw InputError("frechet_valid: eps must be >= 0");
  const Point a = pts[s.i];
  const Point b = pts[s.j];
  // One-row free-space diagram: the segment is matched monotonically against
  // the polyline, so each interior vertex must be matched at a segment
  // parameter no smaller than the previous one.
  double reach = 0.0;
  for (std::size_t k = s.i + 1; k < s.j; ++k) {
    double lo = 0.0;
    double hi = 0.0;
    if (!free_interval(pts[k], a, b, eps, lo, hi)) return false;
    reach = std::max(reach, lo);
    if (reach > hi) return false;
  }
  return true;
}

double frechet_error(std::span<const Point> pts, Shortcut s, double tolerance) {
  const double lower = hausdorff_error(pts, s);
  if (frechet_valid(pts, s, lower)) return lower;
  // Matching everything to the far endpoint pair is always feasible here.
  double upper = lower;
  for (std::size_t k = s.i; k <= s.j; ++k) {
    upper = std::max({upper, distance(pts[k], pts[s.i]), distance(pts[k], pts[s.j])});
  }
  double lo = lower;
  double hi = upper;
  while (hi - lo > tolerance) {
    const double mid = lo + (hi - lo) / 2;
    if (mid <= lo || mid >= hi) break;
    if (frechet_valid(pts, s, mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

double area_error(std::span<const Point> pts, Shortcut s) {
  check_shortcut(pts, s);
  const Point origin = pts[s.i];
  double twice = 0.0;
  for (std::size_t k = s.i + 1; k + 1 <= s.j; ++k) {
    twice += cross(pts[k] - origin, pts[k + 1] - origin);
  }
  return std::abs(twice) / 2.0;
}

double shortcut_error(std::span<const Point> pts, Shortcut s, ErrorMeasure m) {
  switch (m) {
    case ErrorMeasure::Hausdorff:
      return hausdorff_error(pts, s);
    case ErrorMeasure::Frechet:
      return frechet_error(pts, s);
    case ErrorMeasure::Area:
      return area_error(pts, s);
  }
  throw InternalError("unknown error measure");
}

}  // namespace progsimp
