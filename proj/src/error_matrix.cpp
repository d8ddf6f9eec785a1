#include "progsimp/error_matrix.hpp"

#include <algorithm>
#include <memory>

#include "progsimp/annotated_hull.hpp"
#include "progsimp/parallel.hpp"

namespace progsimp {

ErrorMatrix::ErrorMatrix(std::size_t n) : n_(n), values_(n < 2 ? 0 : n * (n - 1) / 2, 0.0) {}

ErrorMatrix compute_all_errors_naive(std::span<const Point> pts, ErrorMeasure m, unsigned threads) {
  const std::size_t n = pts.size();
  if (n < 2) throw InputError("error matrix needs at least 2 vertices");
  ErrorMatrix em(n);
  parallel_for(n - 1, threads, [&](std::size_t i, unsigned) {
    auto row = em.row(i);
    for (std::size_t j = i + 1; j < n; ++j) row[j - i - 1] = shortcut_error(pts, {i, j}, m);
  });
  return em;
}

ErrorMatrix compute_all_errors_hull(std::span<const Point> pts, unsigned threads) {
  const std::size_t n = pts.size();
  if (n < 2) throw InputError("error matrix needs at least 2 vertices");
  ErrorMatrix em(n);
  const unsigned workers = resolve_threads(threads);
  std::vector<std::unique_ptr<AnnotatedHull>> hulls;
  for (unsigned w = 0; w < workers; ++w) hulls.push_back(std::make_unique<AnnotatedHull>(pts[0]));

  // Forward pass: hull of p_i..p_j anchored at p_i yields the candidates
  // above and below the segment and the one behind p_i.
  parallel_for(n - 1, workers, [&](std::size_t i, unsigned w) {
    AnnotatedHull& hull = *hulls[w];
    const Point a = pts[i];
    hull.reset(a);
    hull.insert(a, i);
    auto row = em.row(i);
    for (std::size_t j = i + 1; j < n; ++j) {
      const Point b = pts[j];
      hull.insert(b, j);
      double worst = 0.0;
      if (a == b) {
        worst = detail::segment_distance(hull.farthest_from_anchor().p, a, b);
      } else {
        const Point d = b - a;
        const Point normal{-d.y, d.x};
        const HullPoint above = hull.extreme_point(normal);
        const HullPoint below = hull.extreme_point(Point{-normal.x, -normal.y});
        worst = std::max(detail::segment_distance(above.p, a, b),
                         detail::segment_distance(below.p, a, b));
        if (auto behind = hull.farthest_in_region_L(b)) {
          worst = std::max(worst, detail::segment_distance(behind->p, a, b));
        }
      }
      row[j - i - 1] = worst;
    }
  });

  // Reverse pass: hull of p_j down to p_i anchored at p_j yields the
  // candidate beyond p_j.
  parallel_for(n - 1, workers, [&](std::size_t column, unsigned w) {
    const std::size_t j = column + 1;
    AnnotatedHull& hull = *hulls[w];
    const Point b = pts[j];
    hull.reset(b);
    hull.insert(b, j);
    for (std::size_t i = j; i-- > 0;) {
      const Point a = pts[i];
      hull.insert(a, i);
      if (auto beyond = hull.farthest_in_region_L(a)) {
        double& entry = em.at(i, j);
        entry = std::max(entry, detail::segment_distance(beyond->p, a, b));
      }
    }
  });
  return em;
}

}  // namespace progsimp
