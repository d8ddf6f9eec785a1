#include "progsimp/validate.hpp"

#include <algorithm>
#include <sstream>

namespace progsimp {

void ValidationReport::merge(const ValidationReport& other) {
  problems.insert(problems.end(), other.problems.begin(), other.problems.end());
  edges_above_scale += other.edges_above_scale;
}

namespace {

std::string edge_text(std::size_t k, std::size_t i, std::size_t j) {
  std::ostringstream s;
  s << "scale " << (k + 1) << ", edge (" << (i + 1) << "," << (j + 1) << ")";
  return s.str();
}

}  // namespace

ValidationReport check_monotone(const ProgressiveSimplification& ps, std::size_t n) {
  ValidationReport r;
  if (ps.eps.size() != ps.scales.size()) r.problems.push_back("tolerance count differs from scale count");
  for (std::size_t k = 0; k < ps.scales.size(); ++k) {
    const auto& s = ps.scales[k];
    const std::string where = "scale " + std::to_string(k + 1);
    if (s.size() < 2 || s.front() != 0 || s.back() + 1 != n) {
      r.problems.push_back(where + " does not run from the first to the last vertex");
      continue;
    }
    if (!std::is_sorted(s.begin(), s.end()) ||
        std::adjacent_find(s.begin(), s.end()) != s.end()) {
      r.problems.push_back(where + " is not strictly increasing");
    }
    if (k > 0 && !std::includes(ps.scales[k - 1].begin(), ps.scales[k - 1].end(), s.begin(), s.end())) {
      r.problems.push_back(where + " is not a subsequence of scale " + std::to_string(k));
    }
  }
  return r;
}

ValidationReport check_validity(std::span<const Point> pts, ErrorMeasure m,
                                const ProgressiveSimplification& ps) {
  ValidationReport r;
  for (std::size_t k = 0; k < ps.scales.size() && k < ps.eps.size(); ++k) {
    const auto& s = ps.scales[k];
    for (std::size_t e = 0; e + 1 < s.size(); ++e) {
      const Shortcut sc{s[e], s[e + 1]};
      if (sc.i >= sc.j || sc.j >= pts.size()) continue;  // reported by check_monotone
      const bool valid = m == ErrorMeasure::Frechet ? frechet_valid(pts, sc, ps.eps[k])
                                                    : shortcut_error(pts, sc, m) <= ps.eps[k];
      if (!valid) r.problems.push_back(edge_text(k, sc.i, sc.j) + " exceeds its tolerance");
    }
  }
  return r;
}

ValidationReport check_cumulative_bound(std::span<const Point> pts,
                                        const ProgressiveSimplification& ps) {
  ValidationReport r;
  double bound = 0.0;
  for (std::size_t k = 0; k < ps.scales.size() && k < ps.eps.size(); ++k) {
    bound += ps.eps[k];
    const auto& s = ps.scales[k];
    for (std::size_t e = 0; e + 1 < s.size(); ++e) {
      const Shortcut sc{s[e], s[e + 1]};
      if (sc.i >= sc.j || sc.j >= pts.size()) continue;
      const double err = hausdorff_error(pts, sc);
      if (err > ps.eps[k]) ++r.edges_above_scale;
      if (err > bound) {
        r.problems.push_back(edge_text(k, sc.i, sc.j) + " exceeds the cumulative tolerance bound");
      }
    }
  }
  return r;
}

ValidationReport validate(std::span<const Point> pts, ErrorMeasure m,
                          const ProgressiveSimplification& ps, bool cumulative) {
  ValidationReport r = check_monotone(ps, pts.size());
  r.merge(cumulative ? check_cumulative_bound(pts, ps) : check_validity(pts, m, ps));
  return r;
}

}  // namespace progsimp
