#ifndef PROGSIMP_VALIDATE_HPP
#define PROGSIMP_VALIDATE_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "progsimp/geometry.hpp"
#include "progsimp/progressive.hpp"

namespace progsimp {

struct ValidationReport {
  std::vector<std::string> problems;
  /// Cao-bound check only: edges whose error exceeds eps_k (allowed there).
  std::size_t edges_above_scale = 0;

  bool ok() const { return problems.empty(); }
  void merge(const ValidationReport& other);
};

/// Every scale starts at vertex 0, ends at n-1 and is strictly increasing;
/// each coarser scale is a subsequence of the finer one.
ValidationReport check_monotone(const ProgressiveSimplification& ps, std::size_t n);

/// Every edge of S_k has error <= eps_k against the original curve
/// (Fréchet uses the decision procedure directly).
ValidationReport check_validity(std::span<const Point> pts, ErrorMeasure m,
                                const ProgressiveSimplification& ps);

/// Every edge of S_k has Hausdorff error <= eps_1 + ... + eps_k.
ValidationReport check_cumulative_bound(std::span<const Point> pts,
                                        const ProgressiveSimplification& ps);

/// Monotonicity plus validity (or the cumulative bound when `cumulative`).
ValidationReport validate(std::span<const Point> pts, ErrorMeasure m,
                          const ProgressiveSimplification& ps, bool cumulative = false);

}  // namespace progsimp

#endif  // PROGSIMP_VALIDATE_HPP
