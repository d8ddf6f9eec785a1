#ifndef PROGSIMP_BRUTE_FORCE_HPP
#define PROGSIMP_BRUTE_FORCE_HPP

#include <cstddef>
#include <span>

#include "progsimp/geometry.hpp"
#include "progsimp/progressive.hpp"

namespace progsimp {

inline constexpr std::size_t kBruteForceMaxVertices = 12;
inline constexpr std::size_t kBruteForceMaxScales = 64;

struct BruteForceResult {
  ProgressiveSimplification simplification;
  double objective = 0.0;  // sum of w_k |S_k|
};

/// Exhaustive reference solver: a dynamic program over all subsets of the
/// interior vertices at every scale, with errors evaluated naively. Refuses
/// inputs above kBruteForceMaxVertices vertices or kBruteForceMaxScales
/// scales.
BruteForceResult brute_force_min_progressive(std::span<const Point> pts, ErrorMeasure m,
                                             const ScaleSequence& scales);
inline BruteForceResult brute_force_min_progressive(const Curve& c, const ScaleSequence& scales,
                                                    ErrorMeasure m = ErrorMeasure::Hausdorff) {
  return brute_force_min_progressive(c.points(), m, scales);
}

}  // namespace progsimp

#endif  // PROGSIMP_BRUTE_FORCE_HPP
