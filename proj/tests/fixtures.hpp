#ifndef PROGSIMP_TESTS_FIXTURES_HPP
#define PROGSIMP_TESTS_FIXTURES_HPP

#include <cmath>
#include <vector>

#include "progsimp/geometry.hpp"

namespace fixture {

// Collinear, n = 4.
inline progsimp::Curve line() { return progsimp::Curve({{0, 0}, {1, 0}, {2, 0}, {3, 0}}); }
// Zigzag, n = 5.
inline progsimp::Curve zigzag() { return progsimp::Curve({{0, 0}, {1, 1}, {2, 0}, {3, 1}, {4, 0}}); }

inline std::vector<progsimp::Point> vec(const progsimp::Curve& c) {
  return {c.points().begin(), c.points().end()};
}

inline const double kTwoOverRootTen = 2.0 / std::sqrt(10.0);

}  // namespace fixture

#endif  // PROGSIMP_TESTS_FIXTURES_HPP
