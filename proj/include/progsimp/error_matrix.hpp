#ifndef PROGSIMP_ERROR_MATRIX_HPP
#define PROGSIMP_ERROR_MATRIX_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "progsimp/geometry.hpp"

namespace progsimp {

/// Upper-triangular table of shortcut errors eps(p_i, p_j), i < j, stored as
/// a flat row-major array of n(n-1)/2 doubles (about 1.6 GB at n = 20000).
class ErrorMatrix {
 public:
  ErrorMatrix() = default;
  explicit ErrorMatrix(std::size_t n);

  std::size_t size() const { return n_; }

  double operator()(std::size_t i, std::size_t j) const { return values_[index(i, j)]; }
  double& at(std::size_t i, std::size_t j) { return values_[index(i, j)]; }

  /// Entries (i, i+1) .. (i, n-1) of row i.
  std::span<const double> row(std::size_t i) const {
    return {values_.data() + row_offset(i), n_ - i - 1};
  }
  std::span<double> row(std::size_t i) { return {values_.data() + row_offset(i), n_ - i - 1}; }

  std::span<const double> values() const { return values_; }

  /// eps_M = eps(p_1, p_n), the error of the single-segment simplification.
  double max_useful_error() const { return n_ < 2 ? 0.0 : (*this)(0, n_ - 1); }

 private:
  std::size_t row_offset(std::size_t i) const { return i * (2 * n_ - i - 1) / 2; }
  std::size_t index(std::size_t i, std::size_t j) const { return row_offset(i) + (j - i - 1); }

  std::size_t n_ = 0;
  std::vector<double> values_;
};

/// O(n^3) reference: every entry evaluated independently.
ErrorMatrix compute_all_errors_naive(std::span<const Point> pts, ErrorMeasure m,
                                     unsigned threads = 1);
inline ErrorMatrix compute_all_errors_naive(const Curve& c, ErrorMeasure m, unsigned threads = 1) {
  return compute_all_errors_naive(c.points(), m, threads);
}

/// Hausdorff errors of all shortcuts in O(n^2 log n) using incrementally built
/// annotated convex hulls (one forward and one reverse pass per anchor).
ErrorMatrix compute_all_errors_hull(std::span<const Point> pts, unsigned threads = 1);
inline ErrorMatrix compute_all_errors_hull(const Curve& c, unsigned threads = 1) {
  return compute_all_errors_hull(c.points(), threads);
}

}  // namespace progsimp

#endif  // PROGSIMP_ERROR_MATRIX_HPP
