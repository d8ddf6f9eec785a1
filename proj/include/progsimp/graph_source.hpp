#ifndef PROGSIMP_GRAPH_SOURCE_HPP
#define PROGSIMP_GRAPH_SOURCE_HPP

#include <memory>
#include <span>

#include "progsimp/error_matrix.hpp"
#include "progsimp/geometry.hpp"
#include "progsimp/interval_set.hpp"

namespace progsimp {

enum class GraphStrategy {
  ErrorMatrix,  // precompute all errors once, filter per tolerance
  ChanChin,     // Hausdorff only: wedge sweeps per tolerance
};

/// Produces shortcut interval sets G(C, eps) for one vertex sequence. The
/// point storage must outlive the source.
class GraphSource {
 public:
  /// ErrorMatrix strategy uses the hull construction for Hausdorff and the
  /// naive O(n^3) one otherwise.
  static GraphSource make(std::span<const Point> pts, ErrorMeasure m,
                          GraphStrategy strategy, unsigned threads = 1);
  static GraphSource with_errors(std::span<const Point> pts, ErrorMeasure m,
                                 std::shared_ptr<const ErrorMatrix> errors);

  ShortcutIntervalSet build(double eps, std::span<const std::size_t> members = {}) const;

  double error(std::size_t i, std::size_t j) const;
  /// eps(p_1, p_n).
  double max_useful_error() const { return error(0, pts_.size() - 1); }

  std::span<const Point> points() const { return pts_; }
  ErrorMeasure measure() const { return measure_; }
  GraphStrategy strategy() const { return strategy_; }
  const ErrorMatrix* errors() const { return errors_.get(); }

 private:
  GraphSource(std::span<const Point> pts, ErrorMeasure m, GraphStrategy s,
              std::shared_ptr<const ErrorMatrix> errors)
      : pts_(pts), measure_(m), strategy_(s), errors_(std::move(errors)) {}

  std::span<const Point> pts_;
  ErrorMeasure measure_;
  GraphStrategy strategy_;
  std::shared_ptr<const ErrorMatrix> errors_;
};

}  // namespace progsimp

#endif  // PROGSIMP_GRAPH_SOURCE_HPP
