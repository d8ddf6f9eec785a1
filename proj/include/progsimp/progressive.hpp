#ifndef PROGSIMP_PROGRESSIVE_HPP
#define PROGSIMP_PROGRESSIVE_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "progsimp/geometry.hpp"
#include "progsimp/graph_source.hpp"
#include "progsimp/interval_set.hpp"

namespace progsimp {

/// Strictly increasing tolerances eps_1 < ... < eps_m with optional
/// non-negative weights (all ones when omitted).
class ScaleSequence {
 public:
  ScaleSequence() = default;
  explicit ScaleSequence(std::vector<double> eps, std::vector<double> weights = {});

  std::size_t size() const { return eps_.size(); }
  bool empty() const { return eps_.empty(); }
  double operator[](std::size_t k) const { return eps_[k]; }
  std::span<const double> epsilons() const { return eps_; }
  std::span<const double> weights() const { return weights_; }
  double weight(std::size_t k) const { return weights_[k]; }
  bool unit_weights() const;

 private:
  std::vector<double> eps_;
  std::vector<double> weights_;
};

/// One vertex-index sequence per scale (0-based), finest scale first.
struct ProgressiveSimplification {
  std::vector<double> eps;
  std::vector<std::vector<std::size_t>> scales;

  std::size_t scale_count() const { return scales.size(); }
  std::vector<std::size_t> sizes() const;
  std::size_t cumulative_size() const;
  double weighted_size(std::span<const double> weights) const;

  friend bool operator==(const ProgressiveSimplification&,
                         const ProgressiveSimplification&) = default;
};

/// Costs of one scale: c^k for every shortcut of G(C, eps_k), aligned with
/// the interval set's edge numbering.
struct ScaleCosts {
  ShortcutIntervalSet graph;
  std::vector<double> cost;

  double at(std::size_t i, std::size_t j) const;
};

/// Per-scale cost tables of the dynamic program (only scales below eps_M).
struct CostTable {
  std::vector<ScaleCosts> scales;
};

struct SolveOptions {
  unsigned threads = 1;
};

struct ProgressiveResult {
  ProgressiveSimplification simplification;
  CostTable costs;
  /// Tolerances at or above eps_M; those scales are the single segment.
  std::vector<std::string> warnings;
};

/// Minimal progressive simplification (unit weights): minimizes the
/// cumulative size sum |S_k| over monotone chains of eps_k-simplifications.
/// Among optimal chains the one with lexicographically smallest paths is
/// returned, scale by scale from the coarsest.
ProgressiveResult min_progressive(const GraphSource& src, const ScaleSequence& scales,
                                  const SolveOptions& options = {});
ProgressiveResult min_progressive(const Curve& c, const ScaleSequence& scales,
                                  ErrorMeasure m = ErrorMeasure::Hausdorff,
                                  const SolveOptions& options = {});

/// Minimizes sum w_k |S_k| using the weights carried by `scales`.
ProgressiveResult min_progressive_weighted(const GraphSource& src, const ScaleSequence& scales,
                                           const SolveOptions& options = {});
ProgressiveResult min_progressive_weighted(const Curve& c, const ScaleSequence& scales,
                                           ErrorMeasure m = ErrorMeasure::Hausdorff,
                                           const SolveOptions& options = {});

/// Step function eps -> S_eps minimizing the integral of |S_eps| over
/// [0, eps_M). Breakpoint k covers [breakpoints[k], breakpoints[k+1]); the
/// last breakpoint is eps_M with the single segment.
struct ContinuousResult {
  std::vector<double> breakpoints;
  std::vector<std::vector<std::size_t>> simplifications;
  double integral = 0.0;
};

/// Requires an error-matrix graph source (breakpoints are its distinct values).
ContinuousResult min_progressive_continuous(const GraphSource& src,
                                            const SolveOptions& options = {});
ContinuousResult min_progressive_continuous(const Curve& c,
                                            ErrorMeasure m = ErrorMeasure::Hausdorff,
                                            const SolveOptions& options = {});

}  // namespace progsimp

#endif  // PROGSIMP_PROGRESSIVE_HPP
