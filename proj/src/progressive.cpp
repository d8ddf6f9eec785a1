#include "progsimp/progressive.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "progsimp/parallel.hpp"
#include "progsimp/shortest_path.hpp"

namespace progsimp {

ScaleSequence::ScaleSequence(std::vector<double> eps, std::vector<double> weights)
    : eps_(std::move(eps)), weights_(std::move(weights)) {
  for (std::size_t k = 0; k < eps_.size(); ++k) {
    if (!std::isfinite(eps_[k]) || eps_[k] < 0.0) {
      throw InputError("tolerances must be finite and non-negative");
    }
    if (k > 0 && !(eps_[k - 1] < eps_[k])) {
      throw InputError("tolerances must be strictly increasing");
    }
  }
  if (weights_.empty()) weights_.assign(eps_.size(), 1.0);
  if (weights_.size() != eps_.size()) {
    throw InputError("expected one weight per tolerance");
  }
  for (double w : weights_) {
    if (!std::isfinite(w) || w < 0.0) throw InputError("weights must be finite and non-negative");
  }
}

bool ScaleSequence::unit_weights() const {
  return std::all_of(weights_.begin(), weights_.end(), [](double w) { return w == 1.0; });
}

std::vector<std::size_t> ProgressiveSimplification::sizes() const {
  std::vector<std::size_t> out;
  out.reserve(scales.size());
  for (const auto& s : scales) out.push_back(s.size());
  return out;
}

std::size_t ProgressiveSimplification::cumulative_size() const {
  std::size_t total = 0;
  for (const auto& s : scales) total += s.size();
  return total;
}

double ProgressiveSimplification::weighted_size(std::span<const double> weights) const {
  if (weights.size() != scales.size()) throw InputError("expected one weight per scale");
  double total = 0.0;
  for (std::size_t k = 0; k < scales.size(); ++k) {
    total += weights[k] * static_cast<double>(scales[k].size());
  }
  return total;
}

double ScaleCosts::at(std::size_t i, std::size_t j) const {
  const auto e = graph.edge_index(i, j);
  if (!e) throw InputError("shortcut is not valid at this scale");
  return cost[*e];
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Costs of scale k from those of scale k-1. Shortcuts already valid at the
// lower scale take the incremental rule; the others need a min-cost path in
// the lower graph, searched only up to the farthest new target of the row.
ScaleCosts next_scale_costs(const ScaleCosts& prev, ShortcutIntervalSet graph, double w,
                            unsigned threads) {
  ScaleCosts cur{std::move(graph), {}};
  cur.cost.assign(cur.graph.shortcut_count(), kInf);
  const std::size_t n = cur.graph.size();
  parallel_for(n, threads, [&](std::size_t i, unsigned) {
    const auto prev_row = prev.graph.intervals(i);
    std::size_t p = 0;
    std::size_t prev_edge = prev.graph.edge_offset(i);
    std::size_t e = cur.graph.edge_offset(i);
    std::vector<std::size_t> fresh;
    for (const Interval& iv : cur.graph.intervals(i)) {
      for (std::size_t j = iv.first; j <= iv.last; ++j, ++e) {
        while (p < prev_row.size() && prev_row[p].last < j) {
          prev_edge += prev_row[p].length();
          ++p;
        }
        if (p < prev_row.size() && prev_row[p].first <= j) {
          cur.cost[e] = prev.cost[prev_edge + (j - prev_row[p].first)] + w;
        } else {
          fresh.push_back(e);
        }
      }
    }
    if (fresh.empty()) return;
    // Targets of the fresh edges, recovered from their edge numbers.
    std::vector<std::size_t> targets;
    targets.reserve(fresh.size());
    {
      std::size_t base = cur.graph.edge_offset(i);
      std::size_t f = 0;
      for (const Interval& iv : cur.graph.intervals(i)) {
        while (f < fresh.size() && fresh[f] < base + iv.length()) {
          targets.push_back(iv.first + (fresh[f] - base));
          ++f;
        }
        base += iv.length();
      }
    }
    const auto tree = dijkstra_min_cost(prev.graph, prev.cost, i, targets.back());
    for (std::size_t f = 0; f < fresh.size(); ++f) {
      const double d = tree.distance(targets[f]);
      if (d == kInf) throw InternalError("lower-scale graph lacks a path between shortcut ends");
      cur.cost[fresh[f]] = w + d;
    }
  });
  return cur;
}

// Solves the weighted problem for tolerances that all lie below eps_M.
std::pair<CostTable, std::vector<std::vector<std::size_t>>> solve(
    const GraphSource& src, std::span<const double> eps, std::span<const double> weights,
    unsigned threads) {
  CostTable table;
  const std::size_t n = src.points().size();
  for (std::size_t k = 0; k < eps.size(); ++k) {
    ShortcutIntervalSet g = src.build(eps[k]);
    if (k == 0) {
      std::vector<double> cost(g.shortcut_count(), weights[0]);
      table.scales.push_back({std::move(g), std::move(cost)});
    } else {
      table.scales.push_back(next_scale_costs(table.scales.back(), std::move(g), weights[k], threads));
    }
  }

  std::vector<std::vector<std::size_t>> out(eps.size());
  if (eps.empty()) return {std::move(table), std::move(out)};
  const std::size_t top = eps.size() - 1;
  out[top] = min_cost_path(table.scales[top].graph, table.scales[top].cost, 0, n - 1).vertices;
  for (std::size_t k = top; k-- > 0;) {
    const ScaleCosts& sc = table.scales[k];
    const auto& coarse = out[k + 1];
    std::vector<std::size_t> fine{coarse.front()};
    for (std::size_t e = 0; e + 1 < coarse.size(); ++e) {
      const auto piece = min_cost_path(sc.graph, sc.cost, coarse[e], coarse[e + 1]).vertices;
      fine.insert(fine.end(), piece.begin() + 1, piece.end());
    }
    out[k] = std::move(fine);
  }
  return {std::move(table), std::move(out)};
}

ProgressiveResult solve_scales(const GraphSource& src, const ScaleSequence& scales,
                               std::span<const double> weights, const SolveOptions& options) {
  const std::size_t n = src.points().size();
  const double eps_max = src.max_useful_error();
  std::size_t below = 0;
  while (below < scales.size() && scales[below] < eps_max) ++below;

  ProgressiveResult result;
  auto [table, paths] = solve(src, scales.epsilons().first(below), weights.first(below),
                              options.threads);
  result.costs = std::move(table);
  result.simplification.eps.assign(scales.epsilons().begin(), scales.epsilons().end());
  result.simplification.scales = std::move(paths);
  for (std::size_t k = below; k < scales.size(); ++k) {
    result.simplification.scales.push_back({0, n - 1});
    std::ostringstream msg;
    msg << "tolerance " << scales[k] << " is at or above the single-segment error " << eps_max
        << "; scale " << (k + 1) << " is the single segment";
    result.warnings.push_back(msg.str());
  }
  return result;
}

}  // namespace

ProgressiveResult min_progressive(const GraphSource& src, const ScaleSequence& scales,
                                  const SolveOptions& options) {
  const std::vector<double> ones(scales.size(), 1.0);
  return solve_scales(src, scales, ones, options);
}

ProgressiveResult min_progressive(const Curve& c, const ScaleSequence& scales, ErrorMeasure m,
                                  const SolveOptions& options) {
  const auto src = GraphSource::make(c.points(), m, GraphStrategy::ErrorMatrix, options.threads);
  return min_progressive(src, scales, options);
}

ProgressiveResult min_progressive_weighted(const GraphSource& src, const ScaleSequence& scales,
                                           const SolveOptions& options) {
  return solve_scales(src, scales, scales.weights(), options);
}

ProgressiveResult min_progressive_weighted(const Curve& c, const ScaleSequence& scales,
                                           ErrorMeasure m, const SolveOptions& options) {
  const auto src = GraphSource::make(c.points(), m, GraphStrategy::ErrorMatrix, options.threads);
  return min_progressive_weighted(src, scales, options);
}

ContinuousResult min_progressive_continuous(const GraphSource& src, const SolveOptions& options) {
  const ErrorMatrix* errors = src.errors();
  if (errors == nullptr) {
    throw InputError("the continuous variant needs a precomputed error matrix");
  }
  const std::size_t n = src.points().size();
  const double eps_max = errors->max_useful_error();
  std::vector<double> values;
  for (double v : errors->values()) {
    if (v <= eps_max) values.push_back(v);
  }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());

  ContinuousResult out;
  out.breakpoints = values;
  if (values.size() > 1) {
    std::vector<double> eps(values.begin(), values.end() - 1);
    std::vector<double> weights(eps.size());
    for (std::size_t k = 0; k < eps.size(); ++k) weights[k] = values[k + 1] - values[k];
    auto [table, paths] = solve(src, eps, weights, options.threads);
    for (std::size_t k = 0; k < paths.size(); ++k) {
      out.integral += weights[k] * static_cast<double>(paths[k].size());
    }
    out.simplifications = std::move(paths);
  }
  out.simplifications.push_back({0, n - 1});
  return out;
}

ContinuousResult min_progressive_continuous(const Curve& c, ErrorMeasure m,
                                            const SolveOptions& options) {
  const auto src = GraphSource::make(c.points(), m, GraphStrategy::ErrorMatrix, options.threads);
  return min_progressive_continuous(src, options);
}

}  // namespace progsimp
