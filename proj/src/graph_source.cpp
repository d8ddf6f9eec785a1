#include "progsimp/graph_source.hpp"

namespace progsimp {

GraphSource GraphSource::make(std::span<const Point> pts, ErrorMeasure m,
                              GraphStrategy strategy, unsigned threads) {
  if (pts.size() < 2) throw InputError("a curve needs at least 2 vertices");
  if (strategy == GraphStrategy::ChanChin) {
    if (m != ErrorMeasure::Hausdorff) {
      throw InputError("the wedge-sweep graph construction supports the Hausdorff measure only");
    }
    return GraphSource(pts, m, strategy, nullptr);
  }
  auto errors = std::make_shared<const ErrorMatrix>(
      m == ErrorMeasure::Hausdorff ? compute_all_errors_hull(pts, threads)
                                   : compute_all_errors_naive(pts, m, threads));
  return GraphSource(pts, m, strategy, std::move(errors));
}

GraphSource GraphSource::with_errors(std::span<const Point> pts, ErrorMeasure m,
                                     std::shared_ptr<const ErrorMatrix> errors) {
  if (!errors || errors->size() != pts.size()) {
    throw InputError("error matrix does not match the curve");
  }
  return GraphSource(pts, m, GraphStrategy::ErrorMatrix, std::move(errors));
}

ShortcutIntervalSet GraphSource::build(double eps, std::span<const std::size_t> members) const {
  if (strategy_ == GraphStrategy::ChanChin) return build_graph_chan_chin(pts_, eps, members);
  return build_graph_from_errors(*errors_, eps, members);
}

double GraphSource::error(std::size_t i, std::size_t j) const {
  if (errors_) return (*errors_)(i, j);
  return shortcut_error(pts_, {i, j}, measure_);
}

}  // namespace progsimp
