#include "progsimp/scales.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <string>
#include <vector>

namespace progsimp {

SamplingRule parse_sampling(std::string_view name) {
  if (name == "decile") return SamplingRule::SmallestDecile;
  if (name == "all") return SamplingRule::All;
  throw InputError("unknown sampling rule '" + std::string(name) + "' (expected decile or all)");
}

std::string_view to_string(SamplingRule r) {
  return r == SamplingRule::SmallestDecile ? "decile" : "all";
}

ScaleSequence sample_scales(const ErrorMatrix& em, std::size_t count, SamplingRule rule) {
  if (count == 0) throw InputError("the number of scales must be at least 1");
  std::vector<double> pool;
  for (double v : em.values()) {
    if (v > 0.0) pool.push_back(v);
  }
  if (pool.empty()) {
    throw InputError("all shortcut errors are zero; give an explicit tolerance list instead");
  }
  std::sort(pool.begin(), pool.end());
  if (rule == SamplingRule::SmallestDecile) pool.resize((pool.size() + 9) / 10);
  const double size = static_cast<double>(pool.size());
  std::vector<double> eps;
  for (std::size_t k = 0; k < count; ++k) {
    const auto rank = static_cast<std::size_t>(
        std::floor((static_cast<double>(k) + 0.5) * size / static_cast<double>(count)));
    const double v = pool[std::min(rank, pool.size() - 1)];
    if (eps.empty() || eps.back() < v) eps.push_back(v);
  }
  return ScaleSequence(std::move(eps));
}

ScaleSequence parse_scale_list(std::string_view text) {
  std::vector<double> eps;
  while (!text.empty()) {
    const auto comma = text.find(',');
    std::string_view item = text.substr(0, comma);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    double v = 0.0;
    const auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (ec != std::errc() || end != item.data() + item.size() || item.empty()) {
      throw InputError("cannot parse tolerance '" + std::string(item) + "'");
    }
    eps.push_back(v);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  if (eps.empty()) throw InputError("empty tolerance list");
  return ScaleSequence(std::move(eps));
}

}  // namespace progsimp
