#include "progsimp/brute_force.hpp"

#include <bit>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "progsimp/error_matrix.hpp"

namespace progsimp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<std::size_t> vertices_of(std::uint32_t mask, std::size_t n) {
  std::vector<std::size_t> out{0};
  for (std::size_t b = 0; b + 2 < n; ++b) {
    if (mask & (1u << b)) out.push_back(b + 1);
  }
  out.push_back(n - 1);
  return out;
}

}  // namespace

BruteForceResult brute_force_min_progressive(std::span<const Point> pts, ErrorMeasure m,
                                             const ScaleSequence& scales) {
  const std::size_t n = pts.size();
  if (n < 2) throw InputError("a curve needs at least 2 vertices");
  if (n > kBruteForceMaxVertices) {
    throw InputError("brute force refuses curves with more than " +
                     std::to_string(kBruteForceMaxVertices) + " vertices");
  }
  if (scales.empty() || scales.size() > kBruteForceMaxScales) {
    throw InputError("brute force needs between 1 and " + std::to_string(kBruteForceMaxScales) +
                     " scales");
  }
  const ErrorMatrix em = compute_all_errors_naive(pts, m);
  const std::size_t sc = scales.size();
  const std::uint32_t count = 1u << (n - 2);

  // f[k][mask]: best weighted size of scales k..m-1 with S_k = mask.
  // pick[k][mask]: the mask chosen for S_{k+1}.
  std::vector<std::vector<double>> f(sc, std::vector<double>(count, kInf));
  std::vector<std::vector<std::uint32_t>> pick(sc, std::vector<std::uint32_t>(count, 0));
  std::vector<double> below(count);
  std::vector<std::uint32_t> below_arg(count);
  for (std::size_t k = sc; k-- > 0;) {
    if (k + 1 < sc) {
      // Subset minimum of f[k+1]; ties to the numerically smaller mask.
      for (std::uint32_t mask = 0; mask < count; ++mask) {
        below[mask] = f[k + 1][mask];
        below_arg[mask] = mask;
      }
      for (std::size_t b = 0; b + 2 < n; ++b) {
        const std::uint32_t bit = 1u << b;
        for (std::uint32_t mask = 0; mask < count; ++mask) {
          if (!(mask & bit)) continue;
          const std::uint32_t other = mask ^ bit;
          if (below[other] < below[mask] ||
              (below[other] == below[mask] && below_arg[other] < below_arg[mask])) {
            below[mask] = below[other];
            below_arg[mask] = below_arg[other];
          }
        }
      }
    }
    for (std::uint32_t mask = 0; mask < count; ++mask) {
      const auto verts = vertices_of(mask, n);
      bool valid = true;
      for (std::size_t t = 0; t + 1 < verts.size() && valid; ++t) {
        valid = em(verts[t], verts[t + 1]) <= scales[k];
      }
      if (!valid) continue;
      const double own = scales.weight(k) * static_cast<double>(verts.size());
      if (k + 1 == sc) {
        f[k][mask] = own;
      } else if (below[mask] < kInf) {
        f[k][mask] = own + below[mask];
        pick[k][mask] = below_arg[mask];
      }
    }
  }

  std::uint32_t best = 0;
  for (std::uint32_t mask = 1; mask < count; ++mask) {
    if (f[0][mask] < f[0][best]) best = mask;
  }
  if (f[0][best] == kInf) throw InternalError("brute force found no feasible chain");
  BruteForceResult out;
  out.objective = f[0][best];
  out.simplification.eps.assign(scales.epsilons().begin(), scales.epsilons().end());
  std::uint32_t mask = best;
  for (std::size_t k = 0; k < sc; ++k) {
    out.simplification.scales.push_back(vertices_of(mask, n));
    mask = pick[k][mask];
  }
  return out;
}

}  // namespace progsimp
