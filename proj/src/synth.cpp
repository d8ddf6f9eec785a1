#include "progsimp/synth.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <string>
#include <vector>

namespace progsimp {

SynthKind parse_synth_kind(std::string_view name) {
  if (name == "zigzag") return SynthKind::Zigzag;
  if (name == "random-walk") return SynthKind::RandomWalk;
  if (name == "noisy-circle") return SynthKind::NoisyCircle;
  throw InputError("unknown curve kind '" + std::string(name) +
                   "' (expected zigzag, random-walk or noisy-circle)");
}

std::string_view to_string(SynthKind k) {
  switch (k) {
    case SynthKind::Zigzag: return "zigzag";
    case SynthKind::RandomWalk: return "random-walk";
    case SynthKind::NoisyCircle: return "noisy-circle";
  }
  return "unknown";
}

Curve synth_curve(SynthKind kind, std::size_t n, std::uint64_t seed) {
  if (n < 2) throw InputError("a curve needs at least 2 vertices");
  std::vector<Point> pts;
  pts.reserve(n);
  std::mt19937_64 rng(seed);
  switch (kind) {
    case SynthKind::Zigzag:
      for (std::size_t k = 0; k < n; ++k) {
        pts.push_back({static_cast<double>(k), static_cast<double>(k % 2)});
      }
      break;
    case SynthKind::RandomWalk: {
      std::normal_distribution<double> turn(0.0, 0.3);
      std::uniform_real_distribution<double> step(0.5, 1.5);
      double heading = 0.0;
      Point p{0.0, 0.0};
      pts.push_back(p);
      while (pts.size() < n) {
        heading += turn(rng);
        const double len = step(rng);
        p = {p.x + len * std::cos(heading), p.y + len * std::sin(heading)};
        pts.push_back(p);
      }
      break;
    }
    case SynthKind::NoisyCircle: {
      std::normal_distribution<double> noise(0.0, 0.05);
      for (std::size_t k = 0; k < n; ++k) {
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
        const double r = 1.0 + noise(rng);
        pts.push_back({r * std::cos(angle), r * std::sin(angle)});
      }
      break;
    }
  }
  return Curve(std::move(pts));
}

}  // namespace progsimp
