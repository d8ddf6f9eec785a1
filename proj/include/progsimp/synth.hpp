#ifndef PROGSIMP_SYNTH_HPP
#define PROGSIMP_SYNTH_HPP

#include <cstddef>
#include <cstdint>
#include <string_view>

#include "progsimp/geometry.hpp"

namespace progsimp {

enum class SynthKind {
  Zigzag,       // (k, k mod 2)
  RandomWalk,   // heading drifts by N(0, 0.3) rad per step, step length U[0.5, 1.5]
  NoisyCircle,  // n points around the unit circle, radius perturbed by N(0, 0.05)
};

SynthKind parse_synth_kind(std::string_view name);
std::string_view to_string(SynthKind k);

/// Deterministic for a given (kind, n, seed).
Curve synth_curve(SynthKind kind, std::size_t n, std::uint64_t seed);

}  // namespace progsimp

#endif  // PROGSIMP_SYNTH_HPP
