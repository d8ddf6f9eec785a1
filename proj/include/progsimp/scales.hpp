#ifndef PROGSIMP_SCALES_HPP
#define PROGSIMP_SCALES_HPP

#include <cstddef>
#include <string_view>

#include "progsimp/error_matrix.hpp"
#include "progsimp/progressive.hpp"

namespace progsimp {

enum class SamplingRule {
  SmallestDecile,  // the smallest 10% of the positive errors
  All,             // all positive errors
};

SamplingRule parse_sampling(std::string_view name);
std::string_view to_string(SamplingRule r);

/// Linearly samples `count` tolerances from the sorted positive shortcut
/// errors (with multiplicity) restricted by `rule`: sample k is the value at
/// rank floor((k + 1/2) N / count). Repeated values are kept once.
ScaleSequence sample_scales(const ErrorMatrix& em, std::size_t count, SamplingRule rule);

/// Parses a comma-separated tolerance list such as "0.5,1,2".
ScaleSequence parse_scale_list(std::string_view text);

}  // namespace progsimp

#endif  // PROGSIMP_SCALES_HPP
