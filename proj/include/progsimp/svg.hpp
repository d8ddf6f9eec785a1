#ifndef PROGSIMP_SVG_HPP
#define PROGSIMP_SVG_HPP

#include <iosfwd>
#include <string>

#include "progsimp/geometry.hpp"
#include "progsimp/progressive.hpp"

namespace progsimp {

/// One panel per scale, finest on the left. The original curve is drawn in
/// a light stroke under each simplification; vertices absent from the next
/// coarser scale are red, the others black. With no scales a single panel
/// shows the curve alone.
void render_svg(std::ostream& out, const Curve& c, const ProgressiveSimplification& ps);
void render_svg_file(const std::string& path, const Curve& c, const ProgressiveSimplification& ps);

}  // namespace progsimp

#endif  // PROGSIMP_SVG_HPP
