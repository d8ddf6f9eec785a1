#ifndef PROGSIMP_IO_HPP
#define PROGSIMP_IO_HPP

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "progsimp/error_matrix.hpp"
#include "progsimp/geometry.hpp"
#include "progsimp/interval_set.hpp"
#include "progsimp/progressive.hpp"

namespace progsimp {

/// Shortest decimal text that reads back to the same double.
std::string format_double(double v);

struct IngestResult {
  Curve curve;
  std::size_t dropped = 0;  // consecutive duplicates removed
};

/// Reads `x,y` lines. A first line none of whose fields is a number is taken
/// as a header; blank lines are skipped. Errors name the 1-based line.
IngestResult read_curve_csv(std::istream& in);
IngestResult read_curve_file(const std::string& path);
void write_curve_csv(std::ostream& out, const Curve& c);

/// `i,j,epsilon` with 1-based indices.
void write_error_matrix_csv(std::ostream& out, const ErrorMatrix& em);
ErrorMatrix read_error_matrix_csv(std::istream& in);

/// `i,x,y` per interval, 1-based.
void write_intervals_csv(std::ostream& out, const ShortcutIntervalSet& s);

/// Plain (ASCII) PGM raster of the shortcut matrix: row i, column j is dark
/// where (i, j) is valid. Curves longer than `max_side` are binned, each
/// pixel showing the fraction of valid shortcuts in its block.
void write_density_pgm(std::ostream& out, const ShortcutIntervalSet& s, std::size_t max_side = 1024);

/// `scale_index,epsilon,vertex_index` with 1-based scale and vertex indices.
void write_simplification_csv(std::ostream& out, const ProgressiveSimplification& ps);
ProgressiveSimplification read_simplification_csv(std::istream& in);

/// `breakpoint_epsilon,vertex_index` rows followed by `integral,<value>`.
void write_continuous_csv(std::ostream& out, const ContinuousResult& r);

}  // namespace progsimp

#endif  // PROGSIMP_IO_HPP
