#include "progsimp/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <string_view>

namespace progsimp {

std::string format_double(double v) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc()) throw InternalError("number formatting failed");
  return std::string(buf, end);
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  while (true) {
    const auto comma = line.find(',');
    out.push_back(trim(line.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    line.remove_prefix(comma + 1);
  }
  return out;
}

std::optional<double> parse_number(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || end != s.data() + s.size()) return std::nullopt;
  return v;
}

std::optional<std::size_t> parse_index(std::string_view s) {
  std::size_t v = 0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || end != s.data() + s.size()) return std::nullopt;
  return v;
}

[[noreturn]] void line_error(std::size_t line, const std::string& what) {
  throw InputError("line " + std::to_string(line) + ": " + what);
}

bool is_header(const std::vector<std::string_view>& fields) {
  return std::none_of(fields.begin(), fields.end(),
                      [](std::string_view f) { return parse_number(f).has_value(); });
}

}  // namespace

IngestResult read_curve_csv(std::istream& in) {
  std::vector<Point> raw;
  std::string line;
  std::size_t number = 0;
  bool first = true;
  while (std::getline(in, line)) {
    ++number;
    const std::string_view text = trim(line);
    if (text.empty()) continue;
    const auto fields = split(text);
    if (first && is_header(fields)) {
      first = false;
      continue;
    }
    first = false;
    if (fields.size() != 2) line_error(number, "expected two fields x,y");
    const auto x = parse_number(fields[0]);
    const auto y = parse_number(fields[1]);
    if (!x || !y) line_error(number, "cannot parse '" + std::string(text) + "' as x,y");
    if (!std::isfinite(*x) || !std::isfinite(*y)) line_error(number, "non-finite coordinate");
    raw.push_back({*x, *y});
  }
  std::size_t dropped = 0;
  Curve c = Curve::from_raw(raw, &dropped);
  return {std::move(c), dropped};
}

IngestResult read_curve_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return read_curve_csv(in);
}

void write_curve_csv(std::ostream& out, const Curve& c) {
  out << "x,y\n";
  for (const Point& p : c.points()) out << format_double(p.x) << ',' << format_double(p.y) << '\n';
}

void write_error_matrix_csv(std::ostream& out, const ErrorMatrix& em) {
  out << "i,j,epsilon\n";
  for (std::size_t i = 0; i + 1 < em.size(); ++i) {
    const auto row = em.row(i);
    for (std::size_t k = 0; k < row.size(); ++k) {
      out << (i + 1) << ',' << (i + k + 2) << ',' << format_double(row[k]) << '\n';
    }
  }
}

ErrorMatrix read_error_matrix_csv(std::istream& in) {
  struct Entry {
    std::size_t i, j;
    double v;
  };
  std::vector<Entry> entries;
  std::size_t n = 0;
  std::string line;
  std::size_t number = 0;
  bool first = true;
  while (std::getline(in, line)) {
    ++number;
    const std::string_view text = trim(line);
    if (text.empty()) continue;
    const auto fields = split(text);
    if (first && is_header(fields)) {
      first = false;
      continue;
    }
    first = false;
    if (fields.size() != 3) line_error(number, "expected i,j,epsilon");
    const auto i = parse_index(fields[0]);
    const auto j = parse_index(fields[1]);
    const auto v = parse_number(fields[2]);
    if (!i || !j || !v || *i < 1 || *j <= *i || !(*v >= 0.0)) {
      line_error(number, "malformed entry '" + std::string(text) + "'");
    }
    entries.push_back({*i - 1, *j - 1, *v});
    n = std::max(n, *j);
  }
  const std::size_t expected = n * (n - (n > 0 ? 1 : 0)) / 2;
  if (n < 2 || entries.size() != expected) throw InputError("error matrix is incomplete");
  ErrorMatrix em(n);
  std::vector<bool> seen(expected, false);
  for (const Entry& e : entries) {
    const std::size_t slot = e.i * (2 * n - e.i - 1) / 2 + (e.j - e.i - 1);
    if (seen[slot]) throw InputError("duplicate error matrix entry");
    seen[slot] = true;
    em.at(e.i, e.j) = e.v;
  }
  return em;
}

void write_intervals_csv(std::ostream& out, const ShortcutIntervalSet& s) {
  out << "i,x,y\n";
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (const Interval& iv : s.intervals(i)) {
      out << (i + 1) << ',' << (iv.first + 1) << ',' << (iv.last + 1) << '\n';
    }
  }
}

void write_density_pgm(std::ostream& out, const ShortcutIntervalSet& s, std::size_t max_side) {
  const std::size_t n = s.size();
  const std::size_t side = std::max<std::size_t>(1, std::min(n, max_side));
  // Valid and total counts per pixel block.
  std::vector<double> valid(side * side, 0.0);
  std::vector<double> total(side * side, 0.0);
  auto bin = [&](std::size_t v) { return v * side / n; };
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t r = bin(i);
    for (std::size_t j = i + 1; j < n; ++j) total[r * side + bin(j)] += 1.0;
    for (const Interval& iv : s.intervals(i)) {
      for (std::size_t j = iv.first; j <= iv.last; ++j) valid[r * side + bin(j)] += 1.0;
    }
  }
  out << "P2\n" << side << ' ' << side << "\n255\n";
  for (std::size_t r = 0; r < side; ++r) {
    for (std::size_t c = 0; c < side; ++c) {
      const double t = total[r * side + c];
      const double frac = t > 0.0 ? valid[r * side + c] / t : 0.0;
      out << static_cast<int>(std::lround(255.0 * (1.0 - frac))) << (c + 1 < side ? ' ' : '\n');
    }
  }
}

void write_simplification_csv(std::ostream& out, const ProgressiveSimplification& ps) {
  out << "scale_index,epsilon,vertex_index\n";
  for (std::size_t k = 0; k < ps.scales.size(); ++k) {
    const std::string eps = format_double(ps.eps[k]);
    for (std::size_t v : ps.scales[k]) out << (k + 1) << ',' << eps << ',' << (v + 1) << '\n';
  }
}

ProgressiveSimplification read_simplification_csv(std::istream& in) {
  ProgressiveSimplification ps;
  std::string line;
  std::size_t number = 0;
  bool first = true;
  while (std::getline(in, line)) {
    ++number;
    const std::string_view text = trim(line);
    if (text.empty()) continue;
    const auto fields = split(text);
    if (first && is_header(fields)) {
      first = false;
      continue;
    }
    first = false;
    if (fields.size() != 3) line_error(number, "expected scale_index,epsilon,vertex_index");
    const auto k = parse_index(fields[0]);
    const auto eps = parse_number(fields[1]);
    const auto v = parse_index(fields[2]);
    if (!k || !eps || !v || *k < 1 || *v < 1) line_error(number, "malformed row");
    if (*k == ps.scales.size() + 1) {
      ps.scales.emplace_back();
      ps.eps.push_back(*eps);
    } else if (*k != ps.scales.size()) {
      line_error(number, "scale indices must be contiguous and ascending");
    }
    ps.scales.back().push_back(*v - 1);
  }
  return ps;
}

void write_continuous_csv(std::ostream& out, const ContinuousResult& r) {
  out << "breakpoint_epsilon,vertex_index\n";
  for (std::size_t k = 0; k < r.breakpoints.size(); ++k) {
    const std::string eps = format_double(r.breakpoints[k]);
    for (std::size_t v : r.simplifications[k]) out << eps << ',' << (v + 1) << '\n';
  }
  out << "integral," << format_double(r.integral) << '\n';
}

}  // namespace progsimp
