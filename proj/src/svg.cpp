#include "progsimp/svg.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>

#include "progsimp/io.hpp"

namespace progsimp {

namespace {

constexpr double kPanel = 320.0;
constexpr double kMargin = 12.0;

struct Frame {
  double min_x, max_y, scale, height;
  double px(const Point& p) const { return kMargin + (p.x - min_x) * scale; }
  double py(const Point& p) const { return kMargin + (max_y - p.y) * scale; }
};

Frame frame_for(const Curve& c) {
  double min_x = c.front().x, max_x = min_x, min_y = c.front().y, max_y = min_y;
  for (const Point& p : c.points()) {
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  }
  const double extent = std::max({max_x - min_x, max_y - min_y, 1e-12});
  const double scale = (kPanel - 2 * kMargin) / extent;
  return {min_x, max_y, scale, (max_y - min_y) * scale + 2 * kMargin};
}

void polyline(std::ostream& out, const Curve& c, const Frame& f, const std::vector<std::size_t>* idx,
              const char* stroke, double width) {
  out << "    <polyline fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\"" << width
      << "\" points=\"";
  const std::size_t count = idx ? idx->size() : c.size();
  for (std::size_t k = 0; k < count; ++k) {
    const Point& p = c[idx ? (*idx)[k] : k];
    out << (k ? " " : "") << format_double(f.px(p)) << ',' << format_double(f.py(p));
  }
  out << "\"/>\n";
}

}  // namespace

void render_svg(std::ostream& out, const Curve& c, const ProgressiveSimplification& ps) {
  const Frame f = frame_for(c);
  const std::size_t panels = std::max<std::size_t>(1, ps.scales.size());
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << format_double(kPanel * panels)
      << "\" height=\"" << format_double(f.height + 20.0) << "\">\n";
  for (std::size_t k = 0; k < panels; ++k) {
    out << "  <g transform=\"translate(" << format_double(kPanel * k) << ",0)\">\n";
    polyline(out, c, f, nullptr, "#c8c8c8", 1.0);
    if (!ps.scales.empty()) {
      const auto& s = ps.scales[k];
      polyline(out, c, f, &s, "#000000", 1.5);
      const std::vector<std::size_t>* coarser = k + 1 < ps.scales.size() ? &ps.scales[k + 1] : nullptr;
      for (std::size_t v : s) {
        const bool fresh = coarser && !std::binary_search(coarser->begin(), coarser->end(), v);
        out << "    <circle cx=\"" << format_double(f.px(c[v])) << "\" cy=\""
            << format_double(f.py(c[v])) << "\" r=\"2.5\" fill=\"" << (fresh ? "#d00000" : "#000000")
            << "\"/>\n";
      }
      out << "    <text x=\"" << kMargin << "\" y=\"" << format_double(f.height + 14.0)
          << "\" font-size=\"12\">eps=" << format_double(ps.eps[k]) << " |S|=" << s.size()
          << "</text>\n";
    }
    out << "  </g>\n";
  }
  out << "</svg>\n";
}

void render_svg_file(const std::string& path, const Curve& c, const ProgressiveSimplification& ps) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path + "'");
  render_svg(out, c, ps);
}

}  // namespace progsimp
