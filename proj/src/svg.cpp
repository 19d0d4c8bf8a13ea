#include "quadareas/svg.hpp"

#include "quadareas/text_format.hpp"

#include <algorithm>
#include <sstream>

namespace quadareas {

namespace {

struct Screen {
  double x, y;
};

Screen to_screen(const Point& p) { return {p.x.get_d(), -p.y.get_d()}; }

std::string points_attr(const std::vector<Point>& pts) {
  std::ostringstream out;
  out.precision(10);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const Screen s = to_screen(pts[i]);
    if (i) out << ' ';
    out << s.x << ',' << s.y;
  }
  return out.str();
}

}  // namespace

std::string render_svg(const WitnessOutput& w, const DivisionSpec& spec) {
  const std::vector<Point> corners = w.quad.vertices();
  double min_x = corners[0].x.get_d(), max_x = min_x;
  double min_y = corners[0].y.get_d(), max_y = min_y;
  for (const Point& p : corners) {
    min_x = std::min(min_x, p.x.get_d());
    max_x = std::max(max_x, p.x.get_d());
    min_y = std::min(min_y, p.y.get_d());
    max_y = std::max(max_y, p.y.get_d());
  }
  const double extent = std::max(max_x - min_x, max_y - min_y);
  const double margin = 0.05 * extent;
  const double stroke = 0.004 * extent;

  const Tuple areas = strip_areas(w.quad, spec);
  const auto& ab = w.division.on_ab;
  const auto& dc = w.division.on_dc;

  std::ostringstream out;
  out.precision(10);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << (min_x - margin) << ' '
      << (-max_y - margin) << ' ' << (max_x - min_x + 2 * margin) << ' '
      << (max_y - min_y + 2 * margin) << "\" data-p=\"" << format_tuple(spec.p())
      << "\" data-pp=\"" << format_tuple(spec.p_prime()) << "\" data-construction=\""
      << to_string(w.construction) << "\">\n";
  out << "  <polygon class=\"quad\" points=\"" << points_attr(corners)
      << "\" data-vertices=\"" << format_polygon(corners) << "\" fill=\"none\" stroke=\"black\""
      << " stroke-width=\"" << 2 * stroke << "\"/>\n";
  for (std::size_t i = 0; i < areas.size(); ++i) {
    const std::vector<Point> strip = {ab[i], ab[i + 1], dc[i + 1], dc[i]};
    out << "  <polygon class=\"strip\" data-index=\"" << i + 1 << "\" data-area=\""
        << to_string(areas[i]) << "\" data-vertices=\"" << format_polygon(strip)
        << "\" points=\"" << points_attr(strip) << "\" fill=\""
        << (i % 2 ? "#dbe8f5" : "#f5e6d3") << "\" stroke=\"none\"/>\n";
  }
  for (std::size_t i = 1; i + 1 < ab.size(); ++i) {
    const Screen a = to_screen(ab[i]), d = to_screen(dc[i]);
    out << "  <line class=\"division\" x1=\"" << a.x << "\" y1=\"" << a.y << "\" x2=\"" << d.x
        << "\" y2=\"" << d.y << "\" stroke=\"gray\" stroke-width=\"" << stroke << "\"/>\n";
  }
  for (std::size_t i = 0; i < areas.size(); ++i) {
    const Point centre = make_rational(1, 4) * (ab[i] + ab[i + 1] + dc[i + 1] + dc[i]);
    const Screen c = to_screen(centre);
    out << "  <text class=\"label\" x=\"" << c.x << "\" y=\"" << c.y << "\" font-size=\""
        << 8 * stroke << "\" text-anchor=\"middle\">" << to_string(areas[i]) << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace quadareas
