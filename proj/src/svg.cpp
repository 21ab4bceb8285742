#include "mopiso/svg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace mopiso {

namespace {

struct Canvas {
  std::vector<std::pair<double, double>> pts;
  double width = 0, height = 0;
};

// Fits points into a fixed-size canvas, flipping y so up stays up.
Canvas layout(const std::vector<std::pair<double, double>>& raw) {
  double min_x = raw[0].first, max_x = raw[0].first;
  double min_y = raw[0].second, max_y = raw[0].second;
  for (const auto& [x, y] : raw) {
    min_x = std::min(min_x, x);
    max_x = std::max(max_x, x);
    min_y = std::min(min_y, y);
    max_y = std::max(max_y, y);
  }
  double span = std::max({max_x - min_x, max_y - min_y, 1.0});
  double scale = 640.0 / span;
  double margin = 40.0;
  Canvas c;
  c.width = (max_x - min_x) * scale + 2 * margin;
  c.height = (max_y - min_y) * scale + 2 * margin;
  for (const auto& [x, y] : raw)
    c.pts.emplace_back(margin + (x - min_x) * scale, margin + (max_y - y) * scale);
  return c;
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(2);
  os << std::fixed << v;
  return os.str();
}

std::string draw(const Canvas& c, const std::vector<Edge>& chords,
                 const std::vector<int>& highlight) {
  size_t n = c.pts.size();
  std::vector<char> hot(n, 0);
  for (int v : highlight)
    if (v >= 0 && static_cast<size_t>(v) < n) hot[static_cast<size_t>(v)] = 1;

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
     << fmt(c.width) << "\" height=\"" << fmt(c.height) << "\" viewBox=\"0 0 "
     << fmt(c.width) << " " << fmt(c.height) << "\">\n"
     << "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";

  os << "<polygon points=\"";
  for (size_t i = 0; i < n; ++i) {
    if (i) os << " ";
    os << fmt(c.pts[i].first) << "," << fmt(c.pts[i].second);
  }
  os << "\" fill=\"#f5f1e8\" stroke=\"#333333\" stroke-width=\"2\"/>\n";

  for (const Edge& d : chords)
    os << "<line x1=\"" << fmt(c.pts[static_cast<size_t>(d.a)].first) << "\" y1=\""
       << fmt(c.pts[static_cast<size_t>(d.a)].second) << "\" x2=\""
       << fmt(c.pts[static_cast<size_t>(d.b)].first) << "\" y2=\""
       << fmt(c.pts[static_cast<size_t>(d.b)].second)
       << "\" stroke=\"#999999\" stroke-width=\"1\" stroke-dasharray=\"5,4\"/>\n";

  for (size_t i = 0; i < n; ++i) {
    os << "<circle cx=\"" << fmt(c.pts[i].first) << "\" cy=\"" << fmt(c.pts[i].second)
       << "\" r=\"" << (hot[i] ? "7" : "3.5") << "\" fill=\""
       << (hot[i] ? "#c0392b" : "#333333") << "\"/>\n";
    os << "<text x=\"" << fmt(c.pts[i].first + 9) << "\" y=\"" << fmt(c.pts[i].second - 7)
       << "\" font-family=\"monospace\" font-size=\"13\" fill=\"#555555\">" << i
       << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace

std::string render_svg(const SimplePolygon& poly, const Mop* triangulation,
                       const std::vector<int>& highlight) {
  std::vector<std::pair<double, double>> raw;
  for (const Point& p : poly.corners())
    raw.emplace_back(static_cast<double>(p.x), static_cast<double>(p.y));
  Canvas c = layout(raw);
  std::vector<Edge> chords;
  if (triangulation) {
    require(triangulation->order() == poly.size(), Errc::BadParams,
            "triangulation order differs from polygon size");
    chords = triangulation->diagonals();
  }
  return draw(c, chords, highlight);
}

std::string render_svg(const Mop& g, const std::vector<int>& highlight) {
  int n = g.order();
  std::vector<std::pair<double, double>> raw;
  const double pi = 3.14159265358979323846;
  for (int i = 0; i < n; ++i) {
    double a = 2 * pi * i / n - pi / 2;
    raw.emplace_back(std::cos(a), std::sin(a) * -1.0);
  }
  Canvas c = layout(raw);
  return draw(c, g.diagonals(), highlight);
}

}  // namespace mopiso
