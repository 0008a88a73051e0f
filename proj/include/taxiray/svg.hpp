#pragma once

// Static SVG renderings: sampled points or iterate trajectories over a
// polygon, and reconstructed grid sets over their bounding box. Pure string
// builders, no timestamps, so outputs are byte-stable for a given input.

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "taxiray/geometry.hpp"
#include "taxiray/gridrecon.hpp"

namespace taxiray {

namespace detail {

struct SvgFrame {
  double xmin, ymin, width, height, scale;
};

inline SvgFrame svg_frame(double xmin, double xmax, double ymin, double ymax) {
  double w = xmax - xmin;
  double h = ymax - ymin;
  double pad = 0.05 * std::max(w, h);
  return {xmin - pad, ymin - pad, w + 2 * pad, h + 2 * pad,
          480.0 / std::max(w + 2 * pad, h + 2 * pad)};
}

inline double svg_x(const SvgFrame& f, double x) {
  return (x - f.xmin) * f.scale;
}

// SVG y grows downward; flip so the rendering matches plane coordinates.
inline double svg_y(const SvgFrame& f, double y) {
  return (f.ymin + f.height - y) * f.scale;
}

inline std::string svg_num(double v) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(2);
  os << v;
  return os.str();
}

}  // namespace detail

/// Polygon outline with a sequence of points; later points darker, per the
/// convention that higher iteration indices are more converged.
inline std::string svg_points_over_polygon(const Polygon& p,
                                           const std::vector<Point2>& pts) {
  double xmin = p[0].x, xmax = p[0].x, ymin = p[0].y, ymax = p[0].y;
  for (const Point2& v : p.vertices()) {
    xmin = std::min(xmin, v.x);
    xmax = std::max(xmax, v.x);
    ymin = std::min(ymin, v.y);
    ymax = std::max(ymax, v.y);
  }
  for (const Point2& q : pts) {
    xmin = std::min(xmin, q.x);
    xmax = std::max(xmax, q.x);
    ymin = std::min(ymin, q.y);
    ymax = std::max(ymax, q.y);
  }
  detail::SvgFrame f = detail::svg_frame(xmin, xmax, ymin, ymax);

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\""
     << detail::svg_num(f.width * f.scale) << "\" height=\""
     << detail::svg_num(f.height * f.scale) << "\">\n";
  os << "<polygon points=\"";
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (k) os << ' ';
    os << detail::svg_num(detail::svg_x(f, p[k].x)) << ','
       << detail::svg_num(detail::svg_y(f, p[k].y));
  }
  os << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
  const double r = 0.008 * 480.0;
  for (std::size_t k = 0; k < pts.size(); ++k) {
    int shade =
        pts.size() > 1
            ? static_cast<int>(210.0 * (1.0 - static_cast<double>(k) /
                                                  static_cast<double>(
                                                      pts.size() - 1)))
            : 0;
    os << "<circle cx=\"" << detail::svg_num(detail::svg_x(f, pts[k].x))
       << "\" cy=\"" << detail::svg_num(detail::svg_y(f, pts[k].y))
       << "\" r=\"" << detail::svg_num(r) << "\" fill=\"rgb(" << shade << ','
       << shade << ',' << shade << ")\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

/// Occupied subrectangles over the bounding box outline.
inline std::string svg_gridset(const GridSet& g, const ControlGrid& grid) {
  const Box& b = grid.box();
  detail::SvgFrame f = detail::svg_frame(b.xmin, b.xmax, b.ymin, b.ymax);

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\""
     << detail::svg_num(f.width * f.scale) << "\" height=\""
     << detail::svg_num(f.height * f.scale) << "\">\n";
  for (int j = 0; j < g.resolution(); ++j) {
    for (int i = 0; i < g.resolution(); ++i) {
      if (!g.at(i, j)) continue;
      double x0 = detail::svg_x(f, grid.x_edge(i));
      double y0 = detail::svg_y(f, grid.y_edge(j));
      os << "<rect x=\"" << detail::svg_num(x0) << "\" y=\""
         << detail::svg_num(y0) << "\" width=\""
         << detail::svg_num(grid.cell_width() * f.scale) << "\" height=\""
         << detail::svg_num(grid.cell_height() * f.scale)
         << "\" fill=\"rgb(90,90,90)\" stroke=\"white\" stroke-width=\"0.5\"/>\n";
    }
  }
  os << "<rect x=\"" << detail::svg_num(detail::svg_x(f, b.xmin)) << "\" y=\""
     << detail::svg_num(detail::svg_y(f, b.ymax)) << "\" width=\""
     << detail::svg_num((b.xmax - b.xmin) * f.scale) << "\" height=\""
     << detail::svg_num((b.ymax - b.ymin) * f.scale)
     << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace taxiray
