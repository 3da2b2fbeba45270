#include "nodal/svg.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "nodal/errors.hpp"

namespace nodal {

namespace {

// Whole-number device units per lattice unit; keeps every coordinate integral.
const Int kScale = 100;

}  // namespace

std::string to_svg(const FiberPolygon& p) {
  Int minx = p.vertices[0][0], maxx = minx;
  Int miny = p.vertices[0][1], maxy = miny;
  for (const auto& v : p.vertices) {
    minx = std::min(minx, v[0]);
    maxx = std::max(maxx, v[0]);
    miny = std::min(miny, v[1]);
    maxy = std::max(maxy, v[1]);
  }
  // SVG y grows downward; flip the lattice y axis.
  Int x0 = minx * kScale, x1 = maxx * kScale;
  Int y0 = -maxy * kScale, y1 = -miny * kScale;
  Int padx = (x1 - x0) / 10, pady = (y1 - y0) / 10;
  Int vx = x0 - padx, vy = y0 - pady;
  Int vw = (x1 - x0) + 2 * padx, vh = (y1 - y0) + 2 * pady;

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" << vx << ' '
     << vy << ' ' << vw << ' ' << vh << "\">\n";
  os << "  <path d=\"";
  for (size_t i = 0; i < p.vertices.size(); ++i) {
    os << (i == 0 ? 'M' : 'L') << p.vertices[i][0] * kScale << ' '
       << -p.vertices[i][1] * kScale << ' ';
  }
  os << "Z\" fill=\"#c8d8f0\" stroke=\"#204080\" stroke-width=\"4\"/>\n";
  for (const auto& v : p.vertices) {
    os << "  <circle cx=\"" << v[0] * kScale << "\" cy=\"" << -v[1] * kScale
       << "\" r=\"8\" fill=\"#204080\"/>\n";
    os << "  <text x=\"" << v[0] * kScale + 12 << "\" y=\"" << -v[1] * kScale - 12
       << "\" font-size=\"36\" font-family=\"monospace\">(" << v[0] << ',' << v[1]
       << ")</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

void write_svg(const FiberPolygon& p, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw input_error("cannot open SVG output file: " + path);
  out << to_svg(p);
  if (!out) throw input_error("failed writing SVG output file: " + path);
}

}  // namespace nodal
