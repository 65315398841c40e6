#include "nearcube/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "nearcube/error.hpp"

namespace nearcube {

namespace {

constexpr double kPixels = 480.0;
constexpr double kMargin = 16.0;

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", x);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

SliceRendering render_slice(const PolyBox& set, std::optional<std::size_t> axis, std::optional<Rational> level) {
  if (set.dim() != 2 && set.dim() != 3) throw DimensionMismatch("render_slice draws 2D sets or slices of 3D sets");
  const auto bbox = bounding_box(set);
  if (!bbox) throw InvalidInput("cannot render an empty set");

  SliceRendering out{set, *bbox, 0, 1, {}};
  std::string caption = "planar set";
  if (set.dim() == 3) {
    if (!axis || !level) throw InvalidInput("a 3D set needs a slicing axis and level");
    if (*axis >= 3) throw InvalidInput("slicing axis must be 0, 1 or 2");
    const Interval& range = (*bbox)[*axis];
    if (*level < range.lo || *level > range.hi) {
      throw InvalidInput("level " + level->str() + " lies outside the bounding box range [" + range.lo.str() + "," +
                         range.hi.str() + "] on axis " + std::to_string(*axis));
    }
    out.section = slice(set, *axis, *level);
    out.first_axis = *axis == 0 ? 1 : 0;
    out.second_axis = *axis == 2 ? 1 : 2;
    out.viewport = Box({(*bbox)[out.first_axis], (*bbox)[out.second_axis]});
    caption = "x" + std::to_string(*axis + 1) + " = " + level->str();
  }

  const Interval& xr = out.viewport[0];
  const Interval& yr = out.viewport[1];
  const double span = std::max(xr.length().to_double(), yr.length().to_double());
  const double scale = (kPixels - 2 * kMargin) / span;
  const double width = xr.length().to_double() * scale + 2 * kMargin;
  const double height = yr.length().to_double() * scale + 2 * kMargin;
  auto px = [&](const Rational& x) { return kMargin + (x - xr.lo).to_double() * scale; };
  auto py = [&](const Rational& y) { return height - kMargin - (y - yr.lo).to_double() * scale; };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width) << "\" height=\"" << num(height)
      << "\" viewBox=\"0 0 " << num(width) << ' ' << num(height) << "\">\n";
  svg << "<title>" << escape(caption) << "</title>\n";
  svg << "<rect x=\"0\" y=\"0\" width=\"" << num(width) << "\" height=\"" << num(height)
      << "\" fill=\"#ffffff\" class=\"background\"/>\n";
  svg << "<rect x=\"" << num(px(xr.lo)) << "\" y=\"" << num(py(yr.hi)) << "\" width=\"" << num(px(xr.hi) - px(xr.lo))
      << "\" height=\"" << num(py(yr.lo) - py(yr.hi)) << "\" fill=\"none\" stroke=\"#999999\" stroke-width=\"1\""
      << " stroke-dasharray=\"4 3\" class=\"frame\"/>\n";
  for (const auto& b : out.section.boxes()) {
    svg << "<rect x=\"" << num(px(b[0].lo)) << "\" y=\"" << num(py(b[1].hi)) << "\" width=\""
        << num(px(b[0].hi) - px(b[0].lo)) << "\" height=\"" << num(py(b[1].lo) - py(b[1].hi))
        << "\" fill=\"#4a78b5\" fill-opacity=\"0.8\" stroke=\"#1f3b63\" stroke-width=\"0.5\" class=\"box\"><title>"
        << escape(b.str()) << "</title></rect>\n";
  }
  svg << "</svg>\n";
  out.svg = svg.str();
  return out;
}

std::string render_graph(const PiecewiseLinear1D& g) {
  if (g.breakpoints().empty()) throw InvalidInput("cannot graph an empty function");
  const Rational& x0 = g.breakpoints().front();
  const Rational& x1 = g.breakpoints().back();
  Rational top(0);
  for (const auto& v : g.values()) top = max(top, v);
  if (top.is_zero()) top = Rational(1);

  const double width = kPixels;
  const double height = kPixels / 2;
  const double xscale = (width - 2 * kMargin) / (x1 - x0).to_double();
  const double yscale = (height - 2 * kMargin) / top.to_double();
  auto px = [&](const Rational& x) { return kMargin + (x - x0).to_double() * xscale; };
  auto py = [&](const Rational& y) { return height - kMargin - y.to_double() * yscale; };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width) << "\" height=\"" << num(height)
      << "\" viewBox=\"0 0 " << num(width) << ' ' << num(height) << "\">\n";
  svg << "<title>" << escape("support [" + x0.str() + "," + x1.str() + "], max " + top.str()) << "</title>\n";
  svg << "<rect x=\"0\" y=\"0\" width=\"" << num(width) << "\" height=\"" << num(height)
      << "\" fill=\"#ffffff\" class=\"background\"/>\n";
  svg << "<line x1=\"" << num(px(x0)) << "\" y1=\"" << num(py(Rational(0))) << "\" x2=\"" << num(px(x1)) << "\" y2=\""
      << num(py(Rational(0))) << "\" stroke=\"#999999\" stroke-width=\"1\" class=\"axis\"/>\n";
  svg << "<polyline fill=\"none\" stroke=\"#4a78b5\" stroke-width=\"1.5\" class=\"graph\" points=\"";
  for (std::size_t i = 0; i < g.breakpoints().size(); ++i) {
    if (i > 0) svg << ' ';
    svg << num(px(g.breakpoints()[i])) << ',' << num(py(g.values()[i]));
  }
  svg << "\"/>\n</svg>\n";
  return svg.str();
}

}  // namespace nearcube
