#pragma once

#include <algorithm>
#include <cstdio>
#include <string>

#include "polestrata/surface.hpp"

namespace polestrata {

namespace detail {

inline std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s = buf;
  if (s == "-0.000") s = "0.000";
  return s;
}

}  // namespace detail

// Domains side by side, each in its own frame; half-lines and verticals drawn as stubs.
inline std::string render_svg(const Surface& S, double scale = 40) {
  using detail::fmt;
  const double stub = 1.5;
  std::vector<double> minx, maxx, miny, maxy;
  double height = 0;
  for (const Domain& d : S.domains) {
    double lo = 0, hi = 0, bot = 0, top = 0;
    for (const Cx& v : d.verts) {
      lo = std::min(lo, to_double(v.re));
      hi = std::max(hi, to_double(v.re));
      bot = std::min(bot, to_double(v.im));
      top = std::max(top, to_double(v.im));
    }
    lo -= stub;
    hi += stub;
    bot -= stub;
    top += stub;
    minx.push_back(lo);
    maxx.push_back(hi);
    miny.push_back(bot);
    maxy.push_back(top);
    height = std::max(height, top - bot);
  }
  const double pad = 20;
  double width = pad;
  std::vector<double> offset;
  for (size_t i = 0; i < S.domains.size(); ++i) {
    offset.push_back(width - minx[i] * scale);
    width += (maxx[i] - minx[i]) * scale + pad;
  }
  const double H = height * scale + 2 * pad + 16;

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + fmt(width) + "\" height=\"" + fmt(H) +
         "\" viewBox=\"0 0 " + fmt(width) + " " + fmt(H) + "\">\n";
  for (size_t i = 0; i < S.domains.size(); ++i) {
    const Domain& d = S.domains[i];
    const double ox = offset[i];
    const double oy = pad + 16 + maxy[i] * scale;
    auto X = [&](double x) { return fmt(ox + x * scale); };
    auto Y = [&](double y) { return fmt(oy - y * scale); };
    std::string name = std::string(kind_name(d.kind)) + "_" + std::to_string(d.index);
    out += "  <g id=\"domain" + std::to_string(i) + "\" class=\"" + kind_name(d.kind) + "\">\n";
    out += "    <text x=\"" + X(minx[i]) + "\" y=\"" + fmt(pad) + "\" font-size=\"12\">" + name + "</text>\n";
    const Cx& first = d.verts.front();
    const Cx& last = d.verts.back();
    double fx = to_double(first.re), fy = to_double(first.im);
    double lx = to_double(last.re), ly = to_double(last.im);
    if (is_cyl(d.kind)) {
      double sgn = d.kind == DomainKind::CPlus ? 1 : -1;
      out += "    <path d=\"M " + X(fx) + " " + Y(fy) + " L " + X(fx) + " " + Y(fy + sgn * stub) +
             "\" stroke=\"gray\" stroke-dasharray=\"4 2\" fill=\"none\"/>\n";
      out += "    <path d=\"M " + X(lx) + " " + Y(ly) + " L " + X(lx) + " " + Y(ly + sgn * stub) +
             "\" stroke=\"gray\" stroke-dasharray=\"4 2\" fill=\"none\"/>\n";
    } else {
      out += "    <path d=\"M " + X(fx - stub) + " " + Y(fy) + " L " + X(fx) + " " + Y(fy) +
             "\" stroke=\"gray\" fill=\"none\"/>\n";
      out += "    <path d=\"M " + X(lx) + " " + Y(ly) + " L " + X(lx + stub) + " " + Y(ly) +
             "\" stroke=\"gray\" fill=\"none\"/>\n";
    }
    for (size_t j = 0; j < d.labels.size(); ++j) {
      const Cx& a = d.verts[j];
      const Cx& b = d.verts[j + 1];
      double ax = to_double(a.re), ay = to_double(a.im), bx = to_double(b.re), by = to_double(b.im);
      out += "    <path class=\"segment\" data-label=\"" + std::to_string(d.labels[j]) + "\" d=\"M " + X(ax) + " " +
             Y(ay) + " L " + X(bx) + " " + Y(by) + "\" stroke=\"black\" fill=\"none\"/>\n";
      out += "    <text x=\"" + X((ax + bx) / 2) + "\" y=\"" + Y((ay + by) / 2) +
             "\" font-size=\"10\" dy=\"-3\">" + std::to_string(d.labels[j]) + "</text>\n";
    }
    for (size_t j = 0; j < d.verts.size(); ++j) {
      int v = S.complex.corner_vertex[i][j];
      out += "    <circle cx=\"" + X(to_double(d.verts[j].re)) + "\" cy=\"" + Y(to_double(d.verts[j].im)) +
             "\" r=\"3\" data-vertex=\"" + std::to_string(v) + "\"/>\n";
    }
    out += "  </g>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace polestrata
