#include "bst/report.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <string>

#include <json.hpp>

namespace bst {
namespace {

constexpr const char* kPalette[] = {"#d62728", "#1f77b4", "#2ca02c", "#ff7f0e", "#9467bd",
                                    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

std::string fixed(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

}  // namespace

std::string format_length(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

void write_text(std::ostream& out, const ResultReport& report) {
  out << "# n " << report.n << '\n'
      << "# k " << report.k << '\n'
      << "# objective " << to_string(report.objective) << '\n'
      << "# strategy " << to_string(report.strategy) << '\n'
      << "# stages " << report.stages << '\n';
  if (report.elapsed_ms) out << "# time_ms " << fixed(*report.elapsed_ms) << '\n';
  for (const TreeEdge& e : report.tree.edges) out << e.u << ' ' << e.v << ' ' << format_length(e.length) << '\n';
  out << "total_weight " << format_length(report.tree.total_weight) << '\n';
}

void write_json(std::ostream& out, const ResultReport& report) {
  nlohmann::ordered_json j;
  j["n"] = report.n;
  j["k"] = report.k;
  j["objective"] = std::string(to_string(report.objective));
  j["strategy"] = std::string(to_string(report.strategy));
  j["total_weight"] = report.tree.total_weight;
  j["stages"] = report.stages;
  auto& edges = j["edges"] = nlohmann::ordered_json::array();
  for (const TreeEdge& e : report.tree.edges) edges.push_back({{"u", e.u}, {"v", e.v}, {"length", e.length}});
  if (report.elapsed_ms) j["time_ms"] = *report.elapsed_ms;
  out << j.dump(2) << '\n';
}

void write_svg(std::ostream& out, const ColoredInstance& instance, const SpanningTree& tree) {
  const auto pts = instance.points();
  double x0 = pts[0].x, x1 = pts[0].x, y0 = pts[0].y, y1 = pts[0].y;
  for (const Point& p : pts) {
    x0 = std::min(x0, p.x);
    x1 = std::max(x1, p.x);
    y0 = std::min(y0, p.y);
    y1 = std::max(y1, p.y);
  }
  double w = x1 - x0, h = y1 - y0;
  const double extent = std::max({w, h, 1e-12});
  if (w <= 0) w = extent;
  if (h <= 0) h = extent;
  const double pad_x = 0.05 * w, pad_y = 0.05 * h;
  const double vw = w + 2 * pad_x, vh = h + 2 * pad_y;
  const double left = (x1 + x0 - vw) / 2, top = (y1 + y0 - vh) / 2;
  const double r = 0.006 * std::max(vw, vh);

  // y grows downward in SVG; flip so the drawing matches the plane.
  auto sx = [&](double x) { return fixed(x - left); };
  auto sy = [&](double y) { return fixed(top + vh - y); };

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << fixed(vw) << ' ' << fixed(vh)
      << "\" width=\"800\" height=\"" << static_cast<int>(800 * vh / vw) << "\">\n";
  out << "<g stroke=\"#444\" stroke-width=\"" << fixed(r / 3) << "\">\n";
  for (const TreeEdge& e : tree.edges) {
    const Point& a = pts[static_cast<std::size_t>(e.u)];
    const Point& b = pts[static_cast<std::size_t>(e.v)];
    out << "<line x1=\"" << sx(a.x) << "\" y1=\"" << sy(a.y) << "\" x2=\"" << sx(b.x) << "\" y2=\"" << sy(b.y)
        << "\"/>\n";
  }
  out << "</g>\n<g>\n";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const auto color = static_cast<std::size_t>(instance.colors()[i]) % std::size(kPalette);
    out << "<circle cx=\"" << sx(pts[i].x) << "\" cy=\"" << sy(pts[i].y) << "\" r=\"" << fixed(r) << "\" fill=\""
        << kPalette[color] << "\"/>\n";
  }
  out << "</g>\n</svg>\n";
}

}  // namespace bst
