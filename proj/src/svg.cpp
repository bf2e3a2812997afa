#include "diamgraph/svg.hpp"

#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "diamgraph/sphere.hpp"

namespace diamgraph {

namespace {

constexpr int kSamplesPerArc = 64;

std::string fixed(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  std::string s = buf;
  return s == "-0.000" ? "0.000" : s;
}

struct Projector {
  Vector view, e1, e2;
  double centre, radius;

  std::pair<double, double> screen(const Vector& p) const {
    return {centre + radius * dot(p, e1), centre - radius * dot(p, e2)};
  }
  bool front(const Vector& p) const { return dot(p, view) >= 0.0; }
};

void emit_runs(std::ostringstream& os, const std::vector<Vector>& samples, const Projector& pr) {
  std::size_t start = 0;
  while (start + 1 < samples.size()) {
    const bool front = pr.front(samples[start]);
    std::size_t end = start;
    while (end + 1 < samples.size() && pr.front(samples[end + 1]) == front) ++end;
    // Close the run at the first sample of the next run so pieces join.
    const std::size_t last = std::min(end + 1, samples.size() - 1);
    if (last > start) {
      os << "    <path class=\"" << (front ? "front" : "back") << "\" d=\"";
      for (std::size_t i = start; i <= last; ++i) {
        const auto [x, y] = pr.screen(samples[i]);
        os << (i == start ? "M" : " L") << fixed(x) << ' ' << fixed(y);
      }
      os << "\"/>\n";
    }
    start = end + 1;
  }
}

}  // namespace

std::string render_svg(const SphericalDrawing& dr, const Vector& view, int size_px) {
  Projector pr;
  pr.view = normalize(view);
  tangent_frame(pr.view, pr.e1, pr.e2);
  pr.centre = size_px / 2.0;
  pr.radius = 0.45 * size_px;

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size_px << "\" height=\"" << size_px
     << "\" viewBox=\"0 0 " << size_px << ' ' << size_px << "\">\n";
  os << "  <style>\n"
        "    .sphere { fill: none; stroke: #999; stroke-width: 1; }\n"
        "    .edge path { fill: none; stroke: #333; stroke-width: 1.5; }\n"
        "    .edge path.back { stroke-dasharray: 4 3; opacity: 0.45; }\n"
        "    .vertex.red { fill: #d62728; }\n"
        "    .vertex.blue { fill: #1f77b4; }\n"
        "    .vertex.back { opacity: 0.45; }\n"
        "  </style>\n";
  os << "  <circle class=\"sphere\" cx=\"" << fixed(pr.centre) << "\" cy=\"" << fixed(pr.centre) << "\" r=\""
     << fixed(pr.radius) << "\"/>\n";

  for (std::size_t k = 0; k < dr.edges.size(); ++k) {
    const DrawnEdge& e = dr.edges[k];
    std::vector<Vector> samples;
    for (std::size_t s = 0; s < 2; ++s) {
      const GreatArc arc(e.polyline[s], e.polyline[s + 1]);
      for (int i = (s == 0 ? 0 : 1); i <= kSamplesPerArc; ++i) samples.push_back(arc.point_at(double(i) / kSamplesPerArc));
    }
    os << "  <g class=\"edge\" data-edge=\"" << k << "\" data-from=\"" << e.from_hub << "\" data-to=\"" << e.to_hub
       << "\">\n";
    emit_runs(os, samples, pr);
    os << "  </g>\n";
  }
  for (std::size_t h = 0; h < dr.vertices.size(); ++h) {
    const CoverVertex& v = dr.vertices[h];
    const auto [x, y] = pr.screen(v.position);
    os << "  <circle class=\"vertex " << to_string(v.color) << ' ' << (pr.front(v.position) ? "front" : "back")
       << "\" data-owner=\"" << v.owner << "\" cx=\"" << fixed(x) << "\" cy=\"" << fixed(y) << "\" r=\"4\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace diamgraph
