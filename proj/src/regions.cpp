#include "diamgraph/regions.hpp"

#include <algorithm>
#include <sstream>
#include <string>

#include "diamgraph/errors.hpp"

namespace diamgraph {

const char* to_string(Color c) { return c == Color::Red ? "red" : "blue"; }

SphericalRegion build_region(const DiameterGraph& g, std::size_t x, const Tolerance& tol) {
  if (g.dimension() != 3) throw DimensionUnsupported("spherical regions are built on S^2 only");
  if (g.degree(x) < 2) {
    throw DegenerateRegion("vertex " + std::to_string(x) + " has degree < 2; prune the graph first");
  }
  const Vector px = g.points().point(x);
  std::vector<Vector> dirs;
  for (std::size_t y : g.neighbors(x)) dirs.push_back(normalize(g.points().point(y) - px, tol));

  SphericalRegion r;
  r.owner = x;
  r.color = Color::Red;
  r.shape = spherical_hull(dirs, tol);
  const auto& nb = g.neighbors(x);
  for (std::size_t k = 0; k < nb.size(); ++k) {
    const bool extreme = std::find(r.shape.vertex_inputs.begin(), r.shape.vertex_inputs.end(), k) !=
                         r.shape.vertex_inputs.end();
    r.neighbor_dirs.push_back({nb[k], dirs[k], extreme});
  }
  return r;
}

std::vector<SphericalRegion> build_regions(const DiameterGraph& g, const Tolerance& tol) {
  std::vector<SphericalRegion> out;
  out.reserve(g.vertex_count());
  for (std::size_t x = 0; x < g.vertex_count(); ++x) out.push_back(build_region(g, x, tol));
  return out;
}

SphericalRegion antipode(const SphericalRegion& r) {
  SphericalRegion b = r;
  b.color = r.color == Color::Red ? Color::Blue : Color::Red;
  for (Vector& v : b.shape.vertices) v = -v;
  b.shape.witness = -r.shape.witness;
  if (b.shape.kind == HullKind::Polygon) {
    std::reverse(b.shape.vertices.begin(), b.shape.vertices.end());
    std::reverse(b.shape.vertex_inputs.begin(), b.shape.vertex_inputs.end());
  }
  for (NeighborDirection& nd : b.neighbor_dirs) nd.direction = -nd.direction;
  return b;
}

Vector interior_point(const SphericalRegion& r, const Tolerance& tol) {
  if (r.kind() == HullKind::Point) throw DegenerateRegion("a point region has no interior");
  Vector sum(3);
  for (const Vector& v : r.vertices()) sum += v;
  return normalize(sum, tol);
}

namespace {

std::string describe(const Vector& v) {
  std::ostringstream os;
  os.precision(6);
  os << '(' << v[0] << ", " << v[1] << ", " << v[2] << ')';
  return os.str();
}

void add_point(RegionContact& c, const Vector& p, const Tolerance& tol) {
  for (const Vector& q : c.points) {
    if (angle_between(p, q) <= 4.0 * tol.eps_geo) return;
  }
  c.points.push_back(p);
}

void vertex_scan(const SphericalRegion& from, const SphericalRegion& into, RegionContact& c,
                 const Tolerance& tol) {
  for (const Vector& v : from.vertices()) {
    const Membership m = point_in_region(v, into.shape, tol);
    if (m == Membership::Outside) continue;
    if (m == Membership::Interior && from.kind() != HullKind::Point) {
      c.overlap = true;
      c.evidence.push_back("vertex " + describe(v) + " of region " + std::to_string(from.owner) +
                           " is interior to region " + std::to_string(into.owner));
    } else {
      c.evidence.push_back("vertex " + describe(v) + " of region " + std::to_string(from.owner) +
                           " lies in region " + std::to_string(into.owner));
    }
    add_point(c, v, tol);
  }
}

void representative_scan(const SphericalRegion& from, const SphericalRegion& into, RegionContact& c,
                         const Tolerance& tol) {
  if (from.kind() == HullKind::Point) return;
  const Vector rep = interior_point(from, tol);
  const Membership m = point_in_region(rep, into.shape, tol);
  if (m == Membership::Outside) return;
  if (from.kind() == HullKind::Polygon || m == Membership::Interior) {
    c.overlap = true;
    c.evidence.push_back("interior point of region " + std::to_string(from.owner) + " lies in region " +
                         std::to_string(into.owner));
  }
  add_point(c, rep, tol);
}

}  // namespace

RegionContact region_contact(const SphericalRegion& first, const SphericalRegion& second,
                             const Tolerance& tol) {
  RegionContact c;
  const auto arcs1 = first.shape.boundary_arcs(tol);
  const auto arcs2 = second.shape.boundary_arcs(tol);
  const bool both_polygons = first.kind() == HullKind::Polygon && second.kind() == HullKind::Polygon;
  for (const GreatArc& a : arcs1) {
    for (const GreatArc& b : arcs2) {
      const ArcIntersection ai = arc_intersect(a, b, tol);
      if (ai.relation == ArcRelation::Disjoint) continue;
      if (ai.relation == ArcRelation::Overlap ||
          (ai.relation == ArcRelation::ProperCrossing && both_polygons)) {
        c.overlap = true;
      }
      c.evidence.push_back(std::string("boundary arcs meet: ") + to_string(ai.relation) + " at " +
                           describe(ai.points.front()));
      for (const Vector& p : ai.points) add_point(c, p, tol);
    }
  }
  vertex_scan(first, second, c, tol);
  vertex_scan(second, first, c, tol);
  representative_scan(first, second, c, tol);
  representative_scan(second, first, c, tol);
  return c;
}

namespace {

const SphericalRegion& region_of(const std::vector<SphericalRegion>& regions, std::size_t v) {
  if (v >= regions.size() || regions[v].owner != v) {
    throw std::invalid_argument("regions must be indexed by owner vertex");
  }
  return regions[v];
}

}  // namespace

VerificationReport check_lemma1(const DiameterGraph& g, const std::vector<SphericalRegion>& regions,
                                const Tolerance& tol) {
  auto r = make_report("lemma1", "red regions R(x), R(y) of distinct vertices are disjoint", tol);
  const std::size_t n = g.vertex_count();
  std::int64_t pairs = 0;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      ++pairs;
      const RegionContact c = region_contact(region_of(regions, x), region_of(regions, y), tol);
      if (c.points.empty() && !c.overlap) continue;
      r.fail({"regions_meet", "R(" + std::to_string(x) + ") and R(" + std::to_string(y) + ") meet: " +
                                  (c.evidence.empty() ? std::string("?") : c.evidence.front()),
              {x, y}, c.points});
    }
  }
  r.counts["n"] = static_cast<std::int64_t>(n);
  r.counts["pairs"] = pairs;
  return r;
}

VerificationReport check_lemma2(const DiameterGraph& g, const std::vector<SphericalRegion>& regions,
                                const Tolerance& tol) {
  auto r = make_report("lemma2",
                       "R(x) meets B(y) only if xy is a diameter, and then exactly at y - x", tol);
  const std::size_t n = g.vertex_count();
  std::vector<SphericalRegion> blue;
  blue.reserve(n);
  for (std::size_t v = 0; v < n; ++v) blue.push_back(antipode(region_of(regions, v)));

  std::int64_t pairs = 0, touching = 0;
  for (std::size_t x = 0; x < n; ++x) {
    const SphericalRegion& red = region_of(regions, x);
    for (std::size_t y = 0; y < n; ++y) {
      ++pairs;
      const RegionContact c = region_contact(red, blue[y], tol);
      const std::string tag = "R(" + std::to_string(x) + "), B(" + std::to_string(y) + ")";
      if (x == y || !g.has_edge(x, y)) {
        if (!c.points.empty() || c.overlap) {
          r.fail({"unexpected_contact",
                  tag + " meet without a diameter: " + (c.evidence.empty() ? std::string("?") : c.evidence.front()),
                  {x, y}, c.points});
        }
        continue;
      }
      ++touching;
      const Vector expected = normalize(g.points().point(y) - g.points().point(x), tol);
      if (c.overlap) {
        r.fail({"overlap", tag + " overlap in more than a point", {x, y}, c.points});
        continue;
      }
      bool found = false;
      for (const Vector& p : c.points) {
        if (angle_between(p, expected) <= tol.eps_geo) {
          found = true;
        } else {
          r.fail({"extra_contact", tag + " meet away from y - x", {x, y}, {p, expected}});
        }
      }
      if (!found) r.fail({"missing_contact", tag + " do not meet at y - x", {x, y}, {expected}});
    }
  }
  r.counts["n"] = static_cast<std::int64_t>(n);
  r.counts["pairs"] = pairs;
  r.counts["diameter_contacts"] = touching;
  return r;
}

VerificationReport check_region_membership(const DiameterGraph& g,
                                           const std::vector<SphericalRegion>& regions,
                                           const Tolerance& tol) {
  auto r = make_report("region_membership",
                       "each R(x) contains its diameter directions and lies in an open hemisphere", tol);
  std::int64_t non_extreme = 0;
  for (std::size_t x = 0; x < g.vertex_count(); ++x) {
    const SphericalRegion& reg = region_of(regions, x);
    for (const NeighborDirection& nd : reg.neighbor_dirs) {
      if (!nd.extreme) ++non_extreme;
      if (point_in_region(nd.direction, reg.shape, tol) == Membership::Outside) {
        r.fail({"direction_outside", "direction to " + std::to_string(nd.neighbor) + " is outside R(" +
                                         std::to_string(x) + ")",
                {x, nd.neighbor}, {nd.direction}});
      }
    }
    for (const Vector& v : reg.vertices()) {
      if (!(dot(v, reg.shape.witness) > 0.0)) {
        r.fail({"hemisphere", "R(" + std::to_string(x) + ") vertex not in witness hemisphere", {x}, {v}});
      }
    }
  }
  r.counts["n"] = static_cast<std::int64_t>(g.vertex_count());
  r.counts["non_extreme_directions"] = non_extreme;
  if (non_extreme > 0) r.notes.push_back("some diameter directions are not hull vertices of their region");
  return r;
}

}  // namespace diamgraph
