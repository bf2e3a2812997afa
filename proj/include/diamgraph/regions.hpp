#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "diamgraph/diameter_graph.hpp"
#include "diamgraph/report.hpp"
#include "diamgraph/sphere.hpp"

namespace diamgraph {

enum class Color { Red, Blue };

const char* to_string(Color c);

struct NeighborDirection {
  std::size_t neighbor = 0;
  Vector direction;      // unit y - x for the red region, its negation for blue
  bool extreme = true;   // false when the direction is not a hull vertex
};

/// The sphere section of the cone spanned by the diameter directions at one
/// vertex (red), or its antipodal image (blue).
struct SphericalRegion {
  std::size_t owner = 0;
  Color color = Color::Red;
  SphericalHull shape;
  std::vector<NeighborDirection> neighbor_dirs;

  HullKind kind() const { return shape.kind; }
  const std::vector<Vector>& vertices() const { return shape.vertices; }
};

/// Red region of vertex x. Requires d = 3 and degree(x) >= 2 (throws
/// DegenerateRegion otherwise); NotInHemisphere propagates from the hull.
SphericalRegion build_region(const DiameterGraph& g, std::size_t x, const Tolerance& tol = {});

/// Red regions of every vertex, indexed by vertex.
std::vector<SphericalRegion> build_regions(const DiameterGraph& g, const Tolerance& tol = {});

/// Blue image: vertices negated and reversed so polygons stay counterclockwise.
SphericalRegion antipode(const SphericalRegion& r);

/// Normalized vertex sum; interior for polygons, arc midpoint for arcs.
/// Throws DegenerateRegion for point regions.
Vector interior_point(const SphericalRegion& r, const Tolerance& tol = {});

/// Where two regions meet, found from boundary arc intersections, vertex
/// membership and representative-point containment.
struct RegionContact {
  std::vector<Vector> points;        // touch points (distinct up to tolerance)
  bool overlap = false;              // a common piece of positive length or area
  std::vector<std::string> evidence; // human readable description per finding
};

RegionContact region_contact(const SphericalRegion& first, const SphericalRegion& second,
                             const Tolerance& tol = {});

/// Red regions of distinct vertices are pairwise disjoint.
VerificationReport check_lemma1(const DiameterGraph& g, const std::vector<SphericalRegion>& regions,
                                const Tolerance& tol = {});

/// R(x) and B(y) meet only when xy is a diameter, and then exactly in the
/// direction y - x. Includes the x = y case.
VerificationReport check_lemma2(const DiameterGraph& g, const std::vector<SphericalRegion>& regions,
                                const Tolerance& tol = {});

/// Every neighbor direction is a member of its region and each region has a
/// hemisphere witness.
VerificationReport check_region_membership(const DiameterGraph& g,
                                           const std::vector<SphericalRegion>& regions,
                                           const Tolerance& tol = {});

}  // namespace diamgraph
