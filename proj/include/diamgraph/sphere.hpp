#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "diamgraph/tolerance.hpp"
#include "diamgraph/vector.hpp"

// Spherical predicates on S^2: great arcs, hemisphere witnesses, convex
// hulls of direction sets and point membership.

namespace diamgraph {

/// Throws NearZeroVector if |v| <= tol.eps_geo.
Vector normalize(const Vector& v, const Tolerance& tol = {});

/// Minor great-circle arc between two non-antipodal unit vectors in R^3.
class GreatArc {
 public:
  /// Validates unit length (eps_unit) and rejects (near) antipodal endpoints.
  GreatArc(Vector a, Vector b, const Tolerance& tol = {});

  const Vector& a() const { return a_; }
  const Vector& b() const { return b_; }
  double length() const;
  /// Unit normal of the supporting great circle, oriented a -> b.
  Vector normal() const;
  /// Point at fraction t of the way from a to b along the arc.
  Vector point_at(double t) const;

 private:
  Vector a_;
  Vector b_;
};

/// Geodesic distance from a unit vector to the closed arc.
double arc_distance(const Vector& p, const GreatArc& arc);

enum class ArcRelation {
  Disjoint,
  SharedEndpoint,   // an endpoint of each arc coincides, nothing else in common
  Touch,            // an endpoint of one arc lies in the relative interior of the other
  ProperCrossing,   // the relative interiors meet transversally at one point
  Overlap,          // collinear with a common subarc of positive length
};

const char* to_string(ArcRelation r);

struct ArcIntersection {
  ArcRelation relation = ArcRelation::Disjoint;
  // One point for SharedEndpoint/Touch/ProperCrossing; the two ends of the
  // common subarc for Overlap; empty for Disjoint.
  std::vector<Vector> points;
};

ArcIntersection arc_intersect(const GreatArc& first, const GreatArc& second,
                              const Tolerance& tol = {});

/// A direction w with <w, u> > eps_geo for every input u, if one is found.
/// Tries the normalized sum first, then a perceptron style search.
std::optional<Vector> hemisphere_witness(std::span<const Vector> directions,
                                         const Tolerance& tol = {});

enum class HullKind { Point, Arc, Polygon };

const char* to_string(HullKind k);

/// Convex hull of a set of unit directions that fits in an open hemisphere.
/// Polygon vertices are counterclockwise as seen from outside the sphere.
struct SphericalHull {
  HullKind kind = HullKind::Point;
  std::vector<Vector> vertices;
  // vertex_inputs[k] is the index of the input that produced vertices[k].
  std::vector<std::size_t> vertex_inputs;
  Vector witness;

  /// Boundary arcs: polygon edges, the arc itself, or none for a point.
  std::vector<GreatArc> boundary_arcs(const Tolerance& tol = {}) const;
};

/// Number of singular values of the stacked directions above eps_geo.
int direction_rank(std::span<const Vector> directions, const Tolerance& tol = {});

/// Throws NotInHemisphere if no hemisphere witness exists (or is found).
SphericalHull spherical_hull(std::span<const Vector> directions, const Tolerance& tol = {});

enum class Membership { Outside, Boundary, Interior };

const char* to_string(Membership m);

/// Classifies a unit vector against a hull. Only polygons have an interior;
/// the relative interior of an arc is reported as Boundary unless
/// `arc_relative_interior_is_interior` is set.
Membership point_in_region(const Vector& p, const SphericalHull& hull,
                           const Tolerance& tol = {},
                           bool arc_relative_interior_is_interior = false);

/// Orthonormal e1, e2 spanning the tangent plane at unit n with e1 x e2 = n.
void tangent_frame(const Vector& n, Vector& e1, Vector& e2);

}  // namespace diamgraph
