#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "diamgraph/diameter_graph.hpp"
#include "diamgraph/regions.hpp"
#include "diamgraph/report.hpp"

namespace diamgraph {

/// Hub on the sphere: the red or blue copy of one graph vertex. Hub index
/// 2 * owner is red, 2 * owner + 1 is blue.
struct CoverVertex {
  std::size_t owner = 0;
  Color color = Color::Red;
  Vector position;
};

inline std::size_t red_hub(std::size_t v) { return 2 * v; }
inline std::size_t blue_hub(std::size_t v) { return 2 * v + 1; }

/// One edge of the cover, drawn as two geodesic pieces
/// hub(from) -> junction -> hub(to). The junction is the diameter direction
/// and is not a vertex of the cover graph.
struct DrawnEdge {
  Edge diameter;            // graph edge this drawn edge lifts
  std::size_t from_hub = 0; // red hub
  std::size_t to_hub = 0;   // blue hub
  std::array<Vector, 3> polyline;
  std::size_t twin = 0;     // index of the antipodal drawn edge
};

struct SphericalDrawing {
  std::size_t graph_vertices = 0;
  std::vector<CoverVertex> vertices;
  std::vector<DrawnEdge> edges;
  // Per hub: incident drawn edge indices in counterclockwise order as seen
  // from outside the sphere.
  std::vector<std::vector<std::size_t>> rotation;
  // Drawn edges whose junction is not a hull vertex of its red region.
  std::vector<std::size_t> non_extreme_junctions;
};

/// Builds the antipodally symmetric drawing of the double cover of a pruned
/// diameter graph in R^3. `regions` are the red regions of `core`.
/// Throws DegenerateRegion or JunctionCoincidesWithHub.
SphericalDrawing build_double_cover(const DiameterGraph& core, const std::vector<SphericalRegion>& regions,
                                    const Tolerance& tol = {});

/// Convenience: regions + drawing from a core graph.
SphericalDrawing build_double_cover(const DiameterGraph& core, const Tolerance& tol = {});

/// Rebuilds the rotation system from the current polylines (useful after
/// editing a drawing).
void recompute_rotation(SphericalDrawing& dr);

/// Every pair of geodesic pieces is disjoint or shares a permitted endpoint
/// (a common hub, or the junction of one drawn edge).
VerificationReport verify_no_crossings(const SphericalDrawing& dr, const Tolerance& tol = {});

/// Central symmetry, proper 2-colouring and lift fidelity of the drawing.
VerificationReport verify_drawing_structure(const DiameterGraph& core, const SphericalDrawing& dr,
                                            const Tolerance& tol = {});

struct EulerResult {
  std::int64_t vertices = 0;
  std::int64_t edges = 0;
  std::int64_t faces = 0;       // faces of the whole drawing on one sphere
  std::int64_t components = 0;
  std::int64_t face_degree_sum = 0;
  bool pass = false;
};

/// Face tracing on the rotation system with junctions smoothed. Passes iff
/// V - E + F = 1 + C, E <= 2V - 4 and E = 2 |E_diam| <= 4n - 4 over the
/// graph vertices present. An empty drawing passes vacuously. Throws
/// InconsistentRotation if tracing does not close.
EulerResult euler_check(const SphericalDrawing& dr);

VerificationReport euler_report(const SphericalDrawing& dr, const Tolerance& tol = {});

}  // namespace diamgraph
