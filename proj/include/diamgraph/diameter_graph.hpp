#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "diamgraph/point_set.hpp"
#include "diamgraph/report.hpp"
#include "diamgraph/tolerance.hpp"

namespace diamgraph {

struct Edge {
  std::size_t u = 0;
  std::size_t v = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct DiameterPair {
  double diameter = 0.0;
  std::size_t i = 0;
  std::size_t j = 0;
};

/// Points (rescaled so the diameter is 1) together with every diameter pair.
class DiameterGraph {
 public:
  DiameterGraph() = default;
  /// Edges are canonicalized to u < v and sorted. Throws std::invalid_argument
  /// on self loops, duplicates or out of range indices.
  DiameterGraph(PointSet points, std::vector<Edge> edges, double original_diameter = 1.0);

  const PointSet& points() const { return points_; }
  std::size_t dimension() const { return points_.dimension(); }
  std::size_t vertex_count() const { return points_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  double diameter() const { return 1.0; }
  /// Diameter of the input before rescaling.
  double original_diameter() const { return original_diameter_; }

  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<std::size_t>& neighbors(std::size_t v) const { return adjacency_[v]; }
  std::size_t degree(std::size_t v) const { return adjacency_[v].size(); }
  bool has_edge(std::size_t a, std::size_t b) const;

 private:
  PointSet points_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> adjacency_;
  double original_diameter_ = 1.0;
};

/// Brute force over all pairs. Throws TooFewPoints (n < 2) or
/// DuplicatePoints. The witness is the first maximal pair in (i, j) order.
DiameterPair compute_diameter(const PointSet& ps, const Tolerance& tol = {});

/// Same diameter as compute_diameter for d = 3, using extreme-direction
/// polytope pruning and a radial bound to skip most pairs.
DiameterPair compute_diameter_fast(const PointSet& ps, const Tolerance& tol = {});

/// Rescales to diameter 1 and joins every pair whose distance is at least
/// (1 - eps_diam) of the diameter. Throws ZeroDiameter if the diameter is 0.
DiameterGraph build_diameter_graph(const PointSet& ps, const Tolerance& tol = {});

/// Removal order of the degree <= 1 pruning, in original vertex indices.
struct PruneRecord {
  struct Removal {
    std::size_t vertex = 0;
    std::optional<Edge> edge;  // the incident edge at removal time, if any
  };
  std::vector<Removal> removals;
};

struct PruneResult {
  DiameterGraph core;
  PruneRecord record;
  std::vector<std::size_t> core_to_original;
};

/// Repeatedly deletes vertices of degree at most 1 until none remain.
PruneResult prune_low_degree(const DiameterGraph& g);

/// Applies a record to `original` and returns the resulting core together
/// with its vertex mapping. Throws std::invalid_argument if a removal is not
/// legal at its turn (vertex gone, degree > 1, or edge mismatch).
PruneResult replay_prune(const DiameterGraph& original, const PruneRecord& record);

/// Re-inserts the removed vertices and edges of `pruned` into a graph over
/// the original points.
DiameterGraph restore_pruned(const PruneResult& pruned, const DiameterGraph& original);

/// Edge count <= 2n - 2 for n >= 4 points in R^3. Throws
/// DimensionUnsupported for d != 3 and TooFewPoints for n < 4.
VerificationReport verify_bound(const DiameterGraph& g, const Tolerance& tol = {});

/// The bound on the pruned core implies the bound on the original: every
/// removal contributes one vertex and at most one edge.
VerificationReport verify_bound_via_core(const DiameterGraph& original, const PruneResult& pruned,
                                         const Tolerance& tol = {});

}  // namespace diamgraph
