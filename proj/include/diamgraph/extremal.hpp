#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "diamgraph/point_set.hpp"
#include "diamgraph/tolerance.hpp"

namespace diamgraph {

/// Regular tetrahedron with unit edges.
PointSet gen_tetrahedron();

/// Two apexes at (+-1/2, 0, 0) and n - 2 points evenly spaced on an arc of
/// the circle y^2 + z^2 = 3/4 in the plane x = 0, endpoints included, with
/// endpoint chord exactly 1. Has exactly 2n - 2 diameters. Requires n >= 4.
PointSet gen_spindle(std::size_t n);

enum class SampleModel { Ball, Sphere };

/// Uniform in the unit ball or on the unit sphere; deterministic per seed;
/// near-coincident samples are redrawn.
PointSet gen_random(std::size_t n, std::size_t dimension, SampleModel model, std::uint64_t seed,
                    const Tolerance& tol = {});

struct SearchConfig {
  std::size_t n = 4;
  std::size_t iterations = 10000;
  double step_scale = 0.05;
  double temperature_start = 0.5;
  double temperature_decay = 0.0;  // 0: cool to temperature_start / 100 over the run
  double softness = 0.05;          // delta: pairs within (1 - delta) D count fractionally
  std::uint64_t seed = 1;
  std::size_t restarts = 1;
  std::size_t checkpoint_every = 1000;
  std::optional<PointSet> initial;  // starting configuration for every restart

  /// Per-iteration factor actually applied.
  double effective_decay() const;
  /// Throws std::invalid_argument unless n >= 4, delta in (0, 0.1),
  /// iterations >= 1, restarts >= 1 and the initial set (if any) has n
  /// points in R^3.
  void validate() const;
};

struct TraceRecord {
  std::size_t restart = 0;
  std::size_t iteration = 0;
  double temperature = 0.0;
  double objective = 0.0;
  std::size_t best_count = 0;
};

struct RestartResult {
  PointSet best;
  std::size_t count = 0;
  std::vector<TraceRecord> trace;
};

struct SearchResult {
  PointSet best;
  std::size_t count = 0;
  std::vector<RestartResult> restarts;
};

/// Smoothed diameter count: each pair contributes
/// clamp((dist - (1 - delta) D) / (delta D), 0, 1).
double smoothed_diameter_count(const PointSet& ps, double softness);

/// Nudges the pairs within (1 - delta) of the diameter onto exactly equal
/// lengths (Gauss-Newton with a minimum norm step), returning the variant
/// with the largest exact diameter count.
PointSet polish_configuration(const PointSet& ps, double softness, const Tolerance& tol = {});

/// Exact diameter pair count via build_diameter_graph.
std::size_t exact_diameter_count(const PointSet& ps, const Tolerance& tol = {});

/// Simulated annealing on the smoothed count, restarts run concurrently.
/// Each checkpoint polishes the current state and recounts exactly; a count
/// above 2n - 2 throws SearchBoundViolation.
SearchResult search_max_diameters(const SearchConfig& cfg, const Tolerance& tol = {});

}  // namespace diamgraph
