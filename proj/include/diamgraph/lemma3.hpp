#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "diamgraph/report.hpp"

#include "diamgraph/tolerance.hpp"
#include "diamgraph/vector.hpp"

namespace diamgraph {

/// Unit vectors x_i with nonnegative weights whose combination is a unit
/// vector, and a point y within distance 1 of every x_i.
struct Lemma3Instance {
  std::size_t dimension = 0;
  std::vector<Vector> xs;
  std::vector<double> lambdas;
  Vector y;
};

/// Result of the ball inequality |y - sum l_i x_i| <= 1, together with the
/// two intermediate inequalities of its proof:
///   (a) 1 <= |sum l_i x_i| <= sum l_i
///   (b) -2 <x_i, y> <= -|y|^2 for each i.
struct Lemma3Audit {
  bool holds = false;
  double distance = 0.0;        // |y - sum l_i x_i|
  double slack = 0.0;           // distance - 1
  double combination_norm = 0.0;
  double lambda_sum = 0.0;
  bool triangle_chain_holds = false;
  std::vector<double> inner_terms;  // -2 <x_i, y>
  double neg_y_norm2 = 0.0;         // -|y|^2
  bool inner_bounds_hold = false;
};

/// Throws InvalidInstance if the hypotheses fail beyond tolerance.
Lemma3Audit check_lemma3(const Lemma3Instance& inst, const Tolerance& tol = {});

/// Deterministic per seed. Directions are resampled until their centroid
/// lies strictly inside every unit ball around them; y is drawn along a
/// random ray from the centroid, on the boundary of the ball intersection
/// with probability 1/4. Throws SamplingExhausted if no admissible
/// direction set is found within the attempt budget.
Lemma3Instance random_lemma3_instance(std::size_t dimension, std::size_t k, std::uint64_t seed);

/// `trials` random instances per dimension, k cycling through 1..6. The
/// report's metrics carry the worst slack |y - sum l_i x_i| - 1 seen.
VerificationReport lemma3_suite(std::span<const std::size_t> dimensions, std::size_t trials,
                                std::uint64_t seed, const Tolerance& tol = {});

}  // namespace diamgraph
