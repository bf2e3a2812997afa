#include "diamgraph/lemma3.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "diamgraph/errors.hpp"

namespace diamgraph {

Lemma3Audit check_lemma3(const Lemma3Instance& inst, const Tolerance& tol) {
  const std::size_t d = inst.dimension;
  if (inst.xs.empty() || inst.xs.size() != inst.lambdas.size()) {
    throw InvalidInstance("need k >= 1 directions with one weight each");
  }
  if (inst.y.size() != d) throw InvalidInstance("y has the wrong dimension");
  Vector combo(d);
  double lambda_sum = 0.0;
  for (std::size_t i = 0; i < inst.xs.size(); ++i) {
    const Vector& x = inst.xs[i];
    if (x.size() != d) throw InvalidInstance("direction has the wrong dimension");
    if (std::abs(norm(x) - 1.0) > tol.eps_unit) throw InvalidInstance("direction is not a unit vector");
    if (inst.lambdas[i] < -tol.eps_unit) throw InvalidInstance("negative weight");
    if (distance(inst.y, x) > 1.0 + tol.eps_geo) throw InvalidInstance("y is farther than 1 from a direction");
    combo += x * inst.lambdas[i];
    lambda_sum += inst.lambdas[i];
  }
  Lemma3Audit a;
  a.combination_norm = norm(combo);
  if (std::abs(a.combination_norm - 1.0) > tol.eps_unit) {
    throw InvalidInstance("weighted combination is not a unit vector");
  }
  a.lambda_sum = lambda_sum;
  a.distance = distance(inst.y, combo);
  a.slack = a.distance - 1.0;
  a.holds = a.distance <= 1.0 + tol.eps_geo;

  const double eps = tol.eps_geo;
  a.triangle_chain_holds = 1.0 <= a.combination_norm + eps && a.combination_norm <= lambda_sum + eps;
  a.neg_y_norm2 = -squared_norm(inst.y);
  a.inner_bounds_hold = true;
  for (const Vector& x : inst.xs) {
    const double term = -2.0 * dot(x, inst.y);
    a.inner_terms.push_back(term);
    // |y - x|^2 <= 1 expands to exactly this; the slack mirrors the hypothesis.
    a.inner_bounds_hold = a.inner_bounds_hold && term <= a.neg_y_norm2 + 3.0 * eps;
  }
  return a;
}

namespace {

Vector random_unit(std::size_t d, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  while (true) {
    Vector v(d);
    for (std::size_t i = 0; i < d; ++i) v[i] = gauss(rng);
    const double n = norm(v);
    if (n > 1e-6) {
      v /= n;
      return v / norm(v);
    }
  }
}

}  // namespace

Lemma3Instance random_lemma3_instance(std::size_t dimension, std::size_t k, std::uint64_t seed) {
  if (dimension < 2 || k < 1) throw std::invalid_argument("random_lemma3_instance needs d >= 2, k >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  constexpr int kAttempts = 100000;

  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    Lemma3Instance inst;
    inst.dimension = dimension;
    Vector centroid(dimension);
    for (std::size_t i = 0; i < k; ++i) {
      inst.xs.push_back(random_unit(dimension, rng));
      centroid += inst.xs.back();
    }
    centroid /= double(k);
    bool centred = true;
    for (const Vector& x : inst.xs) centred = centred && distance(centroid, x) < 1.0 - 1e-6;
    if (!centred) continue;

    Vector combo(dimension);
    for (const Vector& x : inst.xs) {
      inst.lambdas.push_back(0.05 + 0.95 * unit(rng));
      combo += x * inst.lambdas.back();
    }
    const double cn = norm(combo);
    if (cn < 1e-6) continue;
    for (double& l : inst.lambdas) l /= cn;

    // Largest step along u that stays inside every unit ball around x_i.
    const Vector u = random_unit(dimension, rng);
    double t_max = std::numeric_limits<double>::infinity();
    for (const Vector& x : inst.xs) {
      const Vector w = centroid - x;
      const double b = dot(u, w);
      const double t = -b + std::sqrt(b * b - squared_norm(w) + 1.0);
      t_max = std::min(t_max, t);
    }
    const double f = unit(rng) < 0.25 ? 1.0 : std::pow(unit(rng), 1.0 / double(dimension));
    inst.y = centroid + u * (f * t_max);
    return inst;
  }
  throw SamplingExhausted("no admissible direction set found within the attempt budget");
}

VerificationReport lemma3_suite(std::span<const std::size_t> dimensions, std::size_t trials,
                                std::uint64_t seed, const Tolerance& tol) {
  auto r = make_report("lemma3",
                       "unit x_i, unit sum l_i x_i with l_i >= 0, and |y - x_i| <= 1 imply "
                       "|y - sum l_i x_i| <= 1, in every dimension",
                       tol);
  double worst = -std::numeric_limits<double>::infinity();
  std::int64_t run = 0;
  for (std::size_t d : dimensions) {
    for (std::size_t t = 0; t < trials; ++t) {
      const std::uint64_t s = seed * 0x9E3779B97F4A7C15ull + d * 1000003ull + t;
      const std::size_t k = 1 + t % 6;
      ++run;
      try {
        const Lemma3Instance inst = random_lemma3_instance(d, k, s);
        const Lemma3Audit a = check_lemma3(inst, tol);
        worst = std::max(worst, a.slack);
        if (!a.holds || !a.triangle_chain_holds || !a.inner_bounds_hold) {
          r.fail({"lemma3", "instance d=" + std::to_string(d) + " k=" + std::to_string(k) + " seed=" +
                                std::to_string(s) + " violates the inequality chain",
                  {d, k}, {}});
        }
      } catch (const Error& e) {
        r.fail({"lemma3_instance", e.what(), {d, k}, {}});
      }
    }
  }
  r.counts["instances"] = run;
  r.counts["dimensions"] = static_cast<std::int64_t>(dimensions.size());
  if (run > 0) r.metrics["max_slack"] = worst;
  return r;
}

}  // namespace diamgraph
