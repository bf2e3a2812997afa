#include "diamgraph/extremal.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <exception>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>

#include "diamgraph/diameter_graph.hpp"
#include "diamgraph/errors.hpp"

namespace diamgraph {

PointSet gen_tetrahedron() {
  const double h = 1.0 / (2.0 * std::numbers::sqrt2);
  return PointSet(3, std::vector<double>{0.5, 0.0, -h, -0.5, 0.0, -h, 0.0, 0.5, h, 0.0, -0.5, h});
}

PointSet gen_spindle(std::size_t n) {
  if (n < 4) throw std::invalid_argument("spindle needs n >= 4");
  const double radius = std::sqrt(3.0) / 2.0;
  const double span = 2.0 * std::asin(1.0 / std::sqrt(3.0));
  std::vector<double> c{-0.5, 0.0, 0.0, 0.5, 0.0, 0.0};
  const std::size_t arc_points = n - 2;
  for (std::size_t i = 0; i < arc_points; ++i) {
    const double phi = -0.5 * span + span * double(i) / double(arc_points - 1);
    c.insert(c.end(), {0.0, radius * std::cos(phi), radius * std::sin(phi)});
  }
  return PointSet(3, std::move(c));
}

namespace {

void sample_point(std::size_t d, SampleModel model, std::mt19937_64& rng, double* out) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double len = 0.0;
  while (!(len > 1e-12)) {
    len = 0.0;
    for (std::size_t k = 0; k < d; ++k) {
      out[k] = gauss(rng);
      len += out[k] * out[k];
    }
    len = std::sqrt(len);
  }
  const double r = model == SampleModel::Ball ? std::pow(unit(rng), 1.0 / double(d)) : 1.0;
  for (std::size_t k = 0; k < d; ++k) out[k] *= r / len;
}

}  // namespace

PointSet gen_random(std::size_t n, std::size_t dimension, SampleModel model, std::uint64_t seed,
                    const Tolerance& tol) {
  if (n < 2 || dimension < 2) throw std::invalid_argument("gen_random needs n >= 2 and d >= 2");
  std::mt19937_64 rng(seed);
  std::vector<double> c(n * dimension);
  for (std::size_t i = 0; i < n; ++i) sample_point(dimension, model, rng, &c[i * dimension]);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    PointSet ps(dimension, c);
    const auto dup = find_near_duplicate(ps, tol);
    if (!dup) return ps;
    sample_point(dimension, model, rng, &c[dup->second * dimension]);
  }
  throw SamplingExhausted("could not draw distinct points");
}

void SearchConfig::validate() const {
  if (n < 4) throw std::invalid_argument("search needs n >= 4");
  if (!(softness > 0.0 && softness < 0.1)) throw std::invalid_argument("softness must lie in (0, 0.1)");
  if (iterations < 1) throw std::invalid_argument("search needs at least one iteration");
  if (restarts < 1) throw std::invalid_argument("search needs at least one restart");
  if (checkpoint_every < 1) throw std::invalid_argument("checkpoint interval must be positive");
  if (!(temperature_start > 0.0) || !(temperature_decay >= 0.0 && temperature_decay <= 1.0)) {
    throw std::invalid_argument("temperature schedule must be positive and non-increasing");
  }
  if (initial && (initial->size() != n || initial->dimension() != 3)) {
    throw std::invalid_argument("initial configuration must hold n points in R^3");
  }
}

double SearchConfig::effective_decay() const {
  if (temperature_decay > 0.0) return temperature_decay;
  return std::exp(std::log(0.01) / double(std::max<std::size_t>(iterations, 1)));
}

namespace {

double max_distance(const std::vector<double>& c, std::size_t n) {
  double best = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      best = std::max(best, squared_distance({&c[3 * i], 3}, {&c[3 * j], 3}));
    }
  }
  return std::sqrt(best);
}

double smoothed(const std::vector<double>& c, std::size_t n, double softness) {
  std::vector<double> dist;
  dist.reserve(n * (n - 1) / 2);
  double d_max = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      dist.push_back(std::sqrt(squared_distance({&c[3 * i], 3}, {&c[3 * j], 3})));
      d_max = std::max(d_max, dist.back());
    }
  }
  if (!(d_max > 0.0)) return 0.0;
  double total = 0.0;
  for (double d : dist) {
    total += std::clamp((d - (1.0 - softness) * d_max) / (softness * d_max), 0.0, 1.0);
  }
  return total;
}

// Solves |p_i - p_j|^2 = 1 on the target pairs. Returns false if the residual
// does not vanish.
bool gauss_newton(std::vector<double>& c, std::size_t n, const std::vector<Edge>& targets) {
  const auto m = static_cast<Eigen::Index>(targets.size());
  const auto vars = static_cast<Eigen::Index>(3 * n);
  for (int iter = 0; iter < 60; ++iter) {
    Eigen::VectorXd r(m);
    Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(m, vars);
    double worst = 0.0;
    for (Eigen::Index t = 0; t < m; ++t) {
      const Edge& e = targets[t];
      double d2 = 0.0;
      for (std::size_t k = 0; k < 3; ++k) {
        const double diff = c[3 * e.u + k] - c[3 * e.v + k];
        d2 += diff * diff;
        jac(t, Eigen::Index(3 * e.u + k)) = 2.0 * diff;
        jac(t, Eigen::Index(3 * e.v + k)) = -2.0 * diff;
      }
      r(t) = d2 - 1.0;
      worst = std::max(worst, std::abs(r(t)));
    }
    if (worst < 1e-14) return true;
    const Eigen::MatrixXd gram = jac * jac.transpose() + 1e-12 * Eigen::MatrixXd::Identity(m, m);
    const Eigen::VectorXd step = -jac.transpose() * gram.ldlt().solve(r);
    if (!step.allFinite()) return false;
    for (Eigen::Index k = 0; k < vars; ++k) c[std::size_t(k)] += step(k);
  }
  return false;
}

std::size_t safe_count(const PointSet& ps, const Tolerance& tol) {
  try {
    return build_diameter_graph(ps, tol).edge_count();
  } catch (const Error&) {
    return 0;
  }
}

}  // namespace

double smoothed_diameter_count(const PointSet& ps, double softness) {
  if (ps.dimension() != 3) throw DimensionUnsupported("search works in R^3");
  return smoothed(std::vector<double>(ps.coords().begin(), ps.coords().end()), ps.size(), softness);
}

std::size_t exact_diameter_count(const PointSet& ps, const Tolerance& tol) {
  return build_diameter_graph(ps, tol).edge_count();
}

PointSet polish_configuration(const PointSet& ps, double softness, const Tolerance& tol) {
  if (ps.dimension() != 3) throw DimensionUnsupported("search works in R^3");
  const std::size_t n = ps.size();
  std::vector<double> c(ps.coords().begin(), ps.coords().end());
  const double d_max = max_distance(c, n);
  if (!(d_max > 0.0)) return ps;
  for (double& x : c) x /= d_max;

  std::vector<std::pair<double, Edge>> near;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double d = std::sqrt(squared_distance({&c[3 * i], 3}, {&c[3 * j], 3}));
      if (d >= 1.0 - softness) near.push_back({d, Edge{i, j}});
    }
  }
  std::sort(near.begin(), near.end(), [](const auto& a, const auto& b) {
    return a.first > b.first || (a.first == b.first && a.second < b.second);
  });

  PointSet best(3, c);
  std::size_t best_count = safe_count(best, tol);
  for (std::size_t k = near.size(); k >= 1; --k) {
    std::vector<Edge> targets;
    for (std::size_t t = 0; t < k; ++t) targets.push_back(near[t].second);
    std::vector<double> trial = c;
    if (!gauss_newton(trial, n, targets)) continue;
    PointSet candidate(3, trial);
    const std::size_t count = safe_count(candidate, tol);
    if (count > best_count) {
      best = std::move(candidate);
      best_count = count;
    }
    if (count >= k) break;
  }
  return best;
}

namespace {

RestartResult run_restart(const SearchConfig& cfg, std::size_t restart, const Tolerance& tol) {
  std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                    static_cast<std::uint32_t>(restart)};
  std::mt19937_64 rng(seq);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const std::size_t n = cfg.n;
  const std::size_t bound = 2 * n - 2;

  std::vector<double> c;
  if (cfg.initial) {
    c.assign(cfg.initial->coords().begin(), cfg.initial->coords().end());
  } else {
    c.resize(3 * n);
    for (std::size_t i = 0; i < n; ++i) sample_point(3, SampleModel::Ball, rng, &c[3 * i]);
  }
  auto rescale = [&] {
    const double d = max_distance(c, n);
    if (d > 0.0) {
      for (double& x : c) x /= d;
    }
  };
  rescale();

  RestartResult out;
  double objective = smoothed(c, n, cfg.softness);
  double temperature = cfg.temperature_start;
  const double decay = cfg.effective_decay();

  auto checkpoint = [&](std::size_t iteration) {
    const PointSet polished = polish_configuration(PointSet(3, c), cfg.softness, tol);
    const std::size_t count = safe_count(polished, tol);
    if (count > bound) {
      throw SearchBoundViolation("recount " + std::to_string(count) + " exceeds 2n-2 = " + std::to_string(bound) +
                                 " at restart " + std::to_string(restart) + ", iteration " +
                                 std::to_string(iteration) + "; check eps_diam");
    }
    if (count > out.count || out.best.empty()) {
      out.best = polished;
      out.count = count;
    }
    out.trace.push_back({restart, iteration, temperature, objective, out.count});
  };

  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (std::size_t it = 1; it <= cfg.iterations; ++it) {
    const std::size_t i = pick(rng);
    const double step = cfg.step_scale * std::sqrt(temperature / cfg.temperature_start) + 1e-4;
    const std::array<double, 3> old{c[3 * i], c[3 * i + 1], c[3 * i + 2]};
    for (std::size_t k = 0; k < 3; ++k) c[3 * i + k] += step * gauss(rng);
    const double proposed = smoothed(c, n, cfg.softness);
    const double delta = proposed - objective;
    if (delta >= 0.0 || unit(rng) < std::exp(delta / temperature)) {
      objective = proposed;
    } else {
      for (std::size_t k = 0; k < 3; ++k) c[3 * i + k] = old[k];
    }
    temperature *= decay;
    if (it % cfg.checkpoint_every == 0 || it == cfg.iterations) {
      rescale();
      checkpoint(it);
    }
  }
  return out;
}

}  // namespace

SearchResult search_max_diameters(const SearchConfig& cfg, const Tolerance& tol) {
  cfg.validate();
  std::vector<RestartResult> results(cfg.restarts);
  std::vector<std::exception_ptr> errors(cfg.restarts);
  {
    std::vector<std::jthread> workers;
    for (std::size_t r = 0; r < cfg.restarts; ++r) {
      workers.emplace_back([&, r] {
        try {
          results[r] = run_restart(cfg, r, tol);
        } catch (...) {
          errors[r] = std::current_exception();
        }
      });
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  SearchResult out;
  std::size_t pick = 0;
  for (std::size_t r = 1; r < results.size(); ++r) {
    const auto& a = results[r];
    const auto& b = results[pick];
    if (a.count > b.count ||
        (a.count == b.count && std::lexicographical_compare(a.best.coords().begin(), a.best.coords().end(),
                                                            b.best.coords().begin(), b.best.coords().end()))) {
      pick = r;
    }
  }
  out.best = results[pick].best;
  out.count = results[pick].count;
  out.restarts = std::move(results);
  return out;
}

}  // namespace diamgraph
