#include "diamgraph/diameter_graph.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "diamgraph/errors.hpp"

namespace diamgraph {

DiameterGraph::DiameterGraph(PointSet points, std::vector<Edge> edges, double original_diameter)
    : points_(std::move(points)), original_diameter_(original_diameter) {
  const std::size_t n = points_.size();
  for (Edge& e : edges) {
    if (e.u == e.v) throw std::invalid_argument("diameter graph edge is a self loop");
    if (e.u >= n || e.v >= n) throw std::invalid_argument("diameter graph edge index out of range");
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw std::invalid_argument("duplicate diameter graph edge");
  }
  edges_ = std::move(edges);
  adjacency_.assign(n, {});
  for (const Edge& e : edges_) {
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& nb : adjacency_) std::sort(nb.begin(), nb.end());
}

bool DiameterGraph::has_edge(std::size_t a, std::size_t b) const {
  if (a >= vertex_count() || b >= vertex_count()) return false;
  const auto& nb = adjacency_[a];
  return std::binary_search(nb.begin(), nb.end(), b);
}

namespace {

void require_valid_input(const PointSet& ps, const Tolerance& tol) {
  if (ps.size() < 2) throw TooFewPoints("diameter needs at least two points");
  if (auto dup = find_near_duplicate(ps, tol)) {
    throw DuplicatePoints("points " + std::to_string(dup->first) + " and " +
                          std::to_string(dup->second) + " coincide");
  }
}

DiameterPair brute_force(const PointSet& ps) {
  DiameterPair best{0.0, 0, 1};
  double best2 = -1.0;
  const std::size_t n = ps.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double d2 = squared_distance(ps[i], ps[j]);
      if (d2 > best2) {
        best2 = d2;
        best.i = i;
        best.j = j;
      }
    }
  }
  best.diameter = std::sqrt(best2);
  return best;
}

}  // namespace

DiameterPair compute_diameter(const PointSet& ps, const Tolerance& tol) {
  require_valid_input(ps, tol);
  return brute_force(ps);
}

DiameterPair compute_diameter_fast(const PointSet& ps, const Tolerance& tol) {
  if (ps.dimension() != 3) throw DimensionUnsupported("compute_diameter_fast requires d = 3");
  require_valid_input(ps, tol);
  const std::size_t n = ps.size();
  if (n <= 64) return brute_force(ps);

  auto dot3 = [](std::span<const double> p, const std::array<double, 3>& u) {
    return p[0] * u[0] + p[1] * u[1] + p[2] * u[2];
  };

  // Extreme points along the 26 directions of the {-1,0,1}^3 grid.
  std::vector<std::size_t> extremes;
  for (int a = -1; a <= 1; ++a) {
    for (int b = -1; b <= 1; ++b) {
      for (int c = -1; c <= 1; ++c) {
        if (a == 0 && b == 0 && c == 0) continue;
        const std::array<double, 3> u{double(a), double(b), double(c)};
        std::size_t arg = 0;
        double hi = dot3(ps[0], u);
        for (std::size_t i = 1; i < n; ++i) {
          const double h = dot3(ps[i], u);
          if (h > hi) hi = h, arg = i;
        }
        extremes.push_back(arg);
      }
    }
  }
  std::sort(extremes.begin(), extremes.end());
  extremes.erase(std::unique(extremes.begin(), extremes.end()), extremes.end());

  double best2 = -1.0;
  std::size_t bi = 0, bj = 1;
  auto consider = [&](std::size_t i, std::size_t j) {
    const double d2 = squared_distance(ps[i], ps[j]);
    if (d2 > best2) {
      best2 = d2;
      bi = std::min(i, j);
      bj = std::max(i, j);
    }
  };
  for (std::size_t s = 0; s < extremes.size(); ++s) {
    for (std::size_t t = s + 1; t < extremes.size(); ++t) consider(extremes[s], extremes[t]);
  }

  double scale = 0.0;
  for (std::size_t s = 0; s < extremes.size(); ++s) {
    for (std::size_t k = 0; k < 3; ++k) scale = std::max(scale, std::abs(ps[extremes[s]][k]));
  }
  scale = std::max(scale, std::sqrt(best2));

  // Facets of the polytope spanned by the extremes (brute force over triples).
  struct Plane {
    std::array<double, 3> normal;
    double offset;
    double margin;
  };
  std::vector<Plane> facets;
  bool flat = false;
  const std::size_t m = extremes.size();
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) {
      for (std::size_t c = b + 1; c < m; ++c) {
        const auto pa = ps[extremes[a]], pb = ps[extremes[b]], pc = ps[extremes[c]];
        const std::array<double, 3> u{pb[0] - pa[0], pb[1] - pa[1], pb[2] - pa[2]};
        const std::array<double, 3> v{pc[0] - pa[0], pc[1] - pa[1], pc[2] - pa[2]};
        std::array<double, 3> nrm{u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2],
                                  u[0] * v[1] - u[1] * v[0]};
        const double len = std::sqrt(nrm[0] * nrm[0] + nrm[1] * nrm[1] + nrm[2] * nrm[2]);
        if (len <= 1e-12 * scale * scale) continue;
        double off = dot3(pa, nrm);
        const double margin = 1e-9 * scale * len;
        bool all_below = true, all_above = true;
        for (std::size_t e : extremes) {
          const double h = dot3(ps[e], nrm) - off;
          all_below = all_below && h <= margin;
          all_above = all_above && h >= -margin;
        }
        if (all_above && all_below) flat = true;
        if (all_above && !all_below) {
          for (double& x : nrm) x = -x;
          off = -off;
        } else if (!all_below) {
          continue;
        }
        facets.push_back({nrm, off, margin});
      }
    }
  }

  // Points strictly inside that polytope cannot be hull vertices, and only
  // hull vertices realize the diameter.
  std::vector<std::size_t> candidates;
  if (facets.empty() || flat) {
    candidates.resize(n);
    std::iota(candidates.begin(), candidates.end(), std::size_t{0});
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      bool inside = true;
      for (const Plane& f : facets) {
        if (dot3(ps[i], f.normal) - f.offset >= -f.margin) {
          inside = false;
          break;
        }
      }
      if (!inside) candidates.push_back(i);
    }
  }

  std::array<double, 3> centre{0.0, 0.0, 0.0};
  for (std::size_t i : candidates) {
    for (std::size_t k = 0; k < 3; ++k) centre[k] += ps[i][k];
  }
  for (double& x : centre) x /= double(candidates.size());
  std::vector<std::pair<double, std::size_t>> by_radius;
  by_radius.reserve(candidates.size());
  for (std::size_t i : candidates) {
    const auto p = ps[i];
    by_radius.emplace_back(std::sqrt(squared_distance(p, centre)), i);
  }
  std::sort(by_radius.begin(), by_radius.end(),
            [](const auto& x, const auto& y) { return x.first > y.first || (x.first == y.first && x.second < y.second); });

  // |p - q| <= r_p + r_q; pairs that cannot beat the current best are skipped.
  constexpr double kSlack = 1.0 + 1e-12;
  for (std::size_t s = 0; s < by_radius.size(); ++s) {
    const double rs = by_radius[s].first;
    if (2.0 * rs * kSlack < std::sqrt(best2)) break;
    for (std::size_t t = s + 1; t < by_radius.size(); ++t) {
      if ((rs + by_radius[t].first) * kSlack < std::sqrt(best2)) break;
      consider(by_radius[s].second, by_radius[t].second);
    }
  }
  return {std::sqrt(best2), bi, bj};
}

DiameterGraph build_diameter_graph(const PointSet& ps, const Tolerance& tol) {
  const DiameterPair dp = compute_diameter(ps, tol);
  if (!(dp.diameter > 0.0)) throw ZeroDiameter("all points coincide");
  const double d2 = dp.diameter * dp.diameter;
  const double threshold = (1.0 - tol.eps_diam) * (1.0 - tol.eps_diam) * d2;
  std::vector<Edge> edges;
  const std::size_t n = ps.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (squared_distance(ps[i], ps[j]) >= threshold) edges.push_back({i, j});
    }
  }
  return DiameterGraph(ps.scaled(1.0 / dp.diameter), std::move(edges), dp.diameter);
}

namespace {

PruneResult assemble_core(const DiameterGraph& g, const std::vector<bool>& alive, PruneRecord record) {
  PruneResult out;
  out.record = std::move(record);
  std::vector<std::size_t> remap(g.vertex_count(), 0);
  std::vector<double> coords;
  std::vector<std::string> labels;
  const bool labeled = !g.points().labels().empty();
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (!alive[v]) continue;
    remap[v] = out.core_to_original.size();
    out.core_to_original.push_back(v);
    const auto p = g.points()[v];
    coords.insert(coords.end(), p.begin(), p.end());
    if (labeled) labels.push_back(g.points().labels()[v]);
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (alive[e.u] && alive[e.v]) edges.push_back({remap[e.u], remap[e.v]});
  }
  out.core = DiameterGraph(PointSet(g.dimension(), std::move(coords), std::move(labels)),
                           std::move(edges), g.original_diameter());
  return out;
}

}  // namespace

PruneResult prune_low_degree(const DiameterGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<bool> alive(n, true);
  std::vector<std::size_t> degree(n);
  for (std::size_t v = 0; v < n; ++v) degree[v] = g.degree(v);

  PruneRecord record;
  while (true) {
    std::vector<std::size_t> round;
    for (std::size_t v = 0; v < n; ++v) {
      if (alive[v] && degree[v] <= 1) round.push_back(v);
    }
    if (round.empty()) break;
    for (std::size_t v : round) {
      PruneRecord::Removal removal{v, std::nullopt};
      if (degree[v] == 1) {
        for (std::size_t u : g.neighbors(v)) {
          if (alive[u]) {
            removal.edge = Edge{std::min(u, v), std::max(u, v)};
            --degree[u];
            break;
          }
        }
      }
      alive[v] = false;
      degree[v] = 0;
      record.removals.push_back(removal);
    }
  }
  return assemble_core(g, alive, std::move(record));
}

PruneResult replay_prune(const DiameterGraph& original, const PruneRecord& record) {
  const std::size_t n = original.vertex_count();
  std::vector<bool> alive(n, true);
  for (const auto& r : record.removals) {
    if (r.vertex >= n || !alive[r.vertex]) throw std::invalid_argument("replay: vertex already removed");
    std::vector<std::size_t> live;
    for (std::size_t u : original.neighbors(r.vertex)) {
      if (alive[u]) live.push_back(u);
    }
    if (live.size() > 1) throw std::invalid_argument("replay: removed vertex had degree > 1");
    const std::optional<Edge> expect =
        live.empty() ? std::nullopt
                     : std::optional<Edge>(Edge{std::min(live[0], r.vertex), std::max(live[0], r.vertex)});
    if (expect != r.edge) throw std::invalid_argument("replay: recorded edge does not match");
    alive[r.vertex] = false;
  }
  return assemble_core(original, alive, record);
}

DiameterGraph restore_pruned(const PruneResult& pruned, const DiameterGraph& original) {
  std::vector<Edge> edges;
  for (const Edge& e : pruned.core.edges()) {
    edges.push_back({pruned.core_to_original[e.u], pruned.core_to_original[e.v]});
  }
  for (auto it = pruned.record.removals.rbegin(); it != pruned.record.removals.rend(); ++it) {
    if (it->edge) edges.push_back(*it->edge);
  }
  return DiameterGraph(original.points(), std::move(edges), original.original_diameter());
}

VerificationReport verify_bound(const DiameterGraph& g, const Tolerance& tol) {
  if (g.dimension() != 3) throw DimensionUnsupported("the 2n-2 bound is specific to R^3");
  if (g.vertex_count() < 4) throw TooFewPoints("the 2n-2 bound is stated for n >= 4");
  auto r = make_report("bound", "a diameter graph on n >= 4 points in R^3 has at most 2n-2 edges", tol);
  const auto n = static_cast<std::int64_t>(g.vertex_count());
  const auto e = static_cast<std::int64_t>(g.edge_count());
  r.counts["n"] = n;
  r.counts["edges"] = e;
  r.counts["bound"] = 2 * n - 2;
  if (e > 2 * n - 2) {
    r.fail({"bound_exceeded",
            "edge count " + std::to_string(e) + " exceeds 2n-2 = " + std::to_string(2 * n - 2) +
                " (tolerance artifact or defect)",
            {},
            {}});
  }
  return r;
}

VerificationReport verify_bound_via_core(const DiameterGraph& original, const PruneResult& pruned,
                                         const Tolerance& tol) {
  auto r = make_report("bound_via_core",
                       "pruning degree <= 1 vertices preserves the 2n-2 edge bound", tol);
  const auto n = static_cast<std::int64_t>(original.vertex_count());
  const auto e = static_cast<std::int64_t>(original.edge_count());
  const auto nc = static_cast<std::int64_t>(pruned.core.vertex_count());
  const auto ec = static_cast<std::int64_t>(pruned.core.edge_count());
  std::int64_t removed_edges = 0;
  for (const auto& rem : pruned.record.removals) removed_edges += rem.edge ? 1 : 0;
  const auto removed = static_cast<std::int64_t>(pruned.record.removals.size());
  r.counts["n"] = n;
  r.counts["edges"] = e;
  r.counts["bound"] = 2 * n - 2;
  r.counts["core_n"] = nc;
  r.counts["core_edges"] = ec;
  r.counts["removed"] = removed;
  if (removed != n - nc) r.fail({"removal_count", "removals do not account for the missing vertices", {}, {}});
  if (ec + removed_edges != e) r.fail({"edge_accounting", "core edges plus removed edges differ from original", {}, {}});
  if (nc > 0 && ec > 2 * nc - 2) r.fail({"core_bound", "core exceeds 2n-2", {}, {}});
  // From ec <= 2nc - 2 (or an empty core) and one edge per removal.
  if (e > 2 * n - 2) r.fail({"bound_exceeded", "original exceeds 2n-2", {}, {}});
  return r;
}

}  // namespace diamgraph
