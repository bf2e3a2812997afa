#pragma once

// Brute-force reference computations used by the tests. None of these call
// into the library's geometric algorithms.

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "diamgraph/point_set.hpp"
#include "diamgraph/vector.hpp"

namespace oracle {

using diamgraph::PointSet;
using diamgraph::Vector;

inline long double dist_ld(const PointSet& ps, std::size_t i, std::size_t j) {
  long double s = 0;
  for (std::size_t k = 0; k < ps.dimension(); ++k) {
    const long double d = static_cast<long double>(ps[i][k]) - ps[j][k];
    s += d * d;
  }
  return std::sqrt(s);
}

inline long double diameter(const PointSet& ps) {
  long double best = 0;
  for (std::size_t i = 0; i < ps.size(); ++i)
    for (std::size_t j = i + 1; j < ps.size(); ++j) best = std::max(best, dist_ld(ps, i, j));
  return best;
}

// Pairs within relative slack of the maximum distance.
inline std::set<std::pair<std::size_t, std::size_t>> diameter_pairs(const PointSet& ps, double rel = 1e-9) {
  const long double D = diameter(ps);
  std::set<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < ps.size(); ++i)
    for (std::size_t j = i + 1; j < ps.size(); ++j)
      if (dist_ld(ps, i, j) >= (1.0L - rel) * D) out.insert({i, j});
  return out;
}

inline double len3(const std::array<double, 3>& a) { return std::sqrt(a[0] * a[0] + a[1] * a[1] + a[2] * a[2]); }

inline std::array<double, 3> arr(const Vector& v) { return {v[0], v[1], v[2]}; }

// Point at angle t along the minor arc a->b, built from a and the unit
// tangent b - <a,b> a.
inline std::array<double, 3> arc_sample(const Vector& a, const Vector& b, double frac) {
  const double c = a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
  std::array<double, 3> t{b[0] - c * a[0], b[1] - c * a[1], b[2] - c * a[2]};
  const double tl = len3(t);
  const double theta = std::acos(std::clamp(c, -1.0, 1.0)) * frac;
  std::array<double, 3> p{};
  for (int k = 0; k < 3; ++k) p[k] = std::cos(theta) * a[k] + std::sin(theta) * t[k] / tl;
  return p;
}

// Minimum angular distance between densely sampled arcs.
inline double sampled_arc_gap(const Vector& a1, const Vector& b1, const Vector& a2, const Vector& b2,
                              int samples = 2000) {
  std::vector<std::array<double, 3>> s2(samples + 1);
  for (int j = 0; j <= samples; ++j) s2[j] = arc_sample(a2, b2, double(j) / samples);
  double best = 10;
  for (int i = 0; i <= samples; ++i) {
    const auto p = arc_sample(a1, b1, double(i) / samples);
    for (const auto& q : s2) {
      const double c = p[0] * q[0] + p[1] * q[1] + p[2] * q[2];
      best = std::min(best, std::acos(std::clamp(c, -1.0, 1.0)));
    }
  }
  return best;
}

inline double det3(const std::array<double, 3>& a, const std::array<double, 3>& b, const std::array<double, 3>& c) {
  return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) + a[2] * (b[0] * c[1] - b[1] * c[0]);
}

// Coefficients of p in the basis (a, b, c) by Cramer's rule, if invertible.
inline bool cramer(const std::array<double, 3>& a, const std::array<double, 3>& b, const std::array<double, 3>& c,
                   const std::array<double, 3>& p, std::array<double, 3>& out) {
  const double d = det3(a, b, c);
  if (std::abs(d) < 1e-14) return false;
  out = {det3(p, b, c) / d, det3(a, p, c) / d, det3(a, b, p) / d};
  return true;
}

// Is u a nonnegative combination of the others? Carathéodory: enough to try
// every single, pair and triple (pairs via a third auxiliary normal).
inline bool in_cone_of(const std::array<double, 3>& u, const std::vector<std::array<double, 3>>& others,
                       double tol = 1e-12) {
  const std::size_t m = others.size();
  for (std::size_t i = 0; i < m; ++i) {
    const auto& a = others[i];
    const double c = (u[0] * a[0] + u[1] * a[1] + u[2] * a[2]) / (len3(u) * len3(a));
    if (c > 1 - tol) return true;
    for (std::size_t j = i + 1; j < m; ++j) {
      const auto& b = others[j];
      const std::array<double, 3> n{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
      std::array<double, 3> co{};
      if (cramer(a, b, n, u, co) && std::abs(co[2]) * len3(n) < tol && co[0] >= -tol && co[1] >= -tol) return true;
      for (std::size_t k = j + 1; k < m; ++k) {
        if (cramer(a, b, others[k], u, co) && co[0] >= -tol && co[1] >= -tol && co[2] >= -tol) return true;
      }
    }
  }
  return false;
}

// Strictly inside the convex spherical polygon with the given vertices
// (any order is fine): inside the cone of some fan triangle with all
// coefficients clearly positive, or on a fan diagonal away from the rim.
inline bool strictly_inside_polygon(const std::array<double, 3>& p, const std::vector<std::array<double, 3>>& verts) {
  if (verts.size() < 3) return false;
  bool in_cone = false;
  for (std::size_t i = 0; i < verts.size() && !in_cone; ++i)
    for (std::size_t j = i + 1; j < verts.size() && !in_cone; ++j)
      for (std::size_t k = j + 1; k < verts.size() && !in_cone; ++k) {
        std::array<double, 3> co{};
        if (cramer(verts[i], verts[j], verts[k], p, co) && co[0] > 1e-9 && co[1] > 1e-9 && co[2] > 1e-9)
          in_cone = true;
      }
  return in_cone;
}

// Number of simple cycles of length >= 3 by trying every ordering of every
// vertex subset. Feasible up to about 8 vertices.
inline std::size_t brute_force_cycle_count(std::size_t n, const std::set<std::pair<std::size_t, std::size_t>>& edges) {
  auto adj = [&](std::size_t a, std::size_t b) { return edges.count({std::min(a, b), std::max(a, b)}) > 0; };
  std::set<std::vector<std::size_t>> seen;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<std::size_t> sub;
    for (std::size_t v = 0; v < n; ++v)
      if (mask >> v & 1) sub.push_back(v);
    if (sub.size() < 3) continue;
    std::sort(sub.begin(), sub.end());
    do {
      bool ok = true;
      for (std::size_t i = 0; i < sub.size() && ok; ++i) ok = adj(sub[i], sub[(i + 1) % sub.size()]);
      if (!ok) continue;
      // Canonical: rotate to the smallest, then pick the smaller direction.
      std::vector<std::size_t> c = sub;
      std::rotate(c.begin(), std::min_element(c.begin(), c.end()), c.end());
      if (c[1] > c.back()) std::reverse(c.begin() + 1, c.end());
      seen.insert(c);
    } while (std::next_permutation(sub.begin(), sub.end()));
  }
  return seen.size();
}

}  // namespace oracle
