#include "diamgraph/point_set.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace diamgraph {

PointSet::PointSet(std::size_t dimension, std::vector<double> coords,
                   std::vector<std::string> labels)
    : dim_(dimension), coords_(std::move(coords)), labels_(std::move(labels)) {
  if (dim_ < 2) throw std::invalid_argument("point set dimension must be at least 2");
  if (coords_.size() % dim_ != 0) throw std::invalid_argument("coordinate count is not a multiple of the dimension");
  for (double x : coords_) {
    if (!std::isfinite(x)) throw std::invalid_argument("point coordinates must be finite");
  }
  if (!labels_.empty() && labels_.size() != size()) {
    throw std::invalid_argument("label count differs from point count");
  }
}

namespace {

std::vector<double> flatten(std::size_t dim, const std::vector<Vector>& points) {
  std::vector<double> flat;
  flat.reserve(dim * points.size());
  for (const Vector& p : points) {
    if (p.size() != dim) throw std::invalid_argument("point has the wrong dimension");
    flat.insert(flat.end(), p.coords().begin(), p.coords().end());
  }
  return flat;
}

}  // namespace

PointSet::PointSet(std::size_t dimension, const std::vector<Vector>& points,
                   std::vector<std::string> labels)
    : PointSet(dimension, flatten(dimension, points), std::move(labels)) {}

PointSet PointSet::scaled(double s) const {
  std::vector<double> c = coords_;
  for (double& x : c) x *= s;
  return PointSet(dim_, std::move(c), labels_);
}

std::optional<std::pair<std::size_t, std::size_t>> find_near_duplicate(const PointSet& ps,
                                                                       const Tolerance& tol) {
  const std::size_t n = ps.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return ps[a][0] < ps[b][0] || (ps[a][0] == ps[b][0] && a < b);
  });
  const double eps = tol.eps_geo;
  const double eps2 = eps * eps;
  for (std::size_t s = 0; s < n; ++s) {
    const std::size_t i = order[s];
    for (std::size_t t = s + 1; t < n && ps[order[t]][0] - ps[i][0] <= eps; ++t) {
      const std::size_t j = order[t];
      if (squared_distance(ps[i], ps[j]) <= eps2) return std::make_pair(std::min(i, j), std::max(i, j));
    }
  }
  return std::nullopt;
}

}  // namespace diamgraph
