#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "diamgraph/tolerance.hpp"
#include "diamgraph/vector.hpp"

namespace diamgraph {

/// Labeled points in R^d, stored row-major in one flat buffer.
class PointSet {
 public:
  PointSet() = default;
  /// Throws std::invalid_argument on d < 2, ragged rows, non-finite values
  /// or a label count that differs from the point count.
  PointSet(std::size_t dimension, std::vector<double> coords,
           std::vector<std::string> labels = {});
  PointSet(std::size_t dimension, const std::vector<Vector>& points,
           std::vector<std::string> labels = {});

  std::size_t dimension() const { return dim_; }
  std::size_t size() const { return dim_ == 0 ? 0 : coords_.size() / dim_; }
  bool empty() const { return size() == 0; }

  std::span<const double> operator[](std::size_t i) const {
    return std::span<const double>(coords_).subspan(i * dim_, dim_);
  }
  Vector point(std::size_t i) const { return Vector((*this)[i]); }
  std::span<const double> coords() const { return coords_; }
  const std::vector<std::string>& labels() const { return labels_; }

  /// Every coordinate multiplied by s; labels kept.
  PointSet scaled(double s) const;

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<double> coords_;
  std::vector<std::string> labels_;
};

/// A pair of indices (i < j) whose points lie within eps_geo of each other,
/// if any. Sort-and-sweep along the first coordinate.
std::optional<std::pair<std::size_t, std::size_t>> find_near_duplicate(const PointSet& ps,
                                                                       const Tolerance& tol = {});

}  // namespace diamgraph
