#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace diamgraph {

/// A dense real vector of runtime dimension. Used both for points and for
/// unit directions on the sphere.
class Vector {
 public:
  Vector() = default;
  explicit Vector(std::size_t dim) : c_(dim, 0.0) {}
  Vector(std::initializer_list<double> coords) : c_(coords) {}
  explicit Vector(std::span<const double> coords) : c_(coords.begin(), coords.end()) {}
  explicit Vector(std::vector<double> coords) : c_(std::move(coords)) {}

  std::size_t size() const { return c_.size(); }
  double operator[](std::size_t i) const { return c_[i]; }
  double& operator[](std::size_t i) { return c_[i]; }
  std::span<const double> coords() const { return c_; }

  Vector& operator+=(const Vector& o);
  Vector& operator-=(const Vector& o);
  Vector& operator*=(double s);
  Vector& operator/=(double s);

  bool all_finite() const;

  friend bool operator==(const Vector&, const Vector&) = default;

 private:
  std::vector<double> c_;
};

Vector operator+(Vector a, const Vector& b);
Vector operator-(Vector a, const Vector& b);
Vector operator-(Vector a);
Vector operator*(Vector a, double s);
Vector operator*(double s, Vector a);
Vector operator/(Vector a, double s);

double dot(const Vector& a, const Vector& b);
double squared_norm(const Vector& v);
double norm(const Vector& v);
double squared_distance(std::span<const double> a, std::span<const double> b);
double distance(const Vector& a, const Vector& b);

// Three-dimensional only.
Vector cross(const Vector& a, const Vector& b);

/// Geodesic angle between two nonzero vectors, computed with atan2 so that
/// nearly parallel and nearly antipodal inputs stay accurate.
double angle_between(const Vector& a, const Vector& b);

}  // namespace diamgraph
