#include "diamgraph/vector.hpp"

#include <cassert>
#include <algorithm>
#include <cmath>

namespace diamgraph {

Vector& Vector::operator+=(const Vector& o) {
  assert(o.size() == size());
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Vector& Vector::operator-=(const Vector& o) {
  assert(o.size() == size());
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Vector& Vector::operator*=(double s) {
  for (double& x : c_) x *= s;
  return *this;
}

Vector& Vector::operator/=(double s) {
  for (double& x : c_) x /= s;
  return *this;
}

bool Vector::all_finite() const {
  for (double x : c_) {
    if (!std::isfinite(x)) return false;
  }
  return true;
}

Vector operator+(Vector a, const Vector& b) { return a += b; }
Vector operator-(Vector a, const Vector& b) { return a -= b; }
Vector operator-(Vector a) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = -a[i];
  return a;
}
Vector operator*(Vector a, double s) { return a *= s; }
Vector operator*(double s, Vector a) { return a *= s; }
Vector operator/(Vector a, double s) { return a /= s; }

double dot(const Vector& a, const Vector& b) {
  assert(a.size() == b.size());
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double squared_norm(const Vector& v) { return dot(v, v); }

double norm(const Vector& v) { return std::sqrt(squared_norm(v)); }

double squared_distance(std::span<const double> a, std::span<const double> b) {
  assert(a.size() == b.size());
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return s;
}

double distance(const Vector& a, const Vector& b) {
  return std::sqrt(squared_distance(a.coords(), b.coords()));
}

Vector cross(const Vector& a, const Vector& b) {
  assert(a.size() == 3 && b.size() == 3);
  return Vector{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
                a[0] * b[1] - a[1] * b[0]};
}

double angle_between(const Vector& a, const Vector& b) {
  if (a.size() == 3) return std::atan2(norm(cross(a, b)), dot(a, b));
  // |a|^2 |b|^2 - (a.b)^2 is the squared norm of the wedge product.
  const double ab = dot(a, b);
  const double wedge2 = squared_norm(a) * squared_norm(b) - ab * ab;
  return std::atan2(std::sqrt(std::max(0.0, wedge2)), ab);
}

}  // namespace diamgraph
