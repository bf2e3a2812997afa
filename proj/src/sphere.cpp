#include "diamgraph/sphere.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "diamgraph/errors.hpp"

namespace diamgraph {

Vector normalize(const Vector& v, const Tolerance& tol) {
  const double n = norm(v);
  if (!(n > tol.eps_geo)) throw NearZeroVector("cannot normalize a vector of norm <= eps_geo");
  Vector u = v / n;
  // A second pass removes the last ulp of drift.
  return u / norm(u);
}

GreatArc::GreatArc(Vector a, Vector b, const Tolerance& tol) : a_(std::move(a)), b_(std::move(b)) {
  if (a_.size() != 3 || b_.size() != 3) throw InvalidArc("great arcs live on S^2");
  if (std::abs(norm(a_) - 1.0) > tol.eps_unit || std::abs(norm(b_) - 1.0) > tol.eps_unit) {
    throw InvalidArc("arc endpoints must be unit vectors");
  }
  const double len = angle_between(a_, b_);
  if (len >= std::numbers::pi - tol.eps_geo) throw InvalidArc("arc endpoints are antipodal");
  if (len <= tol.eps_geo) throw InvalidArc("arc endpoints coincide");
}

double GreatArc::length() const { return angle_between(a_, b_); }

Vector GreatArc::normal() const {
  const Vector c = cross(a_, b_);
  return c / norm(c);
}

Vector GreatArc::point_at(double t) const {
  const double theta = length();
  const double s = std::sin(theta);
  Vector p = a_ * (std::sin((1.0 - t) * theta) / s) + b_ * (std::sin(t * theta) / s);
  return p / norm(p);
}

double arc_distance(const Vector& p, const GreatArc& arc) {
  const Vector n = arc.normal();
  const double s = dot(p, n);
  const Vector q = p - n * s;
  if (squared_norm(q) > 1e-300 && dot(cross(arc.a(), q), n) >= 0.0 &&
      dot(cross(q, arc.b()), n) >= 0.0) {
    return std::asin(std::min(1.0, std::abs(s)));
  }
  return std::min(angle_between(p, arc.a()), angle_between(p, arc.b()));
}

const char* to_string(ArcRelation r) {
  switch (r) {
    case ArcRelation::Disjoint: return "disjoint";
    case ArcRelation::SharedEndpoint: return "shared_endpoint";
    case ArcRelation::Touch: return "touch";
    case ArcRelation::ProperCrossing: return "proper_crossing";
    case ArcRelation::Overlap: return "overlap";
  }
  return "unknown";
}

namespace {

struct Contact {
  Vector p;
  bool end_first = false;
  bool end_second = false;
};

bool near(const Vector& a, const Vector& b, double eps) { return angle_between(a, b) <= eps; }

void add_contact(std::vector<Contact>& clusters, const Contact& c, double merge) {
  for (Contact& k : clusters) {
    if (near(k.p, c.p, merge)) {
      k.end_first = k.end_first || c.end_first;
      k.end_second = k.end_second || c.end_second;
      return;
    }
  }
  clusters.push_back(c);
}

}  // namespace

ArcIntersection arc_intersect(const GreatArc& first, const GreatArc& second, const Tolerance& tol) {
  const double eps = tol.eps_geo;
  const double merge = 4.0 * eps;
  std::vector<Contact> clusters;

  auto is_end = [&](const Vector& p, const GreatArc& arc) {
    return near(p, arc.a(), eps) || near(p, arc.b(), eps);
  };
  for (const Vector* e : {&first.a(), &first.b()}) {
    if (arc_distance(*e, second) <= eps) add_contact(clusters, {*e, true, is_end(*e, second)}, merge);
  }
  for (const Vector* e : {&second.a(), &second.b()}) {
    if (arc_distance(*e, first) <= eps) add_contact(clusters, {*e, is_end(*e, first), true}, merge);
  }

  const Vector n1 = first.normal();
  const Vector n2 = second.normal();
  const Vector axis = cross(n1, n2);
  const bool cocircular = norm(axis) <= eps;
  if (!cocircular) {
    const Vector c = axis / norm(axis);
    for (const Vector& cand : {c, -c}) {
      if (arc_distance(cand, first) <= eps && arc_distance(cand, second) <= eps) {
        add_contact(clusters, {cand, is_end(cand, first), is_end(cand, second)}, merge);
      }
    }
  }

  ArcIntersection out;
  if (clusters.empty()) return out;
  if (clusters.size() >= 2) {
    // Two distinct common points force a shared subarc; report its extent.
    std::size_t bi = 0, bj = 1;
    double best = -1.0;
    for (std::size_t i = 0; i < clusters.size(); ++i) {
      for (std::size_t j = i + 1; j < clusters.size(); ++j) {
        const double d = angle_between(clusters[i].p, clusters[j].p);
        if (d > best) best = d, bi = i, bj = j;
      }
    }
    out.relation = ArcRelation::Overlap;
    out.points = {clusters[bi].p, clusters[bj].p};
    return out;
  }
  const Contact& k = clusters.front();
  out.points = {k.p};
  if (k.end_first && k.end_second) {
    out.relation = ArcRelation::SharedEndpoint;
  } else if (k.end_first || k.end_second) {
    out.relation = ArcRelation::Touch;
  } else {
    out.relation = ArcRelation::ProperCrossing;
  }
  return out;
}

std::optional<Vector> hemisphere_witness(std::span<const Vector> directions, const Tolerance& tol) {
  if (directions.empty()) return std::nullopt;
  const std::size_t dim = directions.front().size();
  auto min_dot = [&](const Vector& w, std::size_t* arg) {
    double m = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < directions.size(); ++i) {
      const double d = dot(w, directions[i]);
      if (d < m) {
        m = d;
        if (arg) *arg = i;
      }
    }
    return m;
  };
  auto accept = [&](const Vector& w) { return min_dot(w, nullptr) > tol.eps_geo; };

  Vector sum(dim);
  for (const Vector& u : directions) sum += u;
  if (norm(sum) > tol.eps_geo) {
    const Vector w = sum / norm(sum);
    if (accept(w)) return w;
  }
  for (const Vector& u : directions) {
    if (accept(u)) return u;
  }
  // Perceptron: terminates whenever a witness with positive margin exists.
  Vector w = directions.front();
  constexpr int kMaxSteps = 200000;
  for (int step = 0; step < kMaxSteps; ++step) {
    std::size_t worst = 0;
    const double wn = norm(w);
    if (!(wn > 0.0)) break;
    if (min_dot(w, &worst) / wn > tol.eps_geo) return w / wn;
    w += directions[worst];
  }
  return std::nullopt;
}

const char* to_string(HullKind k) {
  switch (k) {
    case HullKind::Point: return "point";
    case HullKind::Arc: return "arc";
    case HullKind::Polygon: return "polygon";
  }
  return "unknown";
}

const char* to_string(Membership m) {
  switch (m) {
    case Membership::Outside: return "outside";
    case Membership::Boundary: return "boundary";
    case Membership::Interior: return "interior";
  }
  return "unknown";
}

std::vector<GreatArc> SphericalHull::boundary_arcs(const Tolerance& tol) const {
  std::vector<GreatArc> arcs;
  if (kind == HullKind::Arc) {
    arcs.emplace_back(vertices[0], vertices[1], tol);
  } else if (kind == HullKind::Polygon) {
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      arcs.emplace_back(vertices[i], vertices[(i + 1) % vertices.size()], tol);
    }
  }
  return arcs;
}

int direction_rank(std::span<const Vector> directions, const Tolerance& tol) {
  if (directions.empty()) return 0;
  const auto rows = static_cast<Eigen::Index>(directions.size());
  const auto cols = static_cast<Eigen::Index>(directions.front().size());
  Eigen::MatrixXd m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = directions[i][j];
  }
  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  int rank = 0;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) {
    if (svd.singularValues()(i) > tol.eps_geo) ++rank;
  }
  return rank;
}

void tangent_frame(const Vector& n, Vector& e1, Vector& e2) {
  std::size_t axis = 0;
  for (std::size_t i = 1; i < 3; ++i) {
    if (std::abs(n[i]) < std::abs(n[axis])) axis = i;
  }
  Vector a(3);
  a[axis] = 1.0;
  e1 = a - n * dot(a, n);
  e1 /= norm(e1);
  e2 = cross(n, e1);
}

namespace {

std::pair<std::size_t, std::size_t> widest_pair(std::span<const Vector> dirs) {
  std::pair<std::size_t, std::size_t> best{0, 0};
  double widest = -1.0;
  for (std::size_t i = 0; i < dirs.size(); ++i) {
    for (std::size_t j = i + 1; j < dirs.size(); ++j) {
      const double a = angle_between(dirs[i], dirs[j]);
      if (a > widest) widest = a, best = {i, j};
    }
  }
  return best;
}

SphericalHull make_arc_hull(std::span<const Vector> dirs, Vector witness) {
  const auto [i, j] = widest_pair(dirs);
  SphericalHull h;
  h.kind = HullKind::Arc;
  h.vertices = {dirs[i], dirs[j]};
  h.vertex_inputs = {i, j};
  h.witness = std::move(witness);
  return h;
}

struct Planar {
  double x, y;
  std::size_t input;
};

double cross2(const Planar& o, const Planar& a, const Planar& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

// True when o -> a -> b fails to make a strict left turn, relative to eps.
bool not_left_turn(const Planar& o, const Planar& a, const Planar& b, double eps) {
  const double la = std::hypot(a.x - o.x, a.y - o.y);
  const double lb = std::hypot(b.x - o.x, b.y - o.y);
  if (la <= eps || lb <= eps) return true;
  return cross2(o, a, b) <= eps * la * lb;
}

}  // namespace

SphericalHull spherical_hull(std::span<const Vector> directions, const Tolerance& tol) {
  if (directions.empty()) throw std::invalid_argument("spherical_hull: empty direction set");
  for (const Vector& u : directions) {
    if (u.size() != 3) throw DimensionUnsupported("spherical_hull works on S^2 only");
    if (std::abs(norm(u) - 1.0) > tol.eps_unit) {
      throw std::invalid_argument("spherical_hull: input is not a unit vector");
    }
  }
  auto witness = hemisphere_witness(directions, tol);
  if (!witness) throw NotInHemisphere("direction set is not contained in an open hemisphere");

  const int rank = direction_rank(directions, tol);
  if (rank <= 1) {
    SphericalHull h;
    h.kind = HullKind::Point;
    h.vertices = {directions.front()};
    h.vertex_inputs = {0};
    h.witness = *witness;
    return h;
  }
  if (rank == 2) return make_arc_hull(directions, *witness);

  // Gnomonic projection onto the tangent plane at the witness maps great
  // circles to lines, so the planar hull pulls back to the spherical hull.
  Vector e1, e2;
  tangent_frame(*witness, e1, e2);
  std::vector<Planar> pts;
  pts.reserve(directions.size());
  for (std::size_t i = 0; i < directions.size(); ++i) {
    const double h = dot(directions[i], *witness);
    pts.push_back({dot(directions[i], e1) / h, dot(directions[i], e2) / h, i});
  }
  std::sort(pts.begin(), pts.end(), [](const Planar& a, const Planar& b) {
    return a.x < b.x || (a.x == b.x && (a.y < b.y || (a.y == b.y && a.input < b.input)));
  });

  const double eps = tol.eps_geo;
  std::vector<Planar> hull(2 * pts.size());
  std::size_t k = 0;
  for (const Planar& p : pts) {
    while (k >= 2 && not_left_turn(hull[k - 2], hull[k - 1], p, eps)) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    const Planar& p = pts[i];
    while (k >= lower && not_left_turn(hull[k - 2], hull[k - 1], p, eps)) --k;
    hull[k++] = p;
  }
  hull.resize(k > 0 ? k - 1 : 0);
  if (hull.size() < 3) return make_arc_hull(directions, *witness);

  SphericalHull h;
  h.kind = HullKind::Polygon;
  h.witness = *witness;
  for (const Planar& p : hull) {
    h.vertices.push_back(directions[p.input]);
    h.vertex_inputs.push_back(p.input);
  }
  return h;
}

Membership point_in_region(const Vector& p, const SphericalHull& hull, const Tolerance& tol,
                           bool arc_relative_interior_is_interior) {
  const double eps = tol.eps_geo;
  switch (hull.kind) {
    case HullKind::Point:
      return near(p, hull.vertices[0], eps) ? Membership::Boundary : Membership::Outside;
    case HullKind::Arc: {
      const GreatArc arc(hull.vertices[0], hull.vertices[1], tol);
      if (arc_distance(p, arc) > eps) return Membership::Outside;
      if (near(p, arc.a(), eps) || near(p, arc.b(), eps)) return Membership::Boundary;
      return arc_relative_interior_is_interior ? Membership::Interior : Membership::Boundary;
    }
    case HullKind::Polygon: {
      double lowest = std::numeric_limits<double>::infinity();
      const std::size_t m = hull.vertices.size();
      for (std::size_t i = 0; i < m; ++i) {
        const Vector n = cross(hull.vertices[i], hull.vertices[(i + 1) % m]);
        lowest = std::min(lowest, dot(p, n) / norm(n));
      }
      if (lowest > eps) return Membership::Interior;
      if (lowest < -eps) return Membership::Outside;
      return Membership::Boundary;
    }
  }
  return Membership::Outside;
}

}  // namespace diamgraph
