#include <cmath>

#include "doctest.h"
#include "diamgraph/diameter_graph.hpp"
#include "diamgraph/errors.hpp"
#include "diamgraph/extremal.hpp"
#include "diamgraph/lemma3.hpp"
#include "diamgraph/regions.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace diamgraph;

namespace {

Vector dir(const DiameterGraph& g, std::size_t x, std::size_t y) { return normalize(g.points().point(y) - g.points().point(x)); }

bool near(const Vector& a, const Vector& b, double eps = 1e-9) { return distance(a, b) <= eps; }

}  // namespace

TEST_SUITE("spherical_regions") {

TEST_CASE("tetrahedron vertex region") {
  const DiameterGraph g = build_diameter_graph(gen_tetrahedron());
  for (std::size_t x = 0; x < 4; ++x) {
    const SphericalRegion r = build_region(g, x);
    CHECK(r.color == Color::Red);
    REQUIRE(r.kind() == HullKind::Polygon);
    REQUIRE(r.vertices().size() == 3);
    for (std::size_t y : g.neighbors(x)) {
      const Vector u = dir(g, x, y);
      bool found = false;
      for (const auto& v : r.vertices()) found = found || near(u, v, 1e-12);
      CHECK(found);
      std::vector<std::array<double, 3>> rest;
      for (std::size_t z : g.neighbors(x))
        if (z != y) rest.push_back(oracle::arr(dir(g, x, z)));
      CHECK_FALSE(oracle::in_cone_of(oracle::arr(u), rest));
    }
    CHECK(r.neighbor_dirs.size() == 3);
    for (const auto& nd : r.neighbor_dirs) CHECK(nd.extreme);
  }
}

TEST_CASE("degree two vertex gives an arc") {
  const DiameterGraph g = build_diameter_graph(gen_spindle(10));
  int arcs = 0;
  for (std::size_t x = 0; x < g.vertex_count(); ++x) {
    if (g.degree(x) != 2) continue;
    ++arcs;
    const SphericalRegion r = build_region(g, x);
    REQUIRE(r.kind() == HullKind::Arc);
    const Vector a = dir(g, x, g.neighbors(x)[0]);
    const Vector b = dir(g, x, g.neighbors(x)[1]);
    CHECK(((near(r.vertices()[0], a) && near(r.vertices()[1], b)) ||
           (near(r.vertices()[0], b) && near(r.vertices()[1], a))));
  }
  CHECK(arcs == 6);
}

TEST_CASE("build_region preconditions") {
  const DiameterGraph path = build_diameter_graph(PointSet(3, {1, 0, 0, 0, 0, 0, std::cos(0.9), std::sin(0.9), 0}));
  CHECK_THROWS_AS(build_region(path, 0), DegenerateRegion);
  const DiameterGraph flat = build_diameter_graph(gen_random(8, 2, SampleModel::Sphere, 3));
  CHECK_THROWS_AS(build_region(flat, 0), DimensionUnsupported);
}

TEST_CASE("antipode examples") {
  SphericalRegion pt;
  pt.shape = spherical_hull(std::vector<Vector>{Vector{0, 0, 1}});
  CHECK(antipode(pt).vertices().at(0) == Vector{0, 0, -1});
  CHECK(antipode(pt).color == Color::Blue);

  SphericalRegion arc;
  arc.owner = 5;
  arc.shape = spherical_hull(std::vector<Vector>{Vector{1, 0, 0}, Vector{0, 1, 0}});
  const SphericalRegion b = antipode(arc);
  CHECK(b.owner == 5);
  std::set<std::vector<double>> got, want{{-1, 0, 0}, {0, -1, 0}};
  for (const auto& v : b.vertices()) got.insert({v[0] + 0.0, v[1] + 0.0, v[2] + 0.0});
  CHECK(got == want);

  const DiameterGraph g = build_diameter_graph(gen_tetrahedron());
  const SphericalRegion r = build_region(g, 0);
  const SphericalRegion br = antipode(r);
  const auto& v = br.vertices();
  CHECK(dot(cross(v[0], v[1]), v[2]) > 0);
  for (std::size_t k = 0; k < v.size(); ++k) {
    bool found = false;
    for (const auto& w : r.vertices()) found = found || v[k] == -w;
    CHECK(found);
  }
}

TEST_CASE("interior_point examples") {
  SphericalRegion arc;
  arc.shape = spherical_hull(std::vector<Vector>{Vector{1, 0, 0}, Vector{0, 1, 0}});
  CHECK(near(interior_point(arc), Vector{1 / std::sqrt(2.0), 1 / std::sqrt(2.0), 0}, 1e-15));
  CHECK(point_in_region(interior_point(arc), arc.shape, {}, true) == Membership::Interior);

  const DiameterGraph g = build_diameter_graph(gen_tetrahedron());
  const SphericalRegion r = build_region(g, 2);
  const Vector c = interior_point(r);
  CHECK(point_in_region(c, r.shape) == Membership::Interior);
  std::vector<std::array<double, 3>> verts;
  for (const auto& v : r.vertices()) verts.push_back(oracle::arr(v));
  CHECK(oracle::strictly_inside_polygon(oracle::arr(c), verts));

  SphericalRegion pt;
  pt.shape = spherical_hull(std::vector<Vector>{Vector{0, 0, 1}});
  CHECK_THROWS_AS(interior_point(pt), DegenerateRegion);
}

TEST_CASE("region invariants on random cores") {
  for (std::uint64_t s = 0; s < 150; ++s) {
    const PointSet ps = gen_random(4 + s % 22, 3, SampleModel::Ball, 900 + s);
    const PruneResult pr = prune_low_degree(build_diameter_graph(ps));
    const auto regions = build_regions(pr.core);
    REQUIRE(regions.size() == pr.core.vertex_count());
    for (const auto& r : regions) {
      for (const auto& nd : r.neighbor_dirs) CHECK(point_in_region(nd.direction, r.shape) != Membership::Outside);
      for (const auto& v : r.vertices()) CHECK(dot(r.shape.witness, v) > 0);
      const SphericalRegion back = antipode(antipode(r));
      REQUIRE(back.vertices().size() == r.vertices().size());
      for (std::size_t k = 0; k < r.vertices().size(); ++k) CHECK(near(back.vertices()[k], r.vertices()[k], 1e-9));
      CHECK(back.color == Color::Red);
    }
    CHECK(check_region_membership(pr.core, regions).pass);
    CHECK(check_lemma1(pr.core, regions).pass);
    CHECK(check_lemma2(pr.core, regions).pass);
  }
}

TEST_CASE("region checks on transformed equality configurations") {
  for (std::uint64_t s = 0; s < 120; ++s) {
    const PointSet ps = fixture::structured(s);
    const DiameterGraph g = build_diameter_graph(ps);
    const PruneResult pr = prune_low_degree(g);
    REQUIRE(pr.core.vertex_count() >= 4);
    const auto regions = build_regions(pr.core);
    CHECK(check_region_membership(pr.core, regions).pass);
    CHECK(check_lemma1(pr.core, regions).pass);
    CHECK(check_lemma2(pr.core, regions).pass);
  }
}

TEST_CASE("lemma1 examples") {
  const DiameterGraph t = build_diameter_graph(gen_tetrahedron());
  auto regions = build_regions(t);
  CHECK(check_lemma1(t, regions).pass);
  const DiameterGraph sp = build_diameter_graph(gen_spindle(10));
  CHECK(check_lemma1(sp, build_regions(sp)).pass);
  SphericalRegion copy = regions[0];
  copy.owner = 1;
  regions[1] = copy;
  const auto r = check_lemma1(t, regions);
  CHECK_FALSE(r.pass);
  REQUIRE_FALSE(r.witnesses.empty());
}

TEST_CASE("lemma2 examples") {
  const DiameterGraph t = build_diameter_graph(gen_tetrahedron());
  const auto regions = build_regions(t);
  for (std::size_t x = 0; x < 4; ++x) {
    CHECK(region_contact(regions[x], antipode(regions[x])).points.empty());
    CHECK_FALSE(region_contact(regions[x], antipode(regions[x])).overlap);
    for (std::size_t y = 0; y < 4; ++y) {
      if (x == y) continue;
      const RegionContact c = region_contact(regions[x], antipode(regions[y]));
      CHECK_FALSE(c.overlap);
      REQUIRE(c.points.size() == 1);
      CHECK(near(c.points[0], dir(t, x, y), 1e-9));
    }
  }
  CHECK(check_lemma2(t, regions).pass);

  const DiameterGraph sp = build_diameter_graph(gen_spindle(10));
  const auto sr = build_regions(sp);
  for (std::size_t x = 0; x < sp.vertex_count(); ++x)
    for (std::size_t y = 0; y < sp.vertex_count(); ++y)
      if (x != y && !sp.has_edge(x, y)) {
        const RegionContact c = region_contact(sr[x], antipode(sr[y]));
        CHECK(c.points.empty());
        CHECK_FALSE(c.overlap);
      }
  CHECK(check_lemma2(sp, sr).pass);
}

TEST_CASE("lemma2 detects a wrong region") {
  const DiameterGraph t = build_diameter_graph(gen_tetrahedron());
  auto regions = build_regions(t);
  // Replace R(0) by its antipode: it now meets B(0) and misses every edge.
  SphericalRegion flipped = antipode(regions[0]);
  flipped.color = Color::Red;
  regions[0] = flipped;
  CHECK_FALSE(check_lemma2(t, regions).pass);
}

TEST_CASE("lemma3 examples") {
  SUBCASE("identity case") {
    const Lemma3Instance inst{3, {Vector{0, 0, 1}}, {1.0}, Vector{0.3, 0.2, 0.5}};
    const auto a = check_lemma3(inst);
    CHECK(a.holds);
    CHECK(a.triangle_chain_holds);
    CHECK(a.inner_bounds_hold);
  }
  SUBCASE("boundary case with equality") {
    const double l = 1 / std::sqrt(2.0);
    const Lemma3Instance inst{3, {Vector{1, 0, 0}, Vector{0, 1, 0}}, {l, l}, Vector{0, 0, 0}};
    const auto a = check_lemma3(inst);
    CHECK(a.holds);
    CHECK(a.distance == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(a.combination_norm == doctest::Approx(1.0));
    CHECK(a.lambda_sum == doctest::Approx(std::sqrt(2.0)));
  }
  SUBCASE("hypothesis violations") {
    CHECK_THROWS_AS(check_lemma3({3, {Vector{1, 0, 0}}, {1.0}, Vector{3, 0, 0}}), InvalidInstance);
    CHECK_THROWS_AS(check_lemma3({3, {Vector{2, 0, 0}}, {0.5}, Vector{1, 0, 0}}), InvalidInstance);
    CHECK_THROWS_AS(check_lemma3({3, {Vector{1, 0, 0}}, {-1.0}, Vector{-1, 0, 0}}), InvalidInstance);
    CHECK_THROWS_AS(check_lemma3({3, {Vector{1, 0, 0}, Vector{0, 1, 0}}, {0.5, 0.5}, Vector{0, 0, 0}}),
                    InvalidInstance);
  }
}

TEST_CASE("random lemma3 instances satisfy their hypotheses") {
  const auto verify = [](const Lemma3Instance& inst) {
    REQUIRE(inst.xs.size() == inst.lambdas.size());
    Vector c(inst.dimension);
    for (std::size_t i = 0; i < inst.xs.size(); ++i) {
      REQUIRE(inst.xs[i].size() == inst.dimension);
      CHECK(std::abs(norm(inst.xs[i]) - 1) < 1e-12);
      CHECK(inst.lambdas[i] >= 0);
      CHECK(distance(inst.y, inst.xs[i]) <= 1 + 1e-12);
      c += inst.lambdas[i] * inst.xs[i];
    }
    CHECK(std::abs(norm(c) - 1) < 1e-12);
  };
  const auto a = random_lemma3_instance(2, 1, 5);
  verify(a);
  CHECK(a.lambdas[0] == doctest::Approx(1.0));
  verify(random_lemma3_instance(3, 3, 5));
  verify(random_lemma3_instance(8, 5, 5));
  CHECK(random_lemma3_instance(5, 4, 77).y == random_lemma3_instance(5, 4, 77).y);
  CHECK_THROWS_AS(random_lemma3_instance(1, 1, 1), std::invalid_argument);
}

TEST_CASE("lemma3 audit on many instances") {
  for (std::size_t d : {2, 3, 4, 5, 8}) {
    for (std::uint64_t s = 0; s < 400; ++s) {
      const auto inst = random_lemma3_instance(d, 1 + s % 6, s * 31 + d);
      const auto a = check_lemma3(inst);
      CHECK(a.holds);
      CHECK(a.slack <= 1e-9);
      CHECK(a.triangle_chain_holds);
      CHECK(a.inner_bounds_hold);
      CHECK(1 - 1e-12 <= a.combination_norm);
      CHECK(a.combination_norm <= a.lambda_sum + 1e-12);
      for (double t : a.inner_terms) CHECK(t <= a.neg_y_norm2 + 1e-12);
    }
  }
  const std::vector<std::size_t> dims{2, 3};
  const auto r = lemma3_suite(dims, 200, 4);
  CHECK(r.pass);
  CHECK(r.counts.at("instances") == 400);
}

}  // TEST_SUITE
