#include "diamgraph/double_cover.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <string>

#include "diamgraph/errors.hpp"

namespace diamgraph {

SphericalDrawing build_double_cover(const DiameterGraph& core, const std::vector<SphericalRegion>& regions,
                                    const Tolerance& tol) {
  if (core.dimension() != 3) throw DimensionUnsupported("the double cover drawing lives on S^2");
  const std::size_t n = core.vertex_count();
  if (regions.size() != n) throw std::invalid_argument("need one red region per vertex");
  SphericalDrawing dr;
  dr.graph_vertices = n;
  dr.vertices.resize(2 * n);
  for (std::size_t v = 0; v < n; ++v) {
    if (core.degree(v) < 2) throw DegenerateRegion("vertex " + std::to_string(v) + " has degree < 2");
    const Vector xr = interior_point(regions[v], tol);
    dr.vertices[red_hub(v)] = {v, Color::Red, xr};
    dr.vertices[blue_hub(v)] = {v, Color::Blue, -xr};
  }

  auto is_extreme = [&](std::size_t x, std::size_t y) {
    for (const NeighborDirection& nd : regions[x].neighbor_dirs) {
      if (nd.neighbor == y) return nd.extreme;
    }
    return false;
  };

  for (const Edge& e : core.edges()) {
    const Vector p = normalize(core.points().point(e.v) - core.points().point(e.u), tol);
    const Vector& ur = dr.vertices[red_hub(e.u)].position;
    const Vector& vr = dr.vertices[red_hub(e.v)].position;
    // Junction p lies in R(u) and in B(v) = -R(v).
    if (angle_between(p, ur) <= tol.eps_geo || angle_between(p, -vr) <= tol.eps_geo) {
      throw JunctionCoincidesWithHub("junction of edge (" + std::to_string(e.u) + ", " +
                                     std::to_string(e.v) + ") coincides with a hub");
    }
    const std::size_t k = dr.edges.size();
    DrawnEdge forward{e, red_hub(e.u), blue_hub(e.v), {ur, p, -vr}, k + 1};
    DrawnEdge backward{e, red_hub(e.v), blue_hub(e.u), {vr, -p, -ur}, k};
    dr.edges.push_back(std::move(forward));
    dr.edges.push_back(std::move(backward));
    if (!is_extreme(e.u, e.v)) dr.non_extreme_junctions.push_back(k);
    if (!is_extreme(e.v, e.u)) dr.non_extreme_junctions.push_back(k + 1);
  }
  recompute_rotation(dr);
  return dr;
}

SphericalDrawing build_double_cover(const DiameterGraph& core, const Tolerance& tol) {
  return build_double_cover(core, build_regions(core, tol), tol);
}

void recompute_rotation(SphericalDrawing& dr) {
  dr.rotation.assign(dr.vertices.size(), {});
  std::vector<std::vector<std::pair<double, std::size_t>>> keyed(dr.vertices.size());
  for (std::size_t k = 0; k < dr.edges.size(); ++k) {
    const DrawnEdge& e = dr.edges[k];
    for (std::size_t hub : {e.from_hub, e.to_hub}) {
      const Vector& h = dr.vertices[hub].position;
      Vector e1, e2;
      tangent_frame(h, e1, e2);
      const Vector& q = e.polyline[1];
      const Vector t = q - h * dot(q, h);
      keyed[hub].emplace_back(std::atan2(dot(t, e2), dot(t, e1)), k);
    }
  }
  for (std::size_t h = 0; h < keyed.size(); ++h) {
    std::sort(keyed[h].begin(), keyed[h].end());
    for (const auto& [angle, k] : keyed[h]) dr.rotation[h].push_back(k);
  }
}

VerificationReport verify_no_crossings(const SphericalDrawing& dr, const Tolerance& tol) {
  auto r = make_report("crossings", "the centrally symmetric drawing of the double cover has no crossings", tol);
  struct Piece {
    std::size_t edge;
    std::size_t end_a;  // endpoint ids: hubs first, then junctions offset by hub count
    std::size_t end_b;
    std::optional<GreatArc> arc;
  };
  const std::size_t hubs = dr.vertices.size();
  std::vector<Piece> pieces;
  for (std::size_t k = 0; k < dr.edges.size(); ++k) {
    const DrawnEdge& e = dr.edges[k];
    const std::array<std::size_t, 3> ids{e.from_hub, hubs + k, e.to_hub};
    for (std::size_t s = 0; s < 2; ++s) {
      Piece p{k, ids[s], ids[s + 1], std::nullopt};
      try {
        p.arc.emplace(e.polyline[s], e.polyline[s + 1], tol);
      } catch (const InvalidArc& ex) {
        r.fail({"invalid_piece", "drawn edge " + std::to_string(k) + ": " + ex.what(), {k}, {}});
      }
      pieces.push_back(std::move(p));
    }
  }
  std::int64_t pairs = 0, crossings = 0;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (!pieces[i].arc) continue;
    for (std::size_t j = i + 1; j < pieces.size(); ++j) {
      if (!pieces[j].arc) continue;
      ++pairs;
      const ArcIntersection ai = arc_intersect(*pieces[i].arc, *pieces[j].arc, tol);
      if (ai.relation == ArcRelation::Disjoint) continue;
      if (ai.relation == ArcRelation::SharedEndpoint) {
        const Piece& a = pieces[i];
        const Piece& b = pieces[j];
        std::optional<std::size_t> shared;
        for (std::size_t x : {a.end_a, a.end_b}) {
          if (x == b.end_a || x == b.end_b) shared = x;
        }
        if (shared) {
          const std::size_t id = *shared;
          const Vector& loc = id < hubs ? dr.vertices[id].position : dr.edges[id - hubs].polyline[1];
          if (angle_between(loc, ai.points.front()) <= 4.0 * tol.eps_geo) continue;
        }
      }
      ++crossings;
      r.fail({std::string("pieces_") + to_string(ai.relation),
              "drawn edges " + std::to_string(pieces[i].edge) + " and " + std::to_string(pieces[j].edge) +
                  " meet (" + to_string(ai.relation) + ")",
              {pieces[i].edge, pieces[j].edge}, ai.points});
    }
  }
  r.counts["pieces"] = static_cast<std::int64_t>(pieces.size());
  r.counts["pairs"] = pairs;
  r.counts["crossings"] = crossings;
  return r;
}

VerificationReport verify_drawing_structure(const DiameterGraph& core, const SphericalDrawing& dr,
                                            const Tolerance& tol) {
  auto r = make_report("drawing_structure",
                       "the drawing is a centrally symmetric, properly 2-coloured double cover", tol);
  auto close = [&](const Vector& a, const Vector& b) { return angle_between(a, b) <= tol.eps_geo; };
  for (std::size_t v = 0; v < dr.graph_vertices; ++v) {
    const CoverVertex& red = dr.vertices[red_hub(v)];
    const CoverVertex& blue = dr.vertices[blue_hub(v)];
    if (red.color != Color::Red || blue.color != Color::Blue || red.owner != v || blue.owner != v) {
      r.fail({"hub_labels", "hubs of vertex " + std::to_string(v) + " are mislabelled", {v}, {}});
    }
    if (!close(blue.position, -red.position)) {
      r.fail({"hub_symmetry", "blue hub is not the antipode of the red hub", {v}, {red.position, blue.position}});
    }
  }
  std::map<Edge, int> lifts;
  for (std::size_t k = 0; k < dr.edges.size(); ++k) {
    const DrawnEdge& e = dr.edges[k];
    const CoverVertex& a = dr.vertices[e.from_hub];
    const CoverVertex& b = dr.vertices[e.to_hub];
    if (a.color == b.color) r.fail({"colouring", "drawn edge joins hubs of one colour", {k}, {}});
    lifts[Edge{std::min(a.owner, b.owner), std::max(a.owner, b.owner)}]++;
    const DrawnEdge& t = dr.edges[e.twin];
    if (t.twin != k || !close(t.polyline[0], -e.polyline[2]) || !close(t.polyline[1], -e.polyline[1]) ||
        !close(t.polyline[2], -e.polyline[0])) {
      r.fail({"twin_symmetry", "drawn edge " + std::to_string(k) + " is not antipodal to its twin", {k, e.twin}, {}});
    }
  }
  for (const Edge& e : core.edges()) {
    auto it = lifts.find(e);
    if (it == lifts.end() || it->second != 2) {
      r.fail({"lift_fidelity", "graph edge is not lifted exactly twice", {e.u, e.v}, {}});
    }
  }
  if (lifts.size() != core.edge_count()) r.fail({"lift_fidelity", "drawing lifts edges absent from the graph", {}, {}});
  r.counts["hubs"] = static_cast<std::int64_t>(dr.vertices.size());
  r.counts["drawn_edges"] = static_cast<std::int64_t>(dr.edges.size());
  r.counts["non_extreme_junctions"] = static_cast<std::int64_t>(dr.non_extreme_junctions.size());
  return r;
}

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

EulerResult euler_check(const SphericalDrawing& dr) {
  EulerResult out;
  const std::size_t hubs = dr.vertices.size();
  out.vertices = static_cast<std::int64_t>(hubs);
  out.edges = static_cast<std::int64_t>(dr.edges.size());
  if (hubs == 0) {
    out.faces = 1;
    out.pass = true;
    return out;
  }
  if (dr.rotation.size() != hubs) throw InconsistentRotation("rotation system does not cover every hub");

  UnionFind uf(hubs);
  for (const DrawnEdge& e : dr.edges) uf.unite(e.from_hub, e.to_hub);

  // Dart 2k runs from_hub -> to_hub along edge k, dart 2k+1 the reverse.
  auto head = [&](std::size_t d) { return d % 2 == 0 ? dr.edges[d / 2].to_hub : dr.edges[d / 2].from_hub; };
  auto next = [&](std::size_t d) {
    const std::size_t v = head(d);
    const std::size_t k = d / 2;
    const auto& rot = dr.rotation[v];
    const auto it = std::find(rot.begin(), rot.end(), k);
    if (it == rot.end()) throw InconsistentRotation("edge missing from the rotation of its hub");
    const std::size_t k2 = rot[(std::size_t(it - rot.begin()) + 1) % rot.size()];
    return dr.edges[k2].from_hub == v ? 2 * k2 : 2 * k2 + 1;
  };

  std::map<std::size_t, std::int64_t> comp_v, comp_e, comp_f;
  for (std::size_t h = 0; h < hubs; ++h) {
    comp_v[uf.find(h)]++;
    if (dr.rotation[h].empty()) comp_f[uf.find(h)]++;  // isolated hub: one face
  }
  for (const DrawnEdge& e : dr.edges) comp_e[uf.find(e.from_hub)]++;

  const std::size_t darts = 2 * dr.edges.size();
  std::vector<bool> seen(darts, false);
  for (std::size_t d0 = 0; d0 < darts; ++d0) {
    if (seen[d0]) continue;
    std::size_t d = d0;
    std::int64_t len = 0;
    do {
      if (seen[d]) throw InconsistentRotation("face tracing revisited a dart before closing");
      seen[d] = true;
      ++len;
      d = next(d);
    } while (d != d0);
    out.face_degree_sum += len;
    comp_f[uf.find(dr.edges[d0 / 2].from_hub)]++;
  }

  bool per_component = true;
  std::int64_t traced = 0;
  for (const auto& [root, v] : comp_v) {
    const std::int64_t f = comp_f[root];
    traced += f;
    per_component = per_component && (v - comp_e[root] + f == 2);
  }
  out.components = static_cast<std::int64_t>(comp_v.size());
  out.faces = traced - (out.components - 1);

  const std::int64_t V = out.vertices, E = out.edges;
  const auto n = static_cast<std::int64_t>(dr.graph_vertices);
  const bool euler = V - E + out.faces == 1 + out.components;
  const bool sparse = V < 3 || E <= 2 * V - 4;
  const bool counts = E % 2 == 0 && E <= 4 * n - 4;
  out.pass = per_component && euler && sparse && counts && out.face_degree_sum == 2 * E;
  return out;
}

VerificationReport euler_report(const SphericalDrawing& dr, const Tolerance& tol) {
  auto r = make_report("euler",
                       "Euler's formula on the crossing-free cover gives at most 4n-4 cover edges, "
                       "hence at most 2n-2 diameters",
                       tol);
  const EulerResult e = euler_check(dr);
  r.counts["V"] = e.vertices;
  r.counts["E"] = e.edges;
  r.counts["F"] = e.faces;
  r.counts["components"] = e.components;
  r.counts["n"] = static_cast<std::int64_t>(dr.graph_vertices);
  r.counts["diameters"] = e.edges / 2;
  r.counts["bound"] = 2 * static_cast<std::int64_t>(dr.graph_vertices) - 2;
  if (!e.pass) {
    r.fail({"euler", "V - E + F = " + std::to_string(e.vertices - e.edges + e.faces) + " with " +
                         std::to_string(e.components) + " component(s)",
            {}, {}});
  }
  return r;
}

}  // namespace diamgraph
