#include "diamgraph/io.hpp"

#include <cstdio>
#include <sstream>

#include "diamgraph/errors.hpp"

namespace diamgraph {

using nlohmann::json;

PointSet parse_pointset(std::string_view text, const Tolerance& tol, json* metadata) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("point set is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw SchemaError("point set must be a JSON object");
  if (!doc.contains("dimension") || !doc["dimension"].is_number_integer()) {
    throw SchemaError("point set needs an integer \"dimension\"");
  }
  if (!doc.contains("points") || !doc["points"].is_array()) throw SchemaError("point set needs a \"points\" array");
  const auto dim_signed = doc["dimension"].get<long long>();
  if (dim_signed < 2) throw SchemaError("\"dimension\" must be at least 2");
  const auto dim = static_cast<std::size_t>(dim_signed);

  std::vector<double> coords;
  const json& pts = doc["points"];
  coords.reserve(pts.size() * dim);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const json& p = pts[i];
    if (!p.is_array()) throw SchemaError("point " + std::to_string(i) + " is not an array");
    for (const json& x : p) {
      if (!x.is_number()) throw SchemaError("point " + std::to_string(i) + " has a non-numeric coordinate");
    }
    if (p.size() != dim) {
      throw InvariantError("point " + std::to_string(i) + " has " + std::to_string(p.size()) +
                           " coordinates, expected " + std::to_string(dim));
    }
    for (const json& x : p) coords.push_back(x.get<double>());
  }

  std::vector<std::string> labels;
  if (doc.contains("labels")) {
    const json& l = doc["labels"];
    if (!l.is_array()) throw SchemaError("\"labels\" must be an array of strings");
    for (const json& s : l) {
      if (!s.is_string()) throw SchemaError("\"labels\" must be an array of strings");
      labels.push_back(s.get<std::string>());
    }
    if (labels.size() != pts.size()) throw InvariantError("label count differs from point count");
  }
  if (doc.contains("metadata") && !doc["metadata"].is_object()) throw SchemaError("\"metadata\" must be an object");
  if (metadata) *metadata = doc.contains("metadata") ? doc["metadata"] : json(nullptr);

  PointSet ps;
  try {
    ps = PointSet(dim, std::move(coords), std::move(labels));
  } catch (const std::invalid_argument& e) {
    throw InvariantError(e.what());
  }
  if (auto dup = find_near_duplicate(ps, tol)) {
    throw InvariantError("duplicate points " + std::to_string(dup->first) + " and " + std::to_string(dup->second));
  }
  return ps;
}

std::string format_real(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string serialize_pointset(const PointSet& ps, const json& metadata) {
  std::ostringstream os;
  os << "{\n  \"dimension\": " << ps.dimension() << ",\n  \"points\": [";
  for (std::size_t i = 0; i < ps.size(); ++i) {
    os << (i == 0 ? "\n    [" : ",\n    [");
    const auto p = ps[i];
    for (std::size_t k = 0; k < p.size(); ++k) os << (k == 0 ? "" : ", ") << format_real(p[k]);
    os << ']';
  }
  os << (ps.empty() ? "]" : "\n  ]");
  if (!ps.labels().empty()) os << ",\n  \"labels\": " << json(ps.labels()).dump();
  if (!metadata.is_null()) os << ",\n  \"metadata\": " << metadata.dump();
  os << "\n}\n";
  return os.str();
}

json to_json(const Vector& v) {
  json a = json::array();
  for (double x : v.coords()) a.push_back(x);
  return a;
}

json to_json(const Tolerance& tol) {
  return {{"eps_unit", tol.eps_unit}, {"eps_diam", tol.eps_diam}, {"eps_geo", tol.eps_geo}};
}

json to_json(const VerificationReport& r) {
  json w = json::array();
  for (const Witness& x : r.witnesses) {
    json pts = json::array();
    for (const Vector& p : x.points) pts.push_back(to_json(p));
    w.push_back({{"kind", x.kind}, {"message", x.message}, {"vertices", x.vertices}, {"points", pts}});
  }
  json out = {{"check", r.check},
              {"claim", r.claim},
              {"pass", r.pass},
              {"counts", r.counts},
              {"witnesses", w},
              {"tolerances", to_json(r.tolerance)},
              {"truncated", r.truncated}};
  if (!r.metrics.empty()) out["metrics"] = r.metrics;
  if (!r.notes.empty()) out["notes"] = r.notes;
  return out;
}

json to_json(const DiameterGraph& g) {
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  return {{"n", g.vertex_count()},
          {"dimension", g.dimension()},
          {"diameter", g.original_diameter()},
          {"edge_count", g.edge_count()},
          {"edges", edges}};
}

json to_json(const SphericalDrawing& dr) {
  json verts = json::array();
  for (const CoverVertex& v : dr.vertices) {
    verts.push_back({{"owner", v.owner}, {"color", to_string(v.color)}, {"position", to_json(v.position)}});
  }
  json edges = json::array();
  for (const DrawnEdge& e : dr.edges) {
    json poly = json::array();
    for (const Vector& p : e.polyline) poly.push_back(to_json(p));
    edges.push_back({{"diameter", {e.diameter.u, e.diameter.v}},
                     {"from", e.from_hub},
                     {"to", e.to_hub},
                     {"polyline", poly},
                     {"twin", e.twin}});
  }
  return {{"graph_vertices", dr.graph_vertices},
          {"vertices", verts},
          {"edges", edges},
          {"rotation", dr.rotation},
          {"non_extreme_junctions", dr.non_extreme_junctions}};
}

json to_json(const TraceRecord& t) {
  return {{"restart", t.restart},
          {"iteration", t.iteration},
          {"temperature", t.temperature},
          {"objective", t.objective},
          {"best_count", t.best_count}};
}

json reports_document(const std::vector<VerificationReport>& reports) {
  bool pass = true;
  json arr = json::array();
  for (const auto& r : reports) {
    pass = pass && r.pass;
    arr.push_back(to_json(r));
  }
  return {{"pass", pass}, {"reports", arr}};
}

}  // namespace diamgraph
