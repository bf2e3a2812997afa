#include <cstdlib>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "diamgraph/cli.hpp"
#include "diamgraph/diameter_graph.hpp"
#include "diamgraph/double_cover.hpp"
#include "diamgraph/errors.hpp"
#include "diamgraph/extremal.hpp"
#include "diamgraph/io.hpp"
#include "diamgraph/svg.hpp"

using namespace diamgraph;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli_dispatch(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::size_t count_of(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t p = hay.find(needle); p != std::string::npos; p = hay.find(needle, p + 1)) ++n;
  return n;
}

}  // namespace

TEST_SUITE("cli_io") {

TEST_CASE("parse_pointset examples") {
  const PointSet ps = parse_pointset(R"({"dimension":3,"points":[[0,0,0],[1,0,0]]})");
  CHECK(ps.size() == 2);
  CHECK(ps.point(1) == Vector{1, 0, 0});
  CHECK_THROWS_AS(parse_pointset(R"({"dimension":3,"points":[[0,0,0],[0,0,0]]})"), InvariantError);
  CHECK_THROWS_AS(parse_pointset(R"({"dimension":3,"points":[[0,0,0],[0,0]]})"), InvariantError);
  CHECK_THROWS_AS(parse_pointset(R"({"dimension":3,"points":[[0,0,"x"]]})"), SchemaError);
  CHECK_THROWS_AS(parse_pointset(R"({"points":[[0,0,0]]})"), SchemaError);
  CHECK_THROWS_AS(parse_pointset("{not json"), SchemaError);
  json meta;
  const PointSet lab = parse_pointset(R"({"dimension":2,"points":[[0,0],[1,0]],"labels":["a","b"],"metadata":{"k":1}})",
                                      {}, &meta);
  CHECK(lab.labels() == std::vector<std::string>{"a", "b"});
  CHECK(meta["k"] == 1);
}

TEST_CASE("serialization round trips bit for bit") {
  for (std::size_t n = 4; n < 30; n += 5) {
    const PointSet s = gen_spindle(n);
    CHECK(parse_pointset(serialize_pointset(s)) == s);
  }
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const PointSet r = gen_random(17, 2 + seed % 5, SampleModel::Ball, seed);
    CHECK(parse_pointset(serialize_pointset(r)) == r);
  }
  const PointSet lab(2, {0.1, 0.2, 1.0 / 3, -2.5e-300}, {"p", "q"});
  CHECK(parse_pointset(serialize_pointset(lab, json{{"note", "x"}})) == lab);
  CHECK(format_real(0.1) == "0.10000000000000001");
}

TEST_CASE("reports are valid json naming their claim") {
  const DiameterGraph g = build_diameter_graph(gen_tetrahedron());
  const auto doc = reports_document({verify_bound(g), euler_report(build_double_cover(g))});
  CHECK(doc["pass"] == true);
  for (const auto& r : doc["reports"]) {
    CHECK(r["claim"].get<std::string>().size() > 10);
    CHECK(r["witnesses"].empty());
  }
  const json parsed = json::parse(doc.dump());
  CHECK(parsed == doc);
}

TEST_CASE("svg rendering") {
  const SphericalDrawing dr = build_double_cover(build_diameter_graph(gen_tetrahedron()));
  const std::string a = render_svg(dr, Vector{0.3, 0.4, std::sqrt(0.75)});
  CHECK(a == render_svg(dr, Vector{0.3, 0.4, std::sqrt(0.75)}));
  CHECK(count_of(a, "<circle class=\"vertex") == 8);
  CHECK(count_of(a, "<g class=\"edge\"") == 12);
  CHECK(count_of(a, "vertex red") == 4);
  CHECK(count_of(a, "vertex blue") == 4);
  // Reversing the view swaps front and back for the symmetric drawing.
  const std::string b = render_svg(dr, Vector{-0.3, -0.4, -std::sqrt(0.75)});
  CHECK(count_of(a, "front\"") == count_of(b, "back\""));
  CHECK(count_of(a, "back\"") == count_of(b, "front\""));
  CHECK(count_of(a, "red front") == count_of(b, "blue front"));
}

TEST_CASE("cli pipelines") {
  const Run gen = run({"gen", "spindle", "-n", "10"});
  REQUIRE(gen.code == kExitOk);
  const Run graph = run({"graph"}, gen.out);
  CHECK(graph.code == kExitOk);
  const json g = json::parse(graph.out);
  CHECK(g["pass"] == true);
  CHECK(g["reports"][0]["counts"]["edges"] == 18);
  CHECK(g["reports"][0]["counts"]["bound"] == 18);

  const Run tet = run({"gen", "tetrahedron"});
  const Run all = run({"verify", "--all"}, tet.out);
  CHECK(all.code == kExitOk);
  CHECK(json::parse(all.out)["pass"] == true);

  const Run bad = run({"graph"}, "{\"dimension\": 3, \"points\": [[0,0,0],");
  CHECK(bad.code == kExitUsage);
  CHECK_FALSE(bad.err.empty());
}

TEST_CASE("cli exit codes and subcommands") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"gen", "cube"}).code == kExitUsage);
  CHECK(run({"gen", "spindle", "-n", "3"}).code == kExitUsage);
  CHECK(run({"--eps-geo", "0.5", "gen", "tetrahedron"}).code == kExitUsage);
  CHECK(run({"--help"}).code == kExitOk);

  const Run dup = run({"graph"}, R"({"dimension":3,"points":[[0,0,0],[0,0,0]]})");
  CHECK(dup.code == kExitUsage);

  const Run l3 = run({"verify", "--lemma3", "--trials", "50", "--dim", "2", "3"});
  CHECK(l3.code == kExitOk);
  CHECK(json::parse(l3.out)["reports"][0]["counts"]["instances"] == 100);

  const Run cover = run({"cover"}, run({"gen", "tetrahedron"}).out);
  CHECK(cover.code == kExitOk);
  const json c = json::parse(cover.out);
  CHECK(c["edges"].size() == 12);

  const Run svg = run({"render", "--view", "0,0,1", "--size", "300"}, run({"gen", "spindle", "-n", "6"}).out);
  CHECK(svg.code == kExitOk);
  CHECK(svg.out.rfind("<svg", 0) == 0);

  const Run search = run({"search", "-n", "4", "--iterations", "2000", "--restarts", "2", "--seed", "3"});
  CHECK(search.code == kExitOk);
  json meta;
  const PointSet best = parse_pointset(search.out, {}, &meta);
  CHECK(best.size() == 4);
  CHECK(meta["search"]["count"].get<std::size_t>() <= 6);

  // Geometric checks are refused in two dimensions.
  const Run flat = run({"verify", "--crossings"}, run({"gen", "random", "--dim", "2", "-n", "6"}).out);
  CHECK(flat.code == kExitUsage);
}

TEST_CASE("tolerance precedence") {
  const std::string tet = run({"gen", "tetrahedron"}).out;
  setenv("DIAMGRAPH_EPS", "eps_diam=1e-6", 1);
  const json env = json::parse(run({"graph"}, tet).out);
  CHECK(env["reports"][0]["tolerances"]["eps_diam"] == 1e-6);
  const json flag = json::parse(run({"--eps-diam", "1e-7", "graph"}, tet).out);
  CHECK(flag["reports"][0]["tolerances"]["eps_diam"] == 1e-7);
  setenv("DIAMGRAPH_EPS", "garbage", 1);
  CHECK(run({"graph"}, tet).code == kExitUsage);
  unsetenv("DIAMGRAPH_EPS");
  const json def = json::parse(run({"graph"}, tet).out);
  CHECK(def["reports"][0]["tolerances"]["eps_diam"] == 1e-9);
}

}  // TEST_SUITE
