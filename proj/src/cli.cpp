#include "diamgraph/cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "diamgraph/cycles.hpp"
#include "diamgraph/diameter_graph.hpp"
#include "diamgraph/double_cover.hpp"
#include "diamgraph/errors.hpp"
#include "diamgraph/extremal.hpp"
#include "diamgraph/io.hpp"
#include "diamgraph/lemma3.hpp"
#include "diamgraph/regions.hpp"
#include "diamgraph/svg.hpp"

namespace diamgraph {

namespace {

using nlohmann::json;

struct Streams {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

std::string read_input(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-") {
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) throw SchemaError("cannot open input file '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
}

void write_output(const std::string& path, const std::string& body, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << body;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw SchemaError("cannot open output file '" + path + "'");
  f << body;
}

// Graph, core, regions and drawing for a point set in R^3.
struct Pipeline {
  DiameterGraph graph;
  PruneResult pruned;
  std::vector<SphericalRegion> regions;
  SphericalDrawing drawing;

  Pipeline(const PointSet& ps, const Tolerance& tol) : graph(build_diameter_graph(ps, tol)) {
    pruned = prune_low_degree(graph);
    if (graph.dimension() == 3) {
      regions = build_regions(pruned.core, tol);
      drawing = build_double_cover(pruned.core, regions, tol);
    }
  }
};

VerificationReport pipeline_failure(const std::string& stage, const std::exception& e, const Tolerance& tol) {
  auto r = make_report("pipeline", "the construction runs on genuine diameter data", tol);
  r.fail({"construction_failed", stage + ": " + e.what(), {}, {}});
  return r;
}

struct Common {
  std::string input = "-";
  std::string output = "-";
};

struct TolFlags {
  std::optional<double> eps_unit, eps_diam, eps_geo;

  Tolerance resolve() const {
    Tolerance t = tolerance_from_environment();
    if (eps_unit) t.eps_unit = *eps_unit;
    if (eps_diam) t.eps_diam = *eps_diam;
    if (eps_geo) t.eps_geo = *eps_geo;
    t.validate();
    return t;
  }
};

int finish(const json& doc, bool pass, const std::string& output, std::ostream& out) {
  write_output(output, doc.dump(2) + "\n", out);
  return pass ? kExitOk : kExitCheckFailed;
}

int run_gen(const std::string& kind, std::size_t n, std::uint64_t seed, const std::string& model,
            std::size_t dim, const std::string& output, const Tolerance& tol, Streams io) {
  PointSet ps;
  json meta = {{"generator", kind}};
  if (kind == "tetrahedron") {
    ps = gen_tetrahedron();
  } else if (kind == "spindle") {
    ps = gen_spindle(n);
    meta["n"] = n;
  } else {
    const SampleModel m = model == "sphere" ? SampleModel::Sphere : SampleModel::Ball;
    ps = gen_random(n, dim, m, seed, tol);
    meta["n"] = n;
    meta["seed"] = seed;
    meta["model"] = model;
  }
  write_output(output, serialize_pointset(ps, meta), io.out);
  return kExitOk;
}

int run_graph(const Common& c, const Tolerance& tol, Streams io) {
  const PointSet ps = parse_pointset(read_input(c.input, io.in), tol);
  const DiameterGraph g = build_diameter_graph(ps, tol);
  const PruneResult pr = prune_low_degree(g);
  std::vector<VerificationReport> reports;
  std::vector<std::string> notes;
  if (g.dimension() == 3 && g.vertex_count() >= 4) {
    reports.push_back(verify_bound(g, tol));
    reports.push_back(verify_bound_via_core(g, pr, tol));
  } else {
    notes.push_back("the 2n-2 bound applies to n >= 4 points in R^3; not checked");
  }
  json doc = reports_document(reports);
  doc["graph"] = to_json(g);
  doc["core"] = {{"n", pr.core.vertex_count()},
                 {"edge_count", pr.core.edge_count()},
                 {"core_to_original", pr.core_to_original},
                 {"removed", pr.record.removals.size()}};
  if (!notes.empty()) doc["notes"] = notes;
  return finish(doc, doc["pass"].get<bool>(), c.output, io.out);
}

int run_cover(const Common& c, const Tolerance& tol, Streams io) {
  const PointSet ps = parse_pointset(read_input(c.input, io.in), tol);
  if (ps.dimension() != 3) throw DimensionUnsupported("the cover drawing needs points in R^3");
  std::optional<Pipeline> p;
  try {
    p.emplace(ps, tol);
  } catch (const Error& e) {
    if (dynamic_cast<const TooFewPoints*>(&e) || dynamic_cast<const DuplicatePoints*>(&e)) throw;
    return finish(reports_document({pipeline_failure("cover", e, tol)}), false, c.output, io.out);
  }
  json doc = to_json(p->drawing);
  doc["core_to_original"] = p->pruned.core_to_original;
  return finish(doc, true, c.output, io.out);
}

struct VerifyFlags {
  bool lemma1 = false, lemma2 = false, lemma3 = false, crossings = false, euler = false, odd_cycles = false,
       bound = false, all = false;
  std::size_t trials = 1000;
  std::vector<std::size_t> dims{2, 3, 4, 5, 8};
  std::uint64_t seed = 1;
};

int run_verify(const Common& c, VerifyFlags f, const Tolerance& tol, Streams io) {
  const bool any = f.lemma1 || f.lemma2 || f.lemma3 || f.crossings || f.euler || f.odd_cycles || f.bound;
  if (f.all || !any) {
    f.lemma1 = f.lemma2 = f.lemma3 = f.crossings = f.euler = f.odd_cycles = f.bound = true;
  }
  std::vector<VerificationReport> reports;
  const bool needs_points = f.lemma1 || f.lemma2 || f.crossings || f.euler || f.odd_cycles || f.bound;
  if (needs_points) {
    const PointSet ps = parse_pointset(read_input(c.input, io.in), tol);
    if (ps.dimension() != 3) throw DimensionUnsupported("geometric checks need points in R^3");
    std::optional<Pipeline> p;
    try {
      p.emplace(ps, tol);
    } catch (const Error& e) {
      if (dynamic_cast<const TooFewPoints*>(&e) || dynamic_cast<const DuplicatePoints*>(&e)) throw;
      reports.push_back(pipeline_failure("construction", e, tol));
    }
    if (p) {
      if (f.bound) {
        if (p->graph.vertex_count() >= 4) reports.push_back(verify_bound(p->graph, tol));
        reports.push_back(verify_bound_via_core(p->graph, p->pruned, tol));
      }
      if (f.lemma1 || f.lemma2) reports.push_back(check_region_membership(p->pruned.core, p->regions, tol));
      if (f.lemma1) reports.push_back(check_lemma1(p->pruned.core, p->regions, tol));
      if (f.lemma2) reports.push_back(check_lemma2(p->pruned.core, p->regions, tol));
      if (f.crossings) {
        reports.push_back(verify_drawing_structure(p->pruned.core, p->drawing, tol));
        reports.push_back(verify_no_crossings(p->drawing, tol));
      }
      if (f.euler) {
        try {
          reports.push_back(euler_report(p->drawing, tol));
        } catch (const Error& e) {
          reports.push_back(pipeline_failure("euler", e, tol));
        }
      }
      if (f.odd_cycles) {
        reports.push_back(verify_odd_cycles_intersect(p->graph, {}, tol));
        reports.push_back(verify_cycle_parity(p->pruned.core, p->drawing, {}, tol));
      }
    }
  }
  if (f.lemma3) reports.push_back(lemma3_suite(f.dims, f.trials, f.seed, tol));
  const json doc = reports_document(reports);
  return finish(doc, doc["pass"].get<bool>(), c.output, io.out);
}

struct SearchFlags {
  SearchConfig cfg;
  std::string init;
  std::string trace;
};

int run_search(const Common& c, SearchFlags f, const Tolerance& tol, Streams io) {
  if (!f.init.empty()) f.cfg.initial = parse_pointset(read_input(f.init, io.in), tol);
  try {
    f.cfg.validate();
  } catch (const std::invalid_argument& e) {
    throw InvariantError(e.what());
  }
  SearchResult res;
  try {
    res = search_max_diameters(f.cfg, tol);
  } catch (const SearchBoundViolation& e) {
    auto r = make_report("search", "annealed configurations never exceed 2n-2 diameters", tol);
    r.fail({"bound_exceeded", e.what(), {}, {}});
    return finish(reports_document({r}), false, c.output, io.out);
  }
  if (!f.trace.empty()) {
    std::ostringstream lines;
    for (const auto& rr : res.restarts) {
      for (const auto& t : rr.trace) lines << to_json(t).dump() << '\n';
    }
    write_output(f.trace, lines.str(), io.out);
  }
  std::size_t hits = 0;
  json per = json::array();
  for (const auto& rr : res.restarts) {
    per.push_back(rr.count);
    if (rr.count == 2 * f.cfg.n - 2) ++hits;
  }
  const json meta = {{"search",
                      {{"count", res.count},
                       {"bound", 2 * f.cfg.n - 2},
                       {"restart_counts", per},
                       {"restarts_at_bound", hits},
                       {"seed", f.cfg.seed},
                       {"iterations", f.cfg.iterations}}}};
  write_output(c.output, serialize_pointset(res.best, meta), io.out);
  return kExitOk;
}

int run_render(const Common& c, const std::vector<double>& view, int size, const Tolerance& tol, Streams io) {
  const PointSet ps = parse_pointset(read_input(c.input, io.in), tol);
  if (ps.dimension() != 3) throw DimensionUnsupported("rendering needs points in R^3");
  if (view.size() != 3) throw InvariantError("--view needs three components");
  if (size < 16) throw InvariantError("--size must be at least 16");
  const Pipeline p(ps, tol);
  write_output(c.output, render_svg(p.drawing, Vector{view[0], view[1], view[2]}, size), io.out);
  return kExitOk;
}

}  // namespace

int cli_dispatch(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Diameter graphs, their antipodal double-cover drawings on S^2, and checks of the 2n-2 bound"};
  app.require_subcommand(1);
  TolFlags tf;
  app.add_option("--eps-unit", tf.eps_unit, "unit-norm slack")->group("Tolerance");
  app.add_option("--eps-diam", tf.eps_diam, "relative slack for diameter ties")->group("Tolerance");
  app.add_option("--eps-geo", tf.eps_geo, "angular slack in radians")->group("Tolerance");

  Common common;
  auto add_io = [&](CLI::App* sub, bool with_input) {
    if (with_input) sub->add_option("input", common.input, "point-set JSON file, '-' for stdin");
    sub->add_option("-o,--output", common.output, "output file, '-' for stdout");
  };

  std::string gen_kind;
  std::size_t gen_n = 10, gen_dim = 3;
  std::uint64_t gen_seed = 1;
  std::string gen_model = "ball";
  auto* gen = app.add_subcommand("gen", "generate a point set");
  gen->add_option("kind", gen_kind)->required()->check(CLI::IsMember({"tetrahedron", "spindle", "random"}));
  gen->add_option("-n", gen_n, "number of points");
  gen->add_option("--seed", gen_seed);
  gen->add_option("--model", gen_model)->check(CLI::IsMember({"ball", "sphere"}));
  gen->add_option("--dim", gen_dim, "dimension for random sets");
  add_io(gen, false);

  auto* graph = app.add_subcommand("graph", "diameter graph and 2n-2 bound report");
  add_io(graph, true);
  auto* cover = app.add_subcommand("cover", "build and serialize the double-cover drawing");
  add_io(cover, true);

  VerifyFlags vf;
  auto* verify = app.add_subcommand("verify", "run verification checks");
  add_io(verify, true);
  verify->add_flag("--bound", vf.bound, "edge count <= 2n-2");
  verify->add_flag("--lemma1", vf.lemma1, "red regions are pairwise disjoint");
  verify->add_flag("--lemma2", vf.lemma2, "red/blue regions meet only at diameter directions");
  verify->add_flag("--lemma3", vf.lemma3, "ball inequality on random instances");
  verify->add_flag("--crossings", vf.crossings, "drawing is crossing free and symmetric");
  verify->add_flag("--euler", vf.euler, "Euler formula by face tracing");
  verify->add_flag("--odd-cycles", vf.odd_cycles, "odd cycles pairwise intersect; lift parity");
  verify->add_flag("--all", vf.all, "every check");
  verify->add_option("--trials", vf.trials, "lemma3 instances per dimension");
  verify->add_option("--dim", vf.dims, "lemma3 dimensions")->expected(1, 16);
  verify->add_option("--seed", vf.seed, "lemma3 seed");

  SearchFlags sf;
  auto* search = app.add_subcommand("search", "simulated annealing for many diameters");
  add_io(search, false);
  search->add_option("-n", sf.cfg.n);
  search->add_option("--iterations", sf.cfg.iterations);
  search->add_option("--restarts", sf.cfg.restarts);
  search->add_option("--seed", sf.cfg.seed);
  search->add_option("--step", sf.cfg.step_scale);
  search->add_option("--t0", sf.cfg.temperature_start);
  search->add_option("--decay", sf.cfg.temperature_decay, "cooling factor per iteration; 0 ends at t0/100");
  search->add_option("--softness", sf.cfg.softness);
  search->add_option("--checkpoint", sf.cfg.checkpoint_every);
  search->add_option("--init", sf.init, "starting configuration (point-set JSON)");
  search->add_option("--trace", sf.trace, "write line-delimited JSON trace here");

  std::vector<double> view{0.3, 0.4, std::sqrt(0.75)};
  int size = 512;
  auto* render = app.add_subcommand("render", "SVG of the double-cover drawing");
  add_io(render, true);
  render->add_option("--view", view, "view direction x,y,z")->delimiter(',')->expected(3);
  render->add_option("--size", size, "image size in pixels");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const Streams io{in, out, err};
  try {
    const Tolerance tol = tf.resolve();
    if (gen->parsed()) return run_gen(gen_kind, gen_n, gen_seed, gen_model, gen_dim, common.output, tol, io);
    if (graph->parsed()) return run_graph(common, tol, io);
    if (cover->parsed()) return run_cover(common, tol, io);
    if (verify->parsed()) return run_verify(common, vf, tol, io);
    if (search->parsed()) return run_search(common, sf, tol, io);
    if (render->parsed()) return run_render(common, view, size, tol, io);
  } catch (const SchemaError& e) {
    err << "input error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvariantError& e) {
    err << "invalid input: " << e.what() << '\n';
    return kExitUsage;
  } catch (const TooFewPoints& e) {
    err << "invalid input: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DuplicatePoints& e) {
    err << "invalid input: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DimensionUnsupported& e) {
    err << "unsupported: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvalidTolerance& e) {
    err << "tolerance: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "usage: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "check failed: " << e.what() << '\n';
    return kExitCheckFailed;
  }
  return kExitUsage;
}

int cli_dispatch(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"diamgraph"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  return cli_dispatch(static_cast<int>(argv.size()), argv.data(), in, out, err);
}

}  // namespace diamgraph
