#include "diamgraph/cycles.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

#include "diamgraph/errors.hpp"

namespace diamgraph {

const char* to_string(CycleClass c) {
  return c == CycleClass::Contractible ? "contractible" : "noncontractible";
}

CycleEnumeration enumerate_cycles(const DiameterGraph& g, const CycleCaps& caps) {
  CycleEnumeration out;
  const std::size_t n = g.vertex_count();
  const std::size_t max_len = caps.max_len == 0 ? n : caps.max_len;
  std::vector<bool> on_path(n, false);
  Cycle path;
  bool stop = false;

  // Cycles through s using only vertices larger than s.
  std::function<void(std::size_t, std::size_t)> extend = [&](std::size_t s, std::size_t v) {
    for (std::size_t w : g.neighbors(v)) {
      if (stop) return;
      if (w == s) {
        if (path.size() >= 3 && path[1] < path.back()) {
          if (out.cycles.size() >= caps.max_count) {
            out.truncated = true;
            stop = true;
            return;
          }
          out.cycles.push_back(path);
        }
        continue;
      }
      if (w < s || on_path[w]) continue;
      if (path.size() >= max_len) {
        out.truncated = true;
        continue;
      }
      on_path[w] = true;
      path.push_back(w);
      extend(s, w);
      path.pop_back();
      on_path[w] = false;
    }
  };

  for (std::size_t s = 0; s < n && !stop; ++s) {
    path = {s};
    on_path[s] = true;
    extend(s, s);
    on_path[s] = false;
  }
  return out;
}

namespace {

void require_cycle(const DiameterGraph& g, const Cycle& cycle) {
  if (cycle.size() < 3) throw NotACycle("a cycle needs at least three vertices");
  std::vector<bool> seen(g.vertex_count(), false);
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const std::size_t v = cycle[i];
    if (v >= g.vertex_count()) throw NotACycle("cycle vertex out of range");
    if (seen[v]) throw NotACycle("cycle repeats vertex " + std::to_string(v));
    seen[v] = true;
    if (!g.has_edge(v, cycle[(i + 1) % cycle.size()])) {
      throw NotACycle("consecutive cycle vertices are not adjacent");
    }
  }
}

}  // namespace

CycleClassification classify_cycle(const DiameterGraph& g, const SphericalDrawing& dr, const Cycle& cycle) {
  require_cycle(g, cycle);
  const std::size_t start = red_hub(cycle.front());
  std::size_t hub = start;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const std::size_t target = cycle[(i + 1) % cycle.size()];
    std::optional<std::size_t> next;
    for (std::size_t k : dr.rotation.at(hub)) {
      const DrawnEdge& e = dr.edges[k];
      const std::size_t other = e.from_hub == hub ? e.to_hub : e.from_hub;
      if (dr.vertices[other].owner == target) {
        next = other;
        break;
      }
    }
    if (!next) throw InconsistentRotation("drawing has no lift of a cycle edge");
    hub = *next;
  }
  CycleClassification out;
  out.end_hub = hub;
  out.lift_closes = hub == start;
  const bool odd = cycle.size() % 2 == 1;
  out.cls = odd ? CycleClass::Noncontractible : CycleClass::Contractible;
  if (out.lift_closes == odd) {
    throw std::logic_error("lift walk disagrees with the cycle parity rule");
  }
  return out;
}

namespace {

using Bits = std::vector<std::uint64_t>;

Bits to_bits(const Cycle& c, std::size_t n) {
  Bits b((n + 63) / 64, 0);
  for (std::size_t v : c) b[v / 64] |= std::uint64_t{1} << (v % 64);
  return b;
}

bool intersects(const Bits& a, const Bits& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] & b[i]) return true;
  }
  return false;
}

}  // namespace

VerificationReport verify_odd_cycles_intersect(const DiameterGraph& g, const CycleCaps& caps,
                                               const Tolerance& tol) {
  auto r = make_report("odd_cycles", "any two odd cycles of a diameter graph in R^3 share a vertex", tol);
  const CycleEnumeration en = enumerate_cycles(g, caps);
  std::vector<const Cycle*> odd;
  std::vector<Bits> bits;
  for (const Cycle& c : en.cycles) {
    if (c.size() % 2 == 1) {
      odd.push_back(&c);
      bits.push_back(to_bits(c, g.vertex_count()));
    }
  }
  std::int64_t pairs = 0;
  for (std::size_t i = 0; i < odd.size(); ++i) {
    for (std::size_t j = i + 1; j < odd.size(); ++j) {
      ++pairs;
      if (!intersects(bits[i], bits[j])) {
        Witness w{"disjoint_odd_cycles", "two odd cycles are vertex disjoint", *odd[i], {}};
        w.vertices.insert(w.vertices.end(), odd[j]->begin(), odd[j]->end());
        r.fail(std::move(w));
      }
    }
  }
  r.truncated = en.truncated;
  r.counts["n"] = static_cast<std::int64_t>(g.vertex_count());
  r.counts["cycles"] = static_cast<std::int64_t>(en.cycles.size());
  r.counts["odd_cycles"] = static_cast<std::int64_t>(odd.size());
  r.counts["pairs"] = pairs;
  if (en.truncated) r.notes.push_back("cycle enumeration hit its caps");
  return r;
}

VerificationReport verify_cycle_parity(const DiameterGraph& core, const SphericalDrawing& dr,
                                       const CycleCaps& caps, const Tolerance& tol) {
  auto r = make_report("cycle_parity",
                       "in the projective plane embedding exactly the odd cycles are noncontractible", tol);
  const CycleEnumeration en = enumerate_cycles(core, caps);
  std::int64_t noncontractible = 0;
  for (const Cycle& c : en.cycles) {
    try {
      if (classify_cycle(core, dr, c).cls == CycleClass::Noncontractible) ++noncontractible;
    } catch (const std::exception& ex) {
      r.fail({"parity", ex.what(), c, {}});
    }
  }
  r.truncated = en.truncated;
  r.counts["cycles"] = static_cast<std::int64_t>(en.cycles.size());
  r.counts["noncontractible"] = noncontractible;
  return r;
}

}  // namespace diamgraph
