#pragma once

#include <cstddef>
#include <vector>

#include "diamgraph/diameter_graph.hpp"
#include "diamgraph/double_cover.hpp"
#include "diamgraph/report.hpp"

namespace diamgraph {

using Cycle = std::vector<std::size_t>;

struct CycleEnumeration {
  std::vector<Cycle> cycles;
  bool truncated = false;
};

struct CycleCaps {
  std::size_t max_count = 100000;
  std::size_t max_len = 0;  // 0 means the vertex count
};

/// Simple cycles, each listed once in canonical form: starts at its
/// smallest vertex and the second vertex is smaller than the last.
CycleEnumeration enumerate_cycles(const DiameterGraph& g, const CycleCaps& caps = {});

enum class CycleClass { Contractible, Noncontractible };

const char* to_string(CycleClass c);

struct CycleClassification {
  CycleClass cls = CycleClass::Contractible;
  bool lift_closes = false;
  std::size_t end_hub = 0;
};

/// Walks the lift of `cycle` in the drawn cover starting at the red hub of
/// its first vertex. A closed lift means the cycle is contractible in the
/// projective plane; this must agree with the parity rule (odd cycles are
/// noncontractible) or std::logic_error is thrown. Throws NotACycle.
CycleClassification classify_cycle(const DiameterGraph& g, const SphericalDrawing& dr, const Cycle& cycle);

/// Every two enumerated odd cycles share a vertex.
VerificationReport verify_odd_cycles_intersect(const DiameterGraph& g, const CycleCaps& caps = {},
                                               const Tolerance& tol = {});

/// classify_cycle over every enumerated cycle of the core.
VerificationReport verify_cycle_parity(const DiameterGraph& core, const SphericalDrawing& dr,
                                       const CycleCaps& caps = {}, const Tolerance& tol = {});

}  // namespace diamgraph
