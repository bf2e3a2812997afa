#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "diamgraph/tolerance.hpp"
#include "diamgraph/vector.hpp"

namespace diamgraph {

/// One violated invariant, with whatever indices and points locate it.
struct Witness {
  std::string kind;
  std::string message;
  std::vector<std::size_t> vertices;
  std::vector<Vector> points;
};

/// Outcome of one check. `claim` states, in words, the mathematical
/// statement the check exercises.
struct VerificationReport {
  static constexpr std::size_t kMaxWitnesses = 32;

  std::string check;
  std::string claim;
  bool pass = true;
  std::map<std::string, std::int64_t> counts;
  std::map<std::string, double> metrics;
  std::vector<Witness> witnesses;
  Tolerance tolerance;
  bool truncated = false;
  std::vector<std::string> notes;

  /// Marks the report failed. Witnesses past kMaxWitnesses are counted in
  /// counts["violations"] but not stored.
  void fail(Witness w);
};

VerificationReport make_report(std::string check, std::string claim, const Tolerance& tol);

/// Single line "PASS check (k=v ...)" style summary for logs.
std::string summary_line(const VerificationReport& r);

}  // namespace diamgraph
