#include "diamgraph/report.hpp"

#include <sstream>

namespace diamgraph {

void VerificationReport::fail(Witness w) {
  pass = false;
  ++counts["violations"];
  if (witnesses.size() < kMaxWitnesses) witnesses.push_back(std::move(w));
}

VerificationReport make_report(std::string check, std::string claim, const Tolerance& tol) {
  VerificationReport r;
  r.check = std::move(check);
  r.claim = std::move(claim);
  r.tolerance = tol;
  return r;
}

std::string summary_line(const VerificationReport& r) {
  std::ostringstream os;
  os << (r.pass ? "PASS " : "FAIL ") << r.check;
  for (const auto& [k, v] : r.counts) os << ' ' << k << '=' << v;
  if (r.truncated) os << " (truncated)";
  if (!r.pass && !r.witnesses.empty()) os << " first witness: " << r.witnesses.front().message;
  return os.str();
}

}  // namespace diamgraph
