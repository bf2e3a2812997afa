#include "diamgraph/tolerance.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

#include "diamgraph/errors.hpp"

namespace diamgraph {

namespace {

double parse_positive(const std::string& text) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw InvalidTolerance("tolerance value is not a number: '" + text + "'");
  }
  if (used != text.size()) {
    throw InvalidTolerance("trailing characters in tolerance value: '" + text + "'");
  }
  return v;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

}  // namespace

void Tolerance::validate() const {
  auto check = [](double v, const char* name) {
    if (!(std::isfinite(v) && v > 0.0 && v <= 1e-3)) {
      std::ostringstream os;
      os << name << " must lie in (0, 1e-3], got " << v;
      throw InvalidTolerance(os.str());
    }
  };
  check(eps_unit, "eps_unit");
  check(eps_diam, "eps_diam");
  check(eps_geo, "eps_geo");
}

Tolerance parse_tolerance_override(const std::string& text, Tolerance base) {
  const std::string body = trim(text);
  if (body.empty()) return base;
  if (body.find('=') == std::string::npos) {
    const double v = parse_positive(body);
    base.eps_unit = base.eps_diam = base.eps_geo = v;
    base.validate();
    return base;
  }
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw InvalidTolerance("expected key=value in '" + item + "'");
    const std::string key = trim(item.substr(0, eq));
    const double v = parse_positive(trim(item.substr(eq + 1)));
    if (key == "eps_unit") {
      base.eps_unit = v;
    } else if (key == "eps_diam") {
      base.eps_diam = v;
    } else if (key == "eps_geo") {
      base.eps_geo = v;
    } else {
      throw InvalidTolerance("unknown tolerance key '" + key + "'");
    }
  }
  base.validate();
  return base;
}

Tolerance tolerance_from_environment() {
  const char* env = std::getenv("DIAMGRAPH_EPS");
  if (env == nullptr) return {};
  return parse_tolerance_override(env);
}

}  // namespace diamgraph
