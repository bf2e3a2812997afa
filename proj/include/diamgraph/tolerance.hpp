#pragma once

#include <optional>
#include <string>

namespace diamgraph {

/// The single tolerance policy. Every approximate comparison in the library
/// goes through one of these three knobs.
///  - eps_unit: slack on |v| == 1 checks.
///  - eps_diam: relative slack on "distance equals the diameter".
///  - eps_geo:  angular slack (radians) for incidence and coincidence tests.
struct Tolerance {
  double eps_unit = 1e-9;
  double eps_diam = 1e-9;
  double eps_geo = 1e-9;

  /// Throws InvalidTolerance unless every knob is in (0, 1e-3].
  void validate() const;

  friend bool operator==(const Tolerance&, const Tolerance&) = default;
};

/// Parses an override string: either one number applied to all three knobs,
/// or a comma separated list of key=value pairs with keys eps_unit, eps_diam,
/// eps_geo. Unmentioned knobs keep their values from `base`.
Tolerance parse_tolerance_override(const std::string& text, Tolerance base = {});

/// Defaults overridden by the DIAMGRAPH_EPS environment variable, if set.
Tolerance tolerance_from_environment();

}  // namespace diamgraph
