#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "diamgraph/diameter_graph.hpp"
#include "diamgraph/double_cover.hpp"
#include "diamgraph/extremal.hpp"
#include "diamgraph/point_set.hpp"
#include "diamgraph/report.hpp"

namespace diamgraph {

/// Point-set file:
///   {"dimension": d, "points": [[...], ...], "labels": [...], "metadata": {...}}
/// labels and metadata are optional. Throws SchemaError for malformed JSON or
/// wrong shapes, InvariantError for dimension mismatches and duplicates.
PointSet parse_pointset(std::string_view text, const Tolerance& tol = {},
                        nlohmann::json* metadata = nullptr);

/// Coordinates are written with 17 significant digits so the file parses
/// back to bit-identical doubles.
std::string serialize_pointset(const PointSet& ps, const nlohmann::json& metadata = nullptr);

/// Formats a double with 17 significant digits.
std::string format_real(double x);

nlohmann::json to_json(const Vector& v);
nlohmann::json to_json(const Tolerance& tol);
nlohmann::json to_json(const VerificationReport& r);
nlohmann::json to_json(const DiameterGraph& g);
nlohmann::json to_json(const SphericalDrawing& dr);
nlohmann::json to_json(const TraceRecord& t);

/// {"pass": all passed, "reports": [...]}
nlohmann::json reports_document(const std::vector<VerificationReport>& reports);

}  // namespace diamgraph
