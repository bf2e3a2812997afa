#pragma once

#include <string>

#include "diamgraph/double_cover.hpp"

namespace diamgraph {

/// Orthographic view of a drawing, looking at the sphere from direction
/// `view`. Each drawn edge is a <g class="edge"> whose geodesic pieces are
/// sampled at 64 segments per piece and split into "front" and "back"
/// paths; the back hemisphere is dashed. Hubs are <circle class="vertex
/// red|blue front|back">. Output depends only on the inputs.
std::string render_svg(const SphericalDrawing& dr, const Vector& view, int size_px = 512);

}  // namespace diamgraph
