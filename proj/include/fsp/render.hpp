#pragma once

#include <string>

#include "fsp/ds_diagram.hpp"

namespace fsp {

enum class RenderFormat { dot, svg };

// Deterministic drawing. E-vertices sit on the unit circle in E order; inside
// and outside vertices are placed by barycentric averaging with a pull toward
// the centre, outside ones reflected across the circle. Edges carry their
// spine-edge label.
std::string render(const DsDiagram& d, RenderFormat format);

}  // namespace fsp
