#pragma once

#include "quadareas/core_types.hpp"
#include "quadareas/witness.hpp"

#include <string>

namespace quadareas {

/// SVG drawing of a witness: the quadrilateral, one <polygon class="strip">
/// per strip carrying its exact area in data-area, the division lines and
/// area labels. The viewBox is the bounding box plus a 5% margin; y points
/// up in model space and is flipped for display.
std::string render_svg(const WitnessOutput& w, const DivisionSpec& spec);

}  // namespace quadareas
