#pragma once

#include <ostream>
#include <vector>

#include "bead/core_model.hpp"

namespace bead {

// particles as dots over their line abscissa, limit-shape boundary overlaid
void write_svg(std::ostream& os, const HexagonSpec& spec, const std::vector<BeadConfiguration>& configs,
               int curve_points = 256);

}  // namespace bead
