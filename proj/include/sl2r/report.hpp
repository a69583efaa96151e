#pragma once

#include <string>

#include "sl2r/tiling.hpp"

namespace sl2r {

// JSON report of a solved prism: parameters, vertex coordinates, side-1
// anchors, cover plane, generator matrices, and residual diagnostics.
std::string tiling_report_json(const PrismSpec& spec);

// Recomputes the report's residual diagnostics from the values stored in it
// and returns the largest deviation from the stored diagnostics.
double report_self_check(const std::string& report_json);

}  // namespace sl2r
