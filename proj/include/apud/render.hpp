#pragma once

#include "apud/geometry.hpp"
#include "apud/reduction.hpp"

#include <string>
#include <vector>

namespace apud {

struct RenderOptions
{
    double pixels_per_unit = 40;
    /// Optional per-vertex roles; circles are coloured by role kind.
    const std::vector<Role> * roles = nullptr;
    bool labels = false;
};

/// SVG drawing of the lines and one unit circle per placed vertex. Output
/// depends only on the inputs (fixed number formatting, vertex order).
auto render_svg(const LineConfig & lines, const Placement & placement, const RenderOptions & options = {}) -> std::string;

}
