#ifndef PLANECYCLES_SVG_HPP
#define PLANECYCLES_SVG_HPP

#include <optional>
#include <string>

#include "planecycles/model.hpp"

namespace planecycles {

struct SvgOptions {
    int width = 720;
    bool draw_hull = true;
};

// Points as color-filled circles, the cycle as a closed polyline, the convex
// hull dashed.
std::string render_svg(const ColoredPointSet& ps, const std::optional<PlaneCycle>& cycle,
                       const SvgOptions& options = {});

} // namespace planecycles

#endif
