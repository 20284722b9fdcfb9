// SVG figures of polylines. Presentation only; coordinates are rounded.
#pragma once

#include <string>

#include "polycross/polyline.hpp"

namespace polycross {

struct RenderSpec {
    int width = 640, height = 640;  // pixels
    double margin = 0.05;           // fraction of the canvas on each side
    double stroke_width = 1.25;
    double vertex_radius = 2.5;
    bool labels = false;            // per-edge crossing counts at edge midpoints
};

// Throws std::invalid_argument on non-positive dimensions or a margin outside [0, 0.5).
std::string render_svg(const Polyline& L, const RenderSpec& spec = {});

}  // namespace polycross
