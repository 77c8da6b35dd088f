#pragma once

#include <string>

#include "puiseux/expand.hpp"
#include "puiseux/support.hpp"

namespace puiseux {

struct SvgOptions {
    int size = 480;            // canvas edge in pixels
    Rational ray_length = 3;   // cone rays extended this far beyond the anchor
};

/// Renders a 2-D support hull: vertices as dots, per-vertex cones as shaded
/// wedges, bounded segment faces as lines. Deterministic byte-for-byte.
std::string render_svg(const SupportHull& hull,
                       const std::vector<std::vector<ExpVec>>& faces,
                       const SvgOptions& opts = {});

/// Renders a cone bound: exceptional exponents as dots, the anchored cone
/// as a shaded wedge.
std::string render_svg(const ConeBound& bound, const SvgOptions& opts = {});

}  // namespace puiseux
