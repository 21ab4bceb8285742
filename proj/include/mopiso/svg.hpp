#pragma once

#include <string>
#include <vector>

#include "mopiso/mop.hpp"
#include "mopiso/polygon.hpp"

namespace mopiso {

// SVG 1.1 document: polygon outline, triangulation chords, highlighted
// vertices. Pass nullptr to skip the chords.
std::string render_svg(const SimplePolygon& poly, const Mop* triangulation,
                       const std::vector<int>& highlight);

// Same picture for a bare mop, drawn on a regular polygon layout.
std::string render_svg(const Mop& g, const std::vector<int>& highlight);

}  // namespace mopiso
