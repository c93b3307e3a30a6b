#pragma once

#include <array>
#include <vector>

#include "colorgraph/colorgraph.hpp"

namespace colorgraph {

// 2^r compatible triangulations differing by independent flips inside r
// four-colored quadrilaterals; they induce an r-cube in the color graph.
struct RainbowCube {
    int r = 0;
    std::vector<Triangulation> triangulations;  // indexed by flip mask
    std::vector<int> vertex_indices;            // positions in the color graph
};

// Quadrilaterals are given as 4-sets of polygon vertices, each using four
// distinct colors, occupying pairwise disjoint, non-interleaved cyclic
// intervals. Throws InputError when the preconditions fail and
// VerificationError when the rest of the polygon admits no compatible
// triangulation around the given quadrilaterals.
RainbowCube rainbow_quad_cube(const PolygonColoring& c,
                              const std::vector<std::array<int, 4>>& quads,
                              int cap = kDefaultPolygonCap);

}  // namespace colorgraph
