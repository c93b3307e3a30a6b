#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "colorgraph/colorgraph.hpp"

namespace colorgraph {

// Diagonals joining differently colored vertices, neither of which carries
// the forbidden color; these index the hypercube coordinates.
std::vector<Diagonal> allowed_diagonals(const PolygonColoring& c, Klein forbidden);

// Number of allowed diagonals from the color multiplicities alone:
// n(n-3)/2 - C(w,2) - C(x,2) - C(y,2) - C(z,2) - w(n-2-w), where w counts the
// forbidden color. Throws InputError unless w+x+y+z = n with all >= 0.
long long count_formula(int n, int w, int x, int y, int z);

// Same count as (x-1)(y-1) + (y-1)(z-1) + (z-1)(x-1) + n - 3; only defined
// for x, y, z >= 1.
long long count_formula_simplified(int n, int w, int x, int y, int z);

// A color of maximum multiplicity (ties: numerically smallest); its
// multiplicity is at least ceil(n/4).
Klein best_forbidden_color(const PolygonColoring& c);

// Multiplicity of each color in the coloring.
std::array<int, 4> color_multiplicities(const PolygonColoring& c);

// Floor of n(3n-8)/16: upper bound for the embedding dimension.
int dimension_bound(int n);

// Map of a color graph into the hypercube over its allowed diagonals: each
// triangulation goes to the subset of allowed diagonals it contains, encoded
// as a bitset over the order of `allowed`.
struct HypercubeEmbedding {
    Klein forbidden = 0;
    std::vector<Diagonal> allowed;
    std::vector<std::uint64_t> assignment;  // one bitset per color-graph vertex

    int dimension() const { return static_cast<int>(allowed.size()); }
};

// Builds the embedding and verifies injectivity, flip-edge = Hamming-1
// adjacency, and vertex-inducedness; throws VerificationError if any check
// fails (unreachable if the construction is sound).
HypercubeEmbedding hypercube_embed(const ColorGraph& g, Klein forbidden);

}  // namespace colorgraph
