#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "colorgraph/graph.hpp"

namespace colorgraph {

// Four-cycle a,b,c,d plus a vertex equidistant from both opposite pairs; no
// vertex of a hypercube can satisfy both equalities against a 2-face, so
// this certifies that the graph metric does not embed isometrically.
struct FourCycleWitness {
    std::array<int, 4> cycle{};  // a,b,c,d in cycle order
    int vertex = -1;
    int dist_ac = 0;  // d(vertex,a) = d(vertex,c)
    int dist_bd = 0;  // d(vertex,b) = d(vertex,d)
};

struct PartialCubeReport {
    bool is_partial_cube = false;
    int isometric_dimension = 0;             // set when positive
    std::optional<FourCycleWitness> witness;  // set when negative and one exists
    std::string failure_note;                 // negative cases without a witness
};

// Decides isometric hypercube embeddability: bipartiteness plus the
// canonical cut labeling re-verified against all-pairs distances. Requires a
// connected graph.
PartialCubeReport partial_cube_check(const Graph& g);

// Diamond ring found inside g: a 4-cycle plus an internally disjoint path of
// even length joining opposite cycle vertices whose middle vertex satisfies
// the equidistance conditions in g itself.
struct DiamondRingWitness {
    std::array<int, 4> cycle{};
    std::vector<int> path;  // from cycle[0] to cycle[2]
    int middle = -1;
    int length() const { return static_cast<int>(path.size()) - 1; }
};

std::optional<DiamondRingWitness> find_diamond_ring(const Graph& g);

// The graph DR_j: a 4-cycle with a path of length j joining opposite vertices.
Graph make_diamond_ring(int j);

std::string to_string(const FourCycleWitness& w);
std::string to_string(const DiamondRingWitness& w);

}  // namespace colorgraph
