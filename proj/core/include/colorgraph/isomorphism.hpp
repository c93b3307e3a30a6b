#pragma once

#include <optional>
#include <vector>

#include "colorgraph/graph.hpp"

namespace colorgraph {

// Vertex bijection a->b preserving adjacency both ways, or nullopt.
// Degree/neighborhood refinement narrows the classes, then backtracking;
// exact and fast enough for the graphs handled here (<= 64 vertices).
std::optional<std::vector<int>> graphs_isomorphic(const Graph& a, const Graph& b);

// Injective map pattern->host sending pattern edges to host edges (ordinary
// subgraph, not necessarily induced), or nullopt.
std::optional<std::vector<int>> contains_subgraph(const Graph& host, const Graph& pattern);

}  // namespace colorgraph
