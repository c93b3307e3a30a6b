#pragma once

#include <string>
#include <vector>

#include "colorgraph/coloring.hpp"
#include "colorgraph/graph.hpp"
#include "colorgraph/polygon.hpp"

namespace colorgraph {

// Vertex-induced subgraph of the associahedron on the triangulations
// compatible with a fixed polygon coloring.
struct ColorGraph {
    PolygonColoring coloring;
    std::vector<Triangulation> vertices;  // in associahedron order
    Graph graph;                          // over local vertex indices

    // Index of t among the compatible triangulations, or -1.
    int index_of(const Triangulation& t) const;
    // Vertex label "{1,3}{1,5}": the sorted diagonal list.
    std::string vertex_label(int v) const;
};

ColorGraph build_color_graph(const PolygonColoring& c, int cap = kDefaultPolygonCap);

// Same construction against an already-built associahedron.
ColorGraph color_graph_from_associahedron(const FlipGraph& assoc, const PolygonColoring& c);

enum class GraphClass { Empty, Rigid, Nonrigid };

std::string to_string(GraphClass c);

// Diameter with explicit tokens: edgeless and empty graphs report Undefined
// rather than 0, disconnected graphs with edges report Infinite.
struct DiameterValue {
    enum class Kind { Finite, Undefined, Infinite } kind = Kind::Undefined;
    int value = 0;

    static DiameterValue finite(int v) { return {Kind::Finite, v}; }
    static DiameterValue undefined() { return {Kind::Undefined, 0}; }
    static DiameterValue infinite() { return {Kind::Infinite, 0}; }

    bool operator==(const DiameterValue&) const = default;
};

std::string to_string(const DiameterValue& d);

struct GraphStats {
    int order = 0;
    int size = 0;
    DiameterValue diameter;
    int max_degree = 0;
    bool bipartite = true;
    GraphClass classification = GraphClass::Empty;
};

GraphStats graph_stats(const Graph& g);

bool is_connected_or_edgeless(const Graph& g);

}  // namespace colorgraph
