#include "colorgraph/colorgraph.hpp"

#include <algorithm>

namespace colorgraph {

int ColorGraph::index_of(const Triangulation& t) const {
    for (std::size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i] == t) return static_cast<int>(i);
    return -1;
}

std::string ColorGraph::vertex_label(int v) const { return to_string(vertices[v]); }

ColorGraph build_color_graph(const PolygonColoring& c, int cap) {
    return color_graph_from_associahedron(build_associahedron(c.polygon_size(), cap), c);
}

ColorGraph color_graph_from_associahedron(const FlipGraph& assoc, const PolygonColoring& c) {
    if (assoc.n != c.polygon_size())
        throw InputError("associahedron and coloring have different polygon sizes");
    std::vector<int> local(assoc.vertices.size(), -1);
    std::vector<Triangulation> vertices;
    for (std::size_t i = 0; i < assoc.vertices.size(); ++i) {
        if (is_compatible(c, assoc.vertices[i])) {
            local[i] = static_cast<int>(vertices.size());
            vertices.push_back(assoc.vertices[i]);
        }
    }
    std::vector<std::pair<int, int>> edges;
    for (const auto& [u, v] : assoc.edges)
        if (local[u] >= 0 && local[v] >= 0) edges.emplace_back(local[u], local[v]);
    ColorGraph g{c, std::move(vertices), {}};
    g.graph = Graph::from_edges(static_cast<int>(g.vertices.size()), std::move(edges));
    return g;
}

std::string to_string(GraphClass c) {
    switch (c) {
        case GraphClass::Empty: return "empty";
        case GraphClass::Rigid: return "rigid";
        case GraphClass::Nonrigid: return "nonrigid";
    }
    return "?";
}

std::string to_string(const DiameterValue& d) {
    switch (d.kind) {
        case DiameterValue::Kind::Finite: return std::to_string(d.value);
        case DiameterValue::Kind::Undefined: return "undefined";
        case DiameterValue::Kind::Infinite: return "infinity";
    }
    return "?";
}

GraphStats graph_stats(const Graph& g) {
    GraphStats s;
    s.order = g.order;
    s.size = g.size();
    s.max_degree = g.max_degree();
    s.bipartite = is_bipartite(g);
    if (g.order == 0)
        s.classification = GraphClass::Empty;
    else if (g.size() == 0)
        s.classification = GraphClass::Rigid;
    else
        s.classification = GraphClass::Nonrigid;
    if (g.size() == 0)
        s.diameter = DiameterValue::undefined();
    else if (!is_connected(g))
        s.diameter = DiameterValue::infinite();
    else
        s.diameter = DiameterValue::finite(diameter_of_connected(g));
    return s;
}

bool is_connected_or_edgeless(const Graph& g) { return g.size() == 0 || is_connected(g); }

}  // namespace colorgraph
