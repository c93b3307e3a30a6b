#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "colorgraph/errors.hpp"

namespace colorgraph {

// Simple undirected graph on vertices 0..order-1.
struct Graph {
    int order = 0;
    std::vector<std::pair<int, int>> edges;  // u < v, sorted, no duplicates
    std::vector<std::vector<int>> adj;

    static Graph from_edges(int order, std::vector<std::pair<int, int>> edges);

    int size() const { return static_cast<int>(edges.size()); }
    int degree(int v) const { return static_cast<int>(adj[v].size()); }
    bool has_edge(int u, int v) const;
    int max_degree() const;
};

// BFS distances from src; -1 for unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, int src);
std::vector<std::vector<int>> all_pairs_distances(const Graph& g);

bool is_connected(const Graph& g);
bool is_bipartite(const Graph& g);

// Largest eccentricity; requires a connected graph with at least one edge.
int diameter_of_connected(const Graph& g);

// Plain-graph text format: "p N" then "e u v" lines with 0-based indices;
// blank lines and lines starting with '#' are ignored.
Graph parse_plain_graph(std::istream& in);
Graph parse_plain_graph_file(const std::string& path);
std::string write_plain_graph(const Graph& g);

// Undirected DOT output; labels, when given, must have one entry per vertex.
std::string write_dot(const Graph& g, const std::string& name,
                      const std::vector<std::string>& labels = {});

}  // namespace colorgraph
