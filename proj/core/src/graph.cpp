#include "colorgraph/graph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <sstream>

namespace colorgraph {

Graph Graph::from_edges(int order, std::vector<std::pair<int, int>> edges) {
    Graph g;
    g.order = order;
    if (order < 0) throw InputError("graph order must be nonnegative");
    for (auto& [u, v] : edges) {
        if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
        if (u < 0 || v < 0 || u >= order || v >= order)
            throw InputError("edge endpoint out of range");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    g.edges = std::move(edges);
    g.adj.resize(order);
    for (const auto& [u, v] : g.edges) {
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    for (auto& nbrs : g.adj) std::sort(nbrs.begin(), nbrs.end());
    return g;
}

bool Graph::has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(u, v));
}

int Graph::max_degree() const {
    int best = 0;
    for (int v = 0; v < order; ++v) best = std::max(best, degree(v));
    return best;
}

std::vector<int> bfs_distances(const Graph& g, int src) {
    std::vector<int> dist(g.order, -1);
    std::deque<int> queue{src};
    dist[src] = 0;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int v : g.adj[u]) {
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    return dist;
}

std::vector<std::vector<int>> all_pairs_distances(const Graph& g) {
    std::vector<std::vector<int>> dist;
    dist.reserve(g.order);
    for (int v = 0; v < g.order; ++v) dist.push_back(bfs_distances(g, v));
    return dist;
}

bool is_connected(const Graph& g) {
    if (g.order == 0) return true;
    std::vector<int> dist = bfs_distances(g, 0);
    return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

bool is_bipartite(const Graph& g) {
    std::vector<int> side(g.order, -1);
    for (int s = 0; s < g.order; ++s) {
        if (side[s] >= 0) continue;
        side[s] = 0;
        std::deque<int> queue{s};
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int v : g.adj[u]) {
                if (side[v] < 0) {
                    side[v] = 1 - side[u];
                    queue.push_back(v);
                } else if (side[v] == side[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

int diameter_of_connected(const Graph& g) {
    int best = 0;
    for (int v = 0; v < g.order; ++v) {
        for (int d : bfs_distances(g, v)) {
            if (d < 0) throw InputError("diameter requested for a disconnected graph");
            best = std::max(best, d);
        }
    }
    return best;
}

Graph parse_plain_graph(std::istream& in) {
    int order = -1;
    std::vector<std::pair<int, int>> edges;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;  // blank line
        if (tag[0] == '#') continue;
        if (tag == "p") {
            if (order >= 0) throw InputError("duplicate 'p' line at line " + std::to_string(lineno));
            if (!(ls >> order) || order < 0)
                throw InputError("bad 'p' line at line " + std::to_string(lineno));
        } else if (tag == "e") {
            int u, v;
            if (order < 0) throw InputError("'e' line before 'p' line");
            if (!(ls >> u >> v)) throw InputError("bad 'e' line at line " + std::to_string(lineno));
            edges.emplace_back(u, v);
        } else {
            throw InputError("unknown line tag '" + tag + "' at line " + std::to_string(lineno));
        }
    }
    if (order < 0) throw InputError("missing 'p' line");
    return Graph::from_edges(order, std::move(edges));
}

Graph parse_plain_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open graph file: " + path);
    return parse_plain_graph(in);
}

std::string write_plain_graph(const Graph& g) {
    std::string out = "p " + std::to_string(g.order) + "\n";
    for (const auto& [u, v] : g.edges)
        out += "e " + std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

std::string write_dot(const Graph& g, const std::string& name,
                      const std::vector<std::string>& labels) {
    if (!labels.empty() && static_cast<int>(labels.size()) != g.order)
        throw InputError("label count does not match graph order");
    std::string out = "graph \"" + name + "\" {\n";
    for (int v = 0; v < g.order; ++v) {
        out += "  v" + std::to_string(v);
        if (!labels.empty()) out += " [label=\"" + labels[v] + "\"]";
        out += ";\n";
    }
    for (const auto& [u, v] : g.edges)
        out += "  v" + std::to_string(u) + " -- v" + std::to_string(v) + ";\n";
    out += "}\n";
    return out;
}

}  // namespace colorgraph
