#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "colorgraph/colorgraph.hpp"
#include "colorgraph/isomorphism.hpp"

using namespace colorgraph;

namespace {

Graph path(int k) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < k; ++v) edges.emplace_back(v, v + 1);
    return Graph::from_edges(k, std::move(edges));
}

Graph star(int leaves) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
    return Graph::from_edges(leaves + 1, std::move(edges));
}

}  // namespace

TEST_CASE("graph basics") {
    Graph g = Graph::from_edges(4, {{0, 1}, {1, 0}, {1, 2}, {2, 3}, {3, 0}});
    CHECK(g.size() == 4);  // duplicate collapsed
    CHECK(g.has_edge(0, 3));
    CHECK(g.max_degree() == 2);
    CHECK(is_connected(g));
    CHECK(is_bipartite(g));
    CHECK(diameter_of_connected(g) == 2);
    CHECK_FALSE(is_bipartite(Graph::from_edges(3, {{0, 1}, {1, 2}, {2, 0}})));
    CHECK_THROWS_AS(Graph::from_edges(2, {{0, 0}}), InputError);
    CHECK_THROWS_AS(Graph::from_edges(2, {{0, 5}}), InputError);
}

TEST_CASE("plain graph text format") {
    std::istringstream in("# comment\n\np 4\ne 0 1\ne 1 2\n e 2 3\n");
    Graph g = parse_plain_graph(in);
    CHECK(g.order == 4);
    CHECK(g.size() == 3);
    CHECK(write_plain_graph(g) == "p 4\ne 0 1\ne 1 2\ne 2 3\n");

    std::istringstream no_p("e 0 1\n");
    CHECK_THROWS_AS(parse_plain_graph(no_p), InputError);
    std::istringstream bad_tag("p 2\nx 0 1\n");
    CHECK_THROWS_AS(parse_plain_graph(bad_tag), InputError);
    std::istringstream dup_p("p 2\np 3\n");
    CHECK_THROWS_AS(parse_plain_graph(dup_p), InputError);
}

TEST_CASE("dot output") {
    Graph g = path(3);
    std::string dot = write_dot(g, "p3", {"{0,2}", "{1,3}", "{0,2}{1,3}"});
    CHECK(dot.find("graph \"p3\"") != std::string::npos);
    CHECK(dot.find("v0 -- v1;") != std::string::npos);
    CHECK(dot.find("label=\"{1,3}\"") != std::string::npos);
    CHECK_THROWS_AS(write_dot(g, "p3", {"a"}), InputError);
}

TEST_CASE("color graph construction") {
    ColorGraph star6 = build_color_graph(PolygonColoring::parse("0,1,0,3,0,2"));
    CHECK(star6.vertices.size() == 4);
    CHECK(star6.graph.size() == 3);
    std::vector<int> degrees;
    for (int v = 0; v < star6.graph.order; ++v) degrees.push_back(star6.graph.degree(v));
    std::sort(degrees.rbegin(), degrees.rend());
    CHECK(degrees == std::vector<int>{3, 1, 1, 1});
    // The hub is the inner triangle.
    int hub = star6.index_of(
        Triangulation(6, {Diagonal(1, 3), Diagonal(3, 5), Diagonal(1, 5)}));
    REQUIRE(hub >= 0);
    CHECK(star6.graph.degree(hub) == 3);

    // Both inner triangles are compatible with 0,1,2,0,1,2 and nothing else;
    // no flips between them, so the class is rigid of order two.
    ColorGraph rigid = build_color_graph(PolygonColoring::parse("0,1,2,0,1,2"));
    CHECK(rigid.vertices.size() == 2);
    CHECK(rigid.graph.size() == 0);
    CHECK(graph_stats(rigid.graph).classification == GraphClass::Rigid);

    ColorGraph empty = build_color_graph(PolygonColoring::parse("0,1,0,1,0,1"));
    CHECK(empty.vertices.empty());
    CHECK(graph_stats(empty.graph).classification == GraphClass::Empty);
}

TEST_CASE("graph stats and diameter tokens") {
    GraphStats star6 = graph_stats(build_color_graph(PolygonColoring::parse("0,1,0,3,0,2")).graph);
    CHECK(star6.diameter == DiameterValue::finite(2));
    CHECK(star6.max_degree == 3);
    CHECK(star6.bipartite);
    CHECK(star6.classification == GraphClass::Nonrigid);

    GraphStats edgeless = graph_stats(Graph::from_edges(3, {}));
    CHECK(edgeless.classification == GraphClass::Rigid);
    CHECK(edgeless.diameter == DiameterValue::undefined());
    CHECK(to_string(edgeless.diameter) == "undefined");

    GraphStats split = graph_stats(Graph::from_edges(4, {{0, 1}, {2, 3}}));
    CHECK(split.diameter == DiameterValue::infinite());

    CHECK(is_connected_or_edgeless(Graph::from_edges(3, {})));
    CHECK(is_connected_or_edgeless(path(4)));
    CHECK_FALSE(is_connected_or_edgeless(Graph::from_edges(4, {{0, 1}, {2, 3}})));
}

TEST_CASE("isomorphism") {
    ColorGraph g3 = build_color_graph(PolygonColoring::parse("2,0,1,0,2,3"));
    ColorGraph g5 = build_color_graph(PolygonColoring::parse("2,0,1,3,0,1"));
    auto mapping = graphs_isomorphic(g3.graph, g5.graph);
    REQUIRE(mapping.has_value());
    for (int u = 0; u < g3.graph.order; ++u)
        for (int v = 0; v < g3.graph.order; ++v)
            if (u != v)
                CHECK(g3.graph.has_edge(u, v) == g5.graph.has_edge((*mapping)[u], (*mapping)[v]));

    // Star and path with equal order and size but different degree sequences.
    CHECK_FALSE(graphs_isomorphic(star(3), path(4)).has_value());
    CHECK(graphs_isomorphic(Graph::from_edges(0, {}), Graph::from_edges(0, {})).has_value());
}

TEST_CASE("isomorphism under random relabeling") {
    std::mt19937 rng(12345);
    ColorGraph base = build_color_graph(PolygonColoring::parse("0,1,0,2,3,2,1"));  // 10 vertices
    const Graph& g = base.graph;
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<int> perm(g.order);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<std::pair<int, int>> edges;
        for (auto [u, v] : g.edges) edges.emplace_back(perm[u], perm[v]);
        Graph shuffled = Graph::from_edges(g.order, std::move(edges));
        CHECK(graphs_isomorphic(g, shuffled).has_value());
    }
}

TEST_CASE("subgraph containment") {
    CHECK_FALSE(contains_subgraph(path(4), star(3)).has_value());
    auto inject = contains_subgraph(star(3), path(3));
    REQUIRE(inject.has_value());
    // Path edges must land on star edges.
    Graph p = path(3), s = star(3);
    for (auto [u, v] : p.edges) CHECK(s.has_edge((*inject)[u], (*inject)[v]));

    // A subgraph injection need not be induced: P3 into C4.
    Graph c4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    CHECK(contains_subgraph(c4, path(3)).has_value());
    CHECK_FALSE(contains_subgraph(path(3), c4).has_value());
}
