// Acceptance suite: every criterion prints one PASS/FAIL line; the exit code
// is the number of failed criteria. Exact integer combinatorics throughout,
// no tolerances.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "colorgraph/catalog.hpp"
#include "colorgraph/isomorphism.hpp"
#include "colorgraph/partial_cube.hpp"
#include "colorgraph/verify.hpp"
#include "colorgraph/vine.hpp"

using namespace colorgraph;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Cache {
    std::map<int, std::vector<ColoringClass>> classes;
    std::map<int, std::vector<ColorGraph>> graphs;
    std::map<int, Catalog> catalogs;
    std::map<int, json> fixtures;

    const std::vector<ColoringClass>& classes_of(int n) {
        if (!classes.count(n)) classes[n] = enumerate_coloring_classes(n);
        return classes[n];
    }
    const std::vector<ColorGraph>& graphs_of(int n) {
        if (!graphs.count(n)) {
            FlipGraph assoc = build_associahedron(n);
            std::vector<ColorGraph> out;
            for (const auto& cls : classes_of(n))
                out.push_back(color_graph_from_associahedron(assoc, cls.representative));
            graphs[n] = std::move(out);
        }
        return graphs[n];
    }
    const Catalog& catalog_of(int n) {
        if (!catalogs.count(n)) catalogs[n] = build_catalog(n);
        return catalogs[n];
    }
    const json& fixture_of(int n) {
        if (!fixtures.count(n)) {
            std::ifstream in(std::string(COLORGRAPH_FIXTURE_DIR) + "/appendix_n" +
                             std::to_string(n) + ".json");
            if (!in) throw std::runtime_error("missing fixture for n=" + std::to_string(n));
            fixtures[n] = json::parse(in);
        }
        return fixtures[n];
    }
    const CatalogEntry& entry(int n, const std::string& label) {
        for (const auto& e : catalog_of(n).entries)
            if (e.label == label) return e;
        throw std::runtime_error("no catalog entry labelled " + label);
    }
};

Cache cache;

// -------- criterion 1: class counts and partition groupings --------
std::string criterion_class_counts() {
    const std::map<int, int> expected_counts{{6, 5}, {7, 7}, {8, 26}};
    for (auto [n, expected] : expected_counts) {
        const Catalog& catalog = cache.catalog_of(n);
        if (catalog.nonrigid != expected)
            return "n=" + std::to_string(n) + ": nonrigid count " +
                   std::to_string(catalog.nonrigid) + " != " + std::to_string(expected);
        const json& fixture = cache.fixture_of(n);
        std::size_t i = 0;
        for (const auto& jl : fixture["labels"]) {
            const CatalogEntry& entry = catalog.entries.at(i++);
            if (entry.label != jl["label"].get<std::string>())
                return "n=" + std::to_string(n) + ": label order mismatch at " + entry.label;
            if (entry.partition != jl["partition"].get<std::vector<int>>())
                return "n=" + std::to_string(n) + ": partition group mismatch at " + entry.label;
        }
    }
    // Hexagon grouping exactly as published: 3,1,1,1 once, then 2,2,1,1.
    const Catalog& hexagon = cache.catalog_of(6);
    if (hexagon.entries[0].partition != std::vector<int>{3, 1, 1, 1}) return "6-1 grouping";
    for (int i = 1; i < 5; ++i)
        if (hexagon.entries[i].partition != std::vector<int>{2, 2, 1, 1})
            return "hexagon 2,2,1,1 grouping";
    return "";
}

// -------- criterion 2: diameters --------
std::string criterion_diameters() {
    for (int n = 4; n <= 8; ++n) {
        const auto& classes = cache.classes_of(n);
        const auto& graphs = cache.graphs_of(n);
        for (std::size_t i = 0; i < classes.size(); ++i) {
            auto vine = is_vine_class(classes[i].representative);
            if (!vine || vine->first < 1) continue;
            GraphStats stats = graph_stats(graphs[i].graph);
            if (stats.diameter != DiameterValue::finite(vine->first * vine->second))
                return "vine diameter law fails at n=" + std::to_string(n) + " class " +
                       classes[i].representative.to_text();
        }
    }
    if (cache.entry(7, "4").diameter != DiameterValue::finite(6)) return "heptagon vine diameter";
    int exceeding = 0;
    for (const auto& e : cache.catalog_of(7).entries) {
        if (e.diameter.kind != DiameterValue::Kind::Finite) return "heptagon diameter undefined";
        if (e.diameter.value > 6) {
            ++exceeding;
            if (e.diameter.value != 7 && e.diameter.value != 8)
                return "heptagon diameter beyond 8 at " + e.class_id;
        }
    }
    if (exceeding != 3) return "expected exactly three heptagon classes above diameter 6";
    if (cache.entry(8, "T").diameter != DiameterValue::finite(9)) return "octagon T diameter";
    for (const char* label : {"I", "N", "P", "R"})
        if (cache.entry(8, label).diameter != DiameterValue::finite(10))
            return std::string("octagon ") + label + " diameter";
    for (const auto& e : cache.catalog_of(8).entries) {
        bool named = e.label == "I" || e.label == "N" || e.label == "P" || e.label == "R";
        if (!named && e.diameter.value > 9) return "unexpected octagon diameter above 9";
    }
    return "";
}

// -------- criterion 3: hypercube embedding validity --------
std::string criterion_hypercube() {
    for (int n = 4; n <= 8; ++n) {
        const auto& classes = cache.classes_of(n);
        const auto& graphs = cache.graphs_of(n);
        for (std::size_t i = 0; i < classes.size(); ++i) {
            for (Klein forbidden = 0; forbidden < 4; ++forbidden) {
                try {
                    hypercube_embed(graphs[i], forbidden);
                } catch (const std::exception& e) {
                    return "n=" + std::to_string(n) + " class " +
                           classes[i].representative.to_text() + " forbidden " +
                           std::to_string(int(forbidden)) + ": " + e.what();
                }
            }
        }
    }
    return "";
}

// -------- criterion 4: dimension bound and count formulas --------
std::string criterion_dimension_bound() {
    if (dimension_bound(6) != 3 || dimension_bound(7) != 5 || dimension_bound(8) != 8)
        return "bound values for n=6,7,8";
    for (int n = 4; n <= 9; ++n) {
        for (const auto& cls : cache.classes_of(n)) {
            Klein best = best_forbidden_color(cls.representative);
            if (static_cast<int>(allowed_diagonals(cls.representative, best).size()) >
                dimension_bound(n))
                return "n=" + std::to_string(n) + ": bound exceeded for " +
                       cls.representative.to_text();
        }
    }
    for (int n = 3; n <= 64; ++n)
        for (int w = 0; w + 3 <= n; ++w)
            for (int x = 1; x + w + 2 <= n; ++x)
                for (int y = 1; w + x + y + 1 <= n; ++y) {
                    int z = n - w - x - y;
                    if (count_formula(n, w, x, y, z) != count_formula_simplified(n, w, x, y, z))
                        return "closed forms disagree at (" + std::to_string(w) + "," +
                               std::to_string(x) + "," + std::to_string(y) + "," +
                               std::to_string(z) + ")";
                }
    return "";
}

// -------- criterion 5: vine lattice simplices --------
std::string criterion_vines() {
    for (int p = 0; p <= 4; ++p)
        for (int q = p; q <= 4; ++q)
            if (!verify_vine_isomorphism(p, q))
                return "vine (" + std::to_string(p) + "," + std::to_string(q) + ")";
    BinaryTree anchor = vine_from_coordinates({1, 3, 4}, 3, 5);
    if (vine_coordinates(anchor, 3, 5) != std::vector<int>{1, 3, 4})
        return "coordinate anchor (1,3,4)";
    if (build_color_graph(vine_coloring(3, 3)).graph.order != 20 || binomial(6, 3) != 20)
        return "vine (3,3) order 20";
    for (int p = 0; p <= 4; ++p)
        for (int q = p; q <= 4; ++q) {
            if (p + q == 0) continue;
            if (build_color_graph(vine_coloring(p, q)).graph.order != binomial(p + q, p))
                return "vine order != binomial for (" + std::to_string(p) + "," +
                       std::to_string(q) + ")";
        }
    return "";
}

// -------- criterion 6: bipartite and connected-or-edgeless --------
std::string criterion_bipartite_connected() {
    for (int n = 4; n <= 9; ++n) {
        const auto& classes = cache.classes_of(n);
        const auto& graphs = cache.graphs_of(n);
        for (std::size_t i = 0; i < classes.size(); ++i) {
            if (!is_bipartite(graphs[i].graph))
                return "n=" + std::to_string(n) + ": not bipartite: " +
                       classes[i].representative.to_text();
            if (!is_connected_or_edgeless(graphs[i].graph))
                return "n=" + std::to_string(n) + ": disconnected with edges: " +
                       classes[i].representative.to_text();
        }
    }
    return "";
}

// -------- criterion 7: partial-cube obstructions --------
std::string criterion_obstructions() {
    std::set<std::string> expected{"U", "V", "W", "X", "Y", "Z"};
    for (const auto& e : cache.catalog_of(8).entries) {
        const Graph& g = e.graph_data->graph;
        PartialCubeReport report = partial_cube_check(g);
        bool should_fail = expected.count(e.label) > 0;
        if (report.is_partial_cube == should_fail)
            return "label " + e.label + ": partial-cube status " +
                   (report.is_partial_cube ? "positive" : "negative") + " unexpected";
        if (should_fail) {
            if (!report.witness) return "label " + e.label + ": no distance witness";
            auto dist = all_pairs_distances(g);
            auto [a, b, c, d] = report.witness->cycle;
            int v = report.witness->vertex;
            if (!g.has_edge(a, b) || !g.has_edge(b, c) || !g.has_edge(c, d) || !g.has_edge(d, a))
                return "label " + e.label + ": witness cycle is not a 4-cycle";
            if (dist[v][a] != dist[v][c] || dist[v][b] != dist[v][d])
                return "label " + e.label + ": witness distances do not hold";
            auto ring = find_diamond_ring(g);
            if (!ring) return "label " + e.label + ": diamond ring not found";
            for (std::size_t i = 0; i + 1 < ring->path.size(); ++i)
                if (!g.has_edge(ring->path[i], ring->path[i + 1]))
                    return "label " + e.label + ": diamond ring path broken";
        }
    }
    for (int j : {2, 4, 6})
        if (partial_cube_check(make_diamond_ring(j)).is_partial_cube)
            return "DR_" + std::to_string(j) + " accepted as a partial cube";
    Graph c4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    if (!partial_cube_check(c4).is_partial_cube) return "C4 rejected";
    for (int k = 2; k <= 7; ++k) {
        std::vector<std::pair<int, int>> edges;
        for (int v = 0; v + 1 < k; ++v) edges.emplace_back(v, v + 1);
        if (!partial_cube_check(Graph::from_edges(k, std::move(edges))).is_partial_cube)
            return "path rejected";
    }
    for (const auto& e : cache.catalog_of(6).entries)
        if (!partial_cube_check(e.graph_data->graph).is_partial_cube)
            return "hexagon class " + e.label + " rejected";
    return "";
}

// -------- criterion 8: lattice embeddings --------
std::string criterion_lattice() {
    const std::map<int, std::vector<std::vector<int>>> boxes{
        {4, {}}, {5, {}}, {6, {{2, 2}, {3, 1}}}, {7, {{3, 3}, {4, 2}}}, {8, {{3, 3, 2}}}};
    for (int n = 4; n <= 8; ++n) {
        int dim = std::max(1, (n - 2) / 2);
        const auto& classes = cache.classes_of(n);
        const auto& graphs = cache.graphs_of(n);
        for (std::size_t i = 0; i < classes.size(); ++i) {
            const Graph& g = graphs[i].graph;
            bool found = false;
            if (boxes.at(n).empty() || g.size() == 0) {
                auto result = g.size() == 0 && g.order > 0
                                  ? lattice_embed_search(g, dim, std::vector<int>(
                                                                    dim, std::max(1, g.order - 1)))
                                  : lattice_embed_search(g, dim);
                found = result.status == SearchStatus::Found;
            } else {
                for (const auto& box : boxes.at(n)) {
                    auto result = lattice_embed_search(g, dim, box);
                    if (result.status == SearchStatus::Found) {
                        if (!verify_lattice_embedding(g, *result.embedding))
                            return "embedding failed re-verification";
                        found = true;
                        break;
                    }
                }
            }
            if (!found)
                return "n=" + std::to_string(n) + ": class " +
                       classes[i].representative.to_text() + " does not embed in dimension " +
                       std::to_string(dim);
        }
    }
    for (const char* label : {"W", "X", "Y", "Z"}) {
        const CatalogEntry& e = cache.entry(8, label);
        auto result = lattice_embed_search(e.graph_data->graph, 3, std::vector<int>{3, 3, 2});
        if (result.status != SearchStatus::Found)
            return std::string(label) + " does not fit the 3x3x2 box";
    }
    return "";
}

// -------- criterion 9: inclusions and isomorphisms --------
std::string criterion_inclusions() {
    auto check_subgraph = [&](const std::string& pattern, const std::string& host) -> std::string {
        const Graph& gp = cache.entry(8, pattern).graph_data->graph;
        const Graph& gh = cache.entry(8, host).graph_data->graph;
        auto inject = contains_subgraph(gh, gp);
        if (!inject) return pattern + " is not a subgraph of " + host;
        std::set<int> image(inject->begin(), inject->end());
        if (image.size() != inject->size()) return "injection into " + host + " not injective";
        for (auto [u, v] : gp.edges)
            if (!gh.has_edge((*inject)[u], (*inject)[v]))
                return "injection " + pattern + " -> " + host + " drops an edge";
        return "";
    };
    for (auto [pattern, host] : std::vector<std::pair<std::string, std::string>>{
             {"T", "U"}, {"U", "X"}, {"H", "O"}, {"H", "Q"}, {"H", "V"}, {"H", "W"}, {"H", "Y"}})
        if (std::string err = check_subgraph(pattern, host); !err.empty()) return err;

    auto check_iso = [&](int n, const std::string& a, const std::string& b) -> std::string {
        const Graph& ga = cache.entry(n, a).graph_data->graph;
        const Graph& gb = cache.entry(n, b).graph_data->graph;
        auto mapping = graphs_isomorphic(ga, gb);
        if (!mapping) return a + " and " + b + " are not isomorphic";
        for (int u = 0; u < ga.order; ++u)
            for (int v = u + 1; v < ga.order; ++v)
                if (ga.has_edge(u, v) != gb.has_edge((*mapping)[u], (*mapping)[v]))
                    return "bijection " + a + " -> " + b + " does not preserve adjacency";
        return "";
    };
    if (std::string err = check_iso(6, "3", "5"); !err.empty()) return err;
    if (std::string err = check_iso(8, "E", "F"); !err.empty()) return err;
    return "";
}

// -------- criterion 10: byte-identical catalog runs --------
std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

int run_cli(const std::string& args) {
    std::string command = std::string(COLORGRAPH_CLI_PATH) + " " + args;
    int status = std::system(command.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string criterion_determinism() {
    fs::path base = fs::temp_directory_path() / "colorgraph-acceptance";
    fs::remove_all(base);
    fs::path run1 = base / "run1", run2 = base / "run2";
    for (const fs::path& dir : {run1, run2}) {
        int code = run_cli("catalog --n 8 --out " + dir.string() + " 2>/dev/null");
        if (code != 0) return "catalog run exited with " + std::to_string(code);
    }
    for (const char* name : {"catalog_n8.json", "catalog_n8.csv"})
        if (read_file(run1 / name) != read_file(run2 / name))
            return std::string(name) + " differs between runs";
    std::set<std::string> dots;
    for (const auto& entry : fs::directory_iterator(run1 / "graphs"))
        dots.insert(entry.path().filename().string());
    if (dots.size() != 26) return "expected 26 graph files";
    for (const auto& name : dots)
        if (read_file(run1 / "graphs" / name) != read_file(run2 / "graphs" / name))
            return name + " differs between runs";
    fs::remove_all(base);
    return "";
}

// -------- extra: CLI exit codes and the corrupted-fixture control --------
std::string extra_cli_behaviour() {
    if (run_cli("verify --n 4..8 >/dev/null") != 0) return "verify 4..8 should exit 0";
    if (run_cli("verify --n 6..6 --corrupt-fixture >/dev/null") != 1)
        return "corrupted fixture should exit 1";
    if (run_cli("graph --coloring 0,1,1,2 2>/dev/null") != 2) return "parse error should exit 2";
    if (run_cli("catalog --n 13 2>/dev/null") != 3) return "cap overflow should exit 3";
    if (run_cli("check partial-cube --coloring 0,1,2,3,1,3,0,2 >/dev/null") != 1)
        return "failed check should exit 1";
    if (run_cli("check vine --coloring 0,1,2,3,2,3,0,1 >/dev/null") != 0)
        return "passing check should exit 0";
    if (run_cli("catalog --n 6 --out /dev/null/nope 2>/dev/null") != 2)
        return "unwritable output path should exit 2";
    if (run_cli("embed lattice --graph /nonexistent.txt --dim 2 2>/dev/null") != 2)
        return "missing graph file should exit 2";
    return "";
}

}  // namespace

int main() {
    struct Criterion {
        std::string title;
        std::function<std::string()> run;
    };
    std::vector<Criterion> criteria = {
        {"criterion 1: class counts and partition groupings", criterion_class_counts},
        {"criterion 2: diameters and the vine law", criterion_diameters},
        {"criterion 3: hypercube embedding checks over all classes and colors",
         criterion_hypercube},
        {"criterion 4: dimension bound and count formulas", criterion_dimension_bound},
        {"criterion 5: vine lattice simplices", criterion_vines},
        {"criterion 6: bipartite and connected-or-edgeless", criterion_bipartite_connected},
        {"criterion 7: partial-cube obstructions", criterion_obstructions},
        {"criterion 8: lattice embeddings and boxes", criterion_lattice},
        {"criterion 9: inclusions and isomorphisms", criterion_inclusions},
        {"criterion 10: byte-identical catalog runs", criterion_determinism},
        {"extra: CLI exit codes and negative control", extra_cli_behaviour},
    };

    int failures = 0;
    for (const auto& criterion : criteria) {
        std::string err;
        auto start = std::chrono::steady_clock::now();
        try {
            err = criterion.run();
        } catch (const std::exception& e) {
            err = std::string("exception: ") + e.what();
        }
        double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (err.empty()) {
            std::printf("PASS %s (%.2fs)\n", criterion.title.c_str(), seconds);
        } else {
            std::printf("FAIL %s (%.2fs)\n  %s\n", criterion.title.c_str(), seconds, err.c_str());
            ++failures;
        }
    }
    std::printf("%s\n", failures == 0 ? "acceptance: all criteria passed"
                                      : "acceptance: FAILURES");
    return failures;
}
