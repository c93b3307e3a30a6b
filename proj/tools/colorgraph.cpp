#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "colorgraph/catalog.hpp"
#include "colorgraph/isomorphism.hpp"
#include "colorgraph/verify.hpp"
#include "colorgraph/vine.hpp"

namespace fs = std::filesystem;
using colorgraph::InputError;
using colorgraph::ResourceError;
using colorgraph::VerificationError;
using ordered_json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

void write_output(const std::string& content, const std::string& path) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write to " + path);
    out << content;
}

colorgraph::Graph load_graph(const std::string& coloring_text, const std::string& graph_path,
                             int cap) {
    if (!coloring_text.empty() && !graph_path.empty())
        throw InputError("give either --coloring or --graph, not both");
    if (!coloring_text.empty()) {
        auto coloring = colorgraph::PolygonColoring::parse(coloring_text);
        return colorgraph::build_color_graph(coloring, cap).graph;
    }
    if (!graph_path.empty()) return colorgraph::parse_plain_graph_file(graph_path);
    throw InputError("give --coloring or --graph");
}

int cmd_catalog(int n, std::vector<std::string> formats, const std::string& out_dir,
                bool include_rigid, double timeout_seconds, int cap) {
    colorgraph::CatalogOptions options;
    options.include_rigid = include_rigid;
    options.cap = cap;
    options.lattice_budget =
        std::chrono::milliseconds(static_cast<long long>(timeout_seconds * 1000));
    auto start = std::chrono::steady_clock::now();
    colorgraph::Catalog catalog = colorgraph::build_catalog(n, options);
    double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    if (formats.empty()) formats = {"json", "csv", "dot"};
    if (out_dir.empty()) {
        // Stdout: the first requested format only.
        const std::string& format = formats.front();
        if (format == "json")
            std::cout << colorgraph::catalog_json(catalog);
        else if (format == "csv")
            std::cout << colorgraph::catalog_csv(catalog);
        else if (format == "dot")
            for (const auto& entry : catalog.entries) std::cout << colorgraph::entry_dot(entry);
        else
            throw InputError("unknown format " + format);
        return kExitOk;
    }

    fs::create_directories(out_dir);
    std::string stem = "catalog_n" + std::to_string(n);
    for (const std::string& format : formats) {
        if (format == "json") {
            write_output(colorgraph::catalog_json(catalog),
                         (fs::path(out_dir) / (stem + ".json")).string());
        } else if (format == "csv") {
            write_output(colorgraph::catalog_csv(catalog),
                         (fs::path(out_dir) / (stem + ".csv")).string());
        } else if (format == "dot") {
            fs::path graph_dir = fs::path(out_dir) / "graphs";
            fs::create_directories(graph_dir);
            for (const auto& entry : catalog.entries)
                write_output(colorgraph::entry_dot(entry),
                             (graph_dir / (entry.class_id + ".dot")).string());
        } else {
            throw InputError("unknown format " + format);
        }
    }
    // Timestamps and timing stay out of the primary outputs.
    ordered_json meta;
    meta["generated_at_unix"] =
        std::chrono::duration_cast<std::chrono::seconds>(
            std::chrono::system_clock::now().time_since_epoch())
            .count();
    meta["build_seconds"] = seconds;
    write_output(meta.dump(2) + "\n", (fs::path(out_dir) / (stem + ".meta.json")).string());
    std::cerr << "catalog n=" << n << ": " << catalog.entries.size() << " entries -> " << out_dir
              << "\n";
    return kExitOk;
}

int cmd_graph(const std::string& coloring_text, const std::string& format,
              const std::string& out_path, int cap) {
    auto coloring = colorgraph::PolygonColoring::parse(coloring_text);
    colorgraph::ColorGraph g = colorgraph::build_color_graph(coloring, cap);
    colorgraph::GraphStats stats = colorgraph::graph_stats(g.graph);
    if (stats.order == 0) std::cerr << "warning: color graph is empty\n";

    if (format == "dot") {
        std::vector<std::string> labels;
        for (const auto& t : g.vertices) labels.push_back(colorgraph::to_string(t));
        write_output(colorgraph::write_dot(g.graph, coloring.to_text(), labels), out_path);
        return kExitOk;
    }
    if (format == "json") {
        ordered_json j;
        j["coloring"] = coloring.to_text();
        j["n"] = coloring.polygon_size();
        j["order"] = stats.order;
        j["size"] = stats.size;
        j["classification"] = colorgraph::to_string(stats.classification);
        j["diameter"] = colorgraph::to_string(stats.diameter);
        j["vertices"] = ordered_json::array();
        for (const auto& t : g.vertices) j["vertices"].push_back(colorgraph::to_string(t));
        j["edges"] = g.graph.edges;
        write_output(j.dump(2) + "\n", out_path);
        return kExitOk;
    }
    if (format == "plain") {
        write_output(colorgraph::write_plain_graph(g.graph), out_path);
        return kExitOk;
    }
    throw InputError("unknown format " + format);
}

int cmd_embed_hypercube(const std::string& coloring_text, int forbidden_flag,
                        const std::string& out_path, int cap) {
    auto coloring = colorgraph::PolygonColoring::parse(coloring_text);
    colorgraph::ColorGraph g = colorgraph::build_color_graph(coloring, cap);
    colorgraph::Klein forbidden = forbidden_flag >= 0
                                      ? colorgraph::to_klein(forbidden_flag)
                                      : colorgraph::best_forbidden_color(coloring);
    colorgraph::HypercubeEmbedding emb = colorgraph::hypercube_embed(g, forbidden);

    ordered_json j;
    j["coloring"] = coloring.to_text();
    j["forbidden"] = forbidden;
    j["dimension"] = emb.dimension();
    j["bound"] = coloring.polygon_size() >= 4
                     ? colorgraph::dimension_bound(coloring.polygon_size())
                     : 0;
    j["allowed"] = ordered_json::array();
    for (const auto& d : emb.allowed) j["allowed"].push_back(colorgraph::to_string(d));
    j["assignment"] = ordered_json::array();
    for (std::size_t v = 0; v < emb.assignment.size(); ++v) {
        ordered_json row;
        row["vertex"] = colorgraph::to_string(g.vertices[v]);
        std::string bits(emb.allowed.size(), '0');
        ordered_json subset = ordered_json::array();
        for (std::size_t k = 0; k < emb.allowed.size(); ++k) {
            if (emb.assignment[v] >> k & 1) {
                bits[k] = '1';
                subset.push_back(colorgraph::to_string(emb.allowed[k]));
            }
        }
        row["bits"] = bits;
        row["subset"] = subset;
        j["assignment"].push_back(row);
    }
    write_output(j.dump(2) + "\n", out_path);
    return kExitOk;
}

int cmd_embed_lattice(const std::string& coloring_text, const std::string& graph_path, int dim,
                      const std::vector<int>& box, double timeout_seconds,
                      const std::string& out_path, int cap) {
    colorgraph::Graph g = load_graph(coloring_text, graph_path, cap);
    if (dim <= 0) {
        if (coloring_text.empty())
            throw InputError("--dim is required with --graph input");
        int n = static_cast<int>(colorgraph::PolygonColoring::parse(coloring_text).polygon_size());
        dim = std::max(1, (n - 2) / 2);
    }
    auto budget = std::chrono::milliseconds(static_cast<long long>(timeout_seconds * 1000));
    colorgraph::LatticeSearchResult result =
        box.empty() ? colorgraph::smallest_box_embedding(g, dim, budget)
                    : colorgraph::lattice_embed_search(g, dim, box, budget);

    ordered_json j;
    j["status"] = colorgraph::to_string(result.status);
    j["dim"] = dim;
    j["nodes"] = result.nodes;
    if (result.embedding) {
        j["box"] = result.embedding->box;
        j["points"] = result.embedding->points;
        if (box.empty()) j["minimal_confirmed"] = result.minimal_confirmed;
    }
    write_output(j.dump(2) + "\n", out_path);
    return kExitOk;
}

int cmd_check_partial_cube(const std::string& coloring_text, const std::string& graph_path,
                           int cap) {
    colorgraph::Graph g = load_graph(coloring_text, graph_path, cap);
    colorgraph::PartialCubeReport report = colorgraph::partial_cube_check(g);
    if (report.is_partial_cube) {
        std::cout << "partial_cube\nisometric_dimension " << report.isometric_dimension << "\n";
        return kExitOk;
    }
    std::cout << "not_partial_cube\n";
    if (report.witness)
        std::cout << "witness: " << colorgraph::to_string(*report.witness) << "\n";
    else
        std::cout << "reason: " << report.failure_note << "\n";
    return kExitCheckFailed;
}

int cmd_check_diamond_ring(const std::string& coloring_text, const std::string& graph_path,
                           int cap) {
    colorgraph::Graph g = load_graph(coloring_text, graph_path, cap);
    auto witness = colorgraph::find_diamond_ring(g);
    if (witness) {
        std::cout << "diamond_ring: " << colorgraph::to_string(*witness) << "\n";
        return kExitOk;
    }
    std::cout << "none\n";
    return kExitCheckFailed;
}

int cmd_check_vine(const std::string& coloring_text) {
    auto coloring = colorgraph::PolygonColoring::parse(coloring_text);
    auto vine = colorgraph::is_vine_class(coloring);
    if (vine) {
        std::cout << "vine p=" << vine->first << " q=" << vine->second << "\n";
        return kExitOk;
    }
    std::cout << "not_vine\n";
    return kExitCheckFailed;
}

int cmd_check_isomorphic(const std::string& path_a, const std::string& path_b) {
    colorgraph::Graph a = colorgraph::parse_plain_graph_file(path_a);
    colorgraph::Graph b = colorgraph::parse_plain_graph_file(path_b);
    auto mapping = colorgraph::graphs_isomorphic(a, b);
    if (mapping) {
        std::cout << "isomorphic\n";
        for (std::size_t v = 0; v < mapping->size(); ++v)
            std::cout << v << " -> " << (*mapping)[v] << "\n";
        return kExitOk;
    }
    std::cout << "not_isomorphic\n";
    return kExitCheckFailed;
}

int cmd_check_subgraph(const std::string& host_path, const std::string& pattern_path) {
    colorgraph::Graph host = colorgraph::parse_plain_graph_file(host_path);
    colorgraph::Graph pattern = colorgraph::parse_plain_graph_file(pattern_path);
    auto mapping = colorgraph::contains_subgraph(host, pattern);
    if (mapping) {
        std::cout << "subgraph\n";
        for (std::size_t v = 0; v < mapping->size(); ++v)
            std::cout << v << " -> " << (*mapping)[v] << "\n";
        return kExitOk;
    }
    std::cout << "no_injection\n";
    return kExitCheckFailed;
}

int cmd_verify(const std::string& range_text, int cap, double timeout_seconds,
               bool corrupt_fixture) {
    int lo, hi;
    auto sep = range_text.find("..");
    try {
        if (sep == std::string::npos) {
            lo = hi = std::stoi(range_text);
        } else {
            lo = std::stoi(range_text.substr(0, sep));
            hi = std::stoi(range_text.substr(sep + 2));
        }
    } catch (const std::exception&) {
        throw InputError("bad range: " + range_text + " (expected e.g. 4..8)");
    }
    colorgraph::VerifyOptions options;
    options.cap = cap;
    options.lattice_budget =
        std::chrono::milliseconds(static_cast<long long>(timeout_seconds * 1000));
    options.corrupt_fixture = corrupt_fixture;
    auto results = colorgraph::run_verification(lo, hi, options);
    bool all_passed = true;
    for (const auto& result : results) {
        std::cout << (result.passed ? "PASS" : "FAIL") << " " << result.name;
        std::printf(" (%.2fs)\n", result.seconds);
        if (!result.passed) {
            std::cout << "  counterexample: " << result.detail << "\n";
            all_passed = false;
        }
    }
    std::cout << (all_passed ? "verify: all suites passed" : "verify: FAILURES") << "\n";
    return all_passed ? kExitOk : kExitCheckFailed;
}

int cmd_vine(int p, int q, int cap) {
    std::cout << "vine 1^" << p << " 2 1^" << q << ": n=" << p + q + 2 << ", order "
              << colorgraph::binomial(p + q, p) << ", diameter " << p * q << "\n";
    bool ok = colorgraph::verify_vine_isomorphism(p, q, cap);
    std::cout << (ok ? "lattice simplex isomorphism verified"
                     : "lattice simplex isomorphism FAILED")
              << "\n";
    return ok ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Color graphs of polygon triangulations: catalogs, embeddings, checks"};
    app.require_subcommand(1);

    int cap = colorgraph::kDefaultPolygonCap;
    app.add_option("--cap", cap, "Polygon size cap for enumeration")->capture_default_str();

    // catalog
    auto* catalog = app.add_subcommand("catalog", "Enumerate classes and analyze every one");
    int catalog_n = 0;
    std::vector<std::string> catalog_formats;
    std::string catalog_out;
    bool include_rigid = false;
    double catalog_timeout = 30.0;
    catalog->add_option("--n", catalog_n, "Polygon size")->required();
    catalog->add_option("--format", catalog_formats, "json, csv, dot (default: all)");
    catalog->add_option("--out", catalog_out, "Output directory");
    catalog->add_flag("--include-rigid", include_rigid, "Also list rigid and empty classes");
    catalog->add_option("--timeout", catalog_timeout, "Lattice search budget per class, seconds")
        ->capture_default_str();

    // graph
    auto* graph = app.add_subcommand("graph", "Emit the color graph of a coloring");
    std::string graph_coloring, graph_format = "dot", graph_out;
    graph->add_option("--coloring", graph_coloring, "Comma-separated colors, e.g. 0,1,0,3,0,2")
        ->required();
    graph->add_option("--format", graph_format, "dot, json or plain")->capture_default_str();
    graph->add_option("--out", graph_out, "Output file (default stdout)");

    // embed
    auto* embed = app.add_subcommand("embed", "Hypercube and lattice embeddings");
    embed->require_subcommand(1);
    auto* embed_hc = embed->add_subcommand("hypercube", "Allowed-diagonal hypercube embedding");
    std::string hc_coloring, hc_out;
    int hc_forbidden = -1;
    embed_hc->add_option("--coloring", hc_coloring)->required();
    embed_hc->add_option("--forbidden", hc_forbidden, "Forbidden color (default: best)");
    embed_hc->add_option("--out", hc_out);
    auto* embed_lat = embed->add_subcommand("lattice", "Integer lattice embedding search");
    std::string lat_coloring, lat_graph, lat_out;
    int lat_dim = 0;
    std::vector<int> lat_box;
    double lat_timeout = 30.0;
    embed_lat->add_option("--coloring", lat_coloring);
    embed_lat->add_option("--graph", lat_graph, "Plain-graph file");
    embed_lat->add_option("--dim", lat_dim, "Lattice dimension (default floor((n-2)/2))");
    embed_lat->add_option("--box", lat_box, "Extents per axis, e.g. 3,3,2")->delimiter(',');
    embed_lat->add_option("--timeout", lat_timeout, "Budget in seconds")->capture_default_str();
    embed_lat->add_option("--out", lat_out);

    // check
    auto* check = app.add_subcommand("check", "Property checks (exit 1 when the check fails)");
    check->require_subcommand(1);
    auto* check_pc = check->add_subcommand("partial-cube", "Isometric hypercube embeddability");
    std::string pc_coloring, pc_graph;
    check_pc->add_option("--coloring", pc_coloring);
    check_pc->add_option("--graph", pc_graph);
    auto* check_dr = check->add_subcommand("diamond-ring", "Diamond ring obstruction search");
    std::string dr_coloring, dr_graph;
    check_dr->add_option("--coloring", dr_coloring);
    check_dr->add_option("--graph", dr_graph);
    auto* check_vine = check->add_subcommand("vine", "Is the coloring a vine class?");
    std::string vine_coloring_text;
    check_vine->add_option("--coloring", vine_coloring_text)->required();
    auto* check_iso = check->add_subcommand("isomorphic", "Graph isomorphism with witness");
    std::string iso_a, iso_b;
    check_iso->add_option("--a", iso_a, "Plain-graph file")->required();
    check_iso->add_option("--b", iso_b, "Plain-graph file")->required();
    auto* check_sub = check->add_subcommand("subgraph", "Subgraph injection with witness");
    std::string sub_host, sub_pattern;
    check_sub->add_option("--host", sub_host)->required();
    check_sub->add_option("--pattern", sub_pattern)->required();

    // verify
    auto* verify = app.add_subcommand("verify", "Run every invariant suite over a range");
    std::string verify_range;
    double verify_timeout = 30.0;
    bool corrupt_fixture = false;
    verify->add_option("--n", verify_range, "Polygon size or range, e.g. 4..8")->required();
    verify->add_option("--timeout", verify_timeout, "Lattice budget per graph, seconds")
        ->capture_default_str();
    verify->add_flag("--corrupt-fixture", corrupt_fixture)->group("");  // test hook, hidden

    // vine
    auto* vine = app.add_subcommand("vine", "Vine simplex facts and verification");
    int vine_p = 0, vine_q = 0;
    vine->add_option("--p", vine_p)->required();
    vine->add_option("--q", vine_q)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(catalog))
            return cmd_catalog(catalog_n, catalog_formats, catalog_out, include_rigid,
                               catalog_timeout, cap);
        if (app.got_subcommand(graph))
            return cmd_graph(graph_coloring, graph_format, graph_out, cap);
        if (app.got_subcommand(embed)) {
            if (embed->got_subcommand(embed_hc))
                return cmd_embed_hypercube(hc_coloring, hc_forbidden, hc_out, cap);
            return cmd_embed_lattice(lat_coloring, lat_graph, lat_dim, lat_box, lat_timeout,
                                     lat_out, cap);
        }
        if (app.got_subcommand(check)) {
            if (check->got_subcommand(check_pc))
                return cmd_check_partial_cube(pc_coloring, pc_graph, cap);
            if (check->got_subcommand(check_dr))
                return cmd_check_diamond_ring(dr_coloring, dr_graph, cap);
            if (check->got_subcommand(check_vine)) return cmd_check_vine(vine_coloring_text);
            if (check->got_subcommand(check_iso)) return cmd_check_isomorphic(iso_a, iso_b);
            return cmd_check_subgraph(sub_host, sub_pattern);
        }
        if (app.got_subcommand(verify))
            return cmd_verify(verify_range, cap, verify_timeout, corrupt_fixture);
        if (app.got_subcommand(vine)) return cmd_vine(vine_p, vine_q, cap);
    } catch (const ResourceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResource;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const VerificationError& e) {
        std::cerr << "verification error: " << e.what() << "\n";
        return kExitCheckFailed;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
