#include "colorgraph/catalog.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>

#include <json.hpp>

#include "colorgraph/isomorphism.hpp"

namespace colorgraph {

using ordered_json = nlohmann::ordered_json;

const std::vector<std::pair<std::string, std::string>>& reference_labels(int n) {
    static const std::vector<std::pair<std::string, std::string>> hexagon = {
        {"1", "2,0,1,0,3,0"}, {"2", "1,0,1,0,3,2"}, {"3", "2,0,1,0,2,3"},
        {"4", "2,0,1,0,3,1"}, {"5", "2,0,1,3,0,1"},
    };
    static const std::vector<std::pair<std::string, std::string>> heptagon = {
        {"1", "0,1,0,2,3,0,1"}, {"2", "0,1,0,3,1,0,2"}, {"3", "0,1,0,1,3,0,2"},
        {"4", "0,1,0,2,3,2,1"}, {"5", "0,1,0,3,2,1,2"}, {"6", "0,1,0,2,3,1,2"},
        {"7", "0,1,2,0,3,1,2"},
    };
    static const std::vector<std::pair<std::string, std::string>> octagon = {
        {"A", "0,1,0,3,0,1,0,2"}, {"B", "0,1,0,2,0,3,0,1"}, {"C", "0,1,0,1,3,2,0,1"},
        {"D", "0,1,0,2,1,3,0,1"}, {"E", "0,1,0,2,3,2,0,2"}, {"F", "0,1,2,0,3,2,0,2"},
        {"G", "0,1,2,0,2,3,0,2"}, {"H", "0,1,0,2,3,2,0,1"}, {"I", "0,1,0,2,1,3,0,2"},
        {"J", "0,1,0,2,3,1,0,2"}, {"K", "0,1,0,1,2,3,0,2"}, {"L", "0,1,0,3,2,3,0,2"},
        {"M", "0,1,0,1,3,2,0,2"}, {"N", "0,1,2,0,2,3,0,1"}, {"O", "0,1,2,0,3,2,0,1"},
        {"P", "0,1,2,0,3,1,0,2"}, {"Q", "0,1,3,0,3,1,0,2"}, {"R", "0,1,2,0,1,3,0,2"},
        {"S", "0,1,3,0,1,3,0,2"}, {"T", "0,1,2,3,2,3,0,1"}, {"U", "0,1,2,3,1,3,0,2"},
        {"V", "0,1,3,2,3,1,0,2"}, {"W", "0,1,3,2,1,3,0,2"}, {"X", "0,1,3,0,2,3,1,2"},
        {"Y", "0,1,3,2,0,3,1,2"}, {"Z", "0,1,3,2,0,1,3,2"},
    };
    static const std::vector<std::pair<std::string, std::string>> none;
    switch (n) {
        case 6: return hexagon;
        case 7: return heptagon;
        case 8: return octagon;
        default: return none;
    }
}

namespace {

CatalogEntry make_entry(const FlipGraph& assoc, const ColoringClass& cls,
                        const std::string& label, const CatalogOptions& options) {
    CatalogEntry entry;
    entry.n = assoc.n;
    entry.label = label;
    entry.class_id = std::to_string(assoc.n) + "-" + label;
    entry.coloring = cls.representative.to_text();
    entry.partition = cls.partition;
    entry.colors_used = cls.colors_used();
    entry.orbit_size = cls.orbit_size;

    entry.graph_data = color_graph_from_associahedron(assoc, cls.representative);
    const Graph& graph = entry.graph_data->graph;
    GraphStats stats = graph_stats(graph);
    entry.classification = to_string(stats.classification);
    entry.order = stats.order;
    entry.size = stats.size;
    entry.max_degree = stats.max_degree;
    entry.diameter = stats.diameter;
    entry.bipartite = stats.bipartite;
    entry.connected_or_edgeless = is_connected_or_edgeless(graph);
    entry.vine = is_vine_class(cls.representative);

    Klein forbidden = best_forbidden_color(cls.representative);
    HypercubeEmbedding emb = hypercube_embed(*entry.graph_data, forbidden);
    entry.hypercube.forbidden = forbidden;
    entry.hypercube.dimension = emb.dimension();
    entry.hypercube.bound = entry.n >= 4 ? dimension_bound(entry.n) : 0;
    entry.hypercube.within_bound = entry.hypercube.dimension <= entry.hypercube.bound;
    if (!emb.assignment.empty()) {
        int lo = 64, hi = 0;
        for (std::uint64_t bits : emb.assignment) {
            int size = std::popcount(bits);
            lo = std::min(lo, size);
            hi = std::max(hi, size);
        }
        entry.hypercube.min_subset = lo;
        entry.hypercube.max_subset = hi;
    }

    if (stats.order >= 1 && is_connected(graph)) {
        PartialCubeReport report = partial_cube_check(graph);
        if (report.is_partial_cube) {
            entry.partial_cube.status = "partial_cube";
            entry.partial_cube.dimension = report.isometric_dimension;
        } else {
            entry.partial_cube.status = "not_partial_cube";
            if (report.witness)
                entry.partial_cube.witness = to_string(*report.witness);
            else
                entry.partial_cube.witness = report.failure_note;
            if (auto ring = find_diamond_ring(graph)) {
                entry.partial_cube.diamond_ring = to_string(*ring);
                // The metric ring is itself a DR subgraph, so the scan below
                // terminates at its length or earlier.
                for (int j = 2; j <= ring->length(); j += 2) {
                    if (contains_subgraph(graph, make_diamond_ring(j))) {
                        entry.partial_cube.diamond_ring_bare_j = j;
                        break;
                    }
                }
            } else {
                entry.partial_cube.diamond_ring = "none";
            }
        }
    } else {
        entry.partial_cube.status = "undefined";
    }

    int lattice_dim = std::max(1, (entry.n - 2) / 2);
    LatticeSearchResult lattice =
        smallest_box_embedding(graph, lattice_dim, options.lattice_budget);
    entry.lattice.status = to_string(lattice.status);
    entry.lattice.dim = lattice_dim;
    entry.lattice.minimal_confirmed = lattice.minimal_confirmed;
    if (lattice.embedding) {
        entry.lattice.box = lattice.embedding->box;
        std::sort(entry.lattice.box.rbegin(), entry.lattice.box.rend());
    }
    return entry;
}

}  // namespace

CatalogEntry build_entry_for_coloring(const PolygonColoring& c, const std::string& label,
                                      const CatalogOptions& options) {
    FlipGraph assoc = build_associahedron(c.polygon_size(), options.cap);
    PolygonColoring canonical = canonicalize_coloring(c);
    ColoringClass cls{canonical, 0, {}};
    // Recover orbit size and partition the same way the enumeration does.
    std::array<int, 4> mult{0, 0, 0, 0};
    for (Klein v : canonical.colors()) mult[v]++;
    for (int m : mult)
        if (m > 0) cls.partition.push_back(m);
    std::sort(cls.partition.rbegin(), cls.partition.rend());
    for (const ColoringClass& known : enumerate_coloring_classes(c.polygon_size())) {
        if (known.representative == canonical) {
            cls.orbit_size = known.orbit_size;
            break;
        }
    }
    return make_entry(assoc, cls, label, options);
}

Catalog build_catalog(int n, const CatalogOptions& options) {
    if (n < 4) throw InputError("catalog needs polygon size at least 4");
    if (n > options.cap)
        throw ResourceError("polygon size " + std::to_string(n) + " exceeds enumeration cap " +
                            std::to_string(options.cap));
    FlipGraph assoc = build_associahedron(n, options.cap);
    std::vector<ColoringClass> classes = enumerate_coloring_classes(n);

    Catalog catalog;
    catalog.n = n;
    catalog.total_classes = static_cast<int>(classes.size());

    // Classify first; the reference labels cover exactly the nonrigid classes.
    std::vector<GraphClass> kinds;
    std::vector<ColorGraph> graphs;
    kinds.reserve(classes.size());
    for (const ColoringClass& cls : classes) {
        graphs.push_back(color_graph_from_associahedron(assoc, cls.representative));
        GraphStats stats = graph_stats(graphs.back().graph);
        kinds.push_back(stats.classification);
        if (stats.classification == GraphClass::Nonrigid)
            catalog.nonrigid++;
        else if (stats.classification == GraphClass::Rigid)
            catalog.rigid++;
        else
            catalog.empty++;
        if (cls.colors_used() == 4 && stats.classification != GraphClass::Nonrigid)
            catalog.four_color_classes_all_nonrigid = false;
        if (stats.classification == GraphClass::Nonrigid && cls.colors_used() < 4)
            catalog.nonrigid_classes_all_use_four_colors = false;
    }

    const auto& labels = reference_labels(n);
    std::map<std::string, std::string> label_by_coloring;  // canonical text -> label
    for (const auto& [label, coloring] : labels) {
        PolygonColoring canonical = canonicalize_coloring(PolygonColoring::parse(coloring));
        auto [it, inserted] = label_by_coloring.emplace(canonical.to_text(), label);
        if (!inserted) throw VerificationError("reference labels are not pairwise distinct");
    }

    std::vector<CatalogEntry> nonrigid_entries;
    std::vector<CatalogEntry> other_entries;
    int ordinal = 0, rigid_ordinal = 0;
    for (std::size_t i = 0; i < classes.size(); ++i) {
        bool nonrigid = kinds[i] == GraphClass::Nonrigid;
        if (!nonrigid && !options.include_rigid) continue;
        std::string label;
        if (nonrigid) {
            if (!labels.empty()) {
                auto it = label_by_coloring.find(classes[i].representative.to_text());
                if (it == label_by_coloring.end())
                    throw VerificationError("nonrigid class " +
                                            classes[i].representative.to_text() +
                                            " has no reference label");
                label = it->second;
            } else {
                label = std::to_string(++ordinal);
            }
        } else {
            label = "r" + std::to_string(++rigid_ordinal);
        }
        (nonrigid ? nonrigid_entries : other_entries)
            .push_back(make_entry(assoc, classes[i], label, options));
    }
    if (!labels.empty() && options.include_rigid == false &&
        nonrigid_entries.size() != labels.size())
        throw VerificationError("nonrigid class count does not match the reference labels");

    // Nonrigid entries in label order, then the rigid/empty ones.
    std::sort(nonrigid_entries.begin(), nonrigid_entries.end(),
              [&](const CatalogEntry& a, const CatalogEntry& b) {
                  if (a.label.size() != b.label.size()) return a.label.size() < b.label.size();
                  return a.label < b.label;
              });

    // Isomorphism groups among the nonrigid entries; the group id is the
    // smallest member label.
    for (std::size_t i = 0; i < nonrigid_entries.size(); ++i) {
        CatalogEntry& entry = nonrigid_entries[i];
        if (!entry.iso_group.empty()) continue;
        entry.iso_group = entry.label;
        for (std::size_t j = i + 1; j < nonrigid_entries.size(); ++j) {
            CatalogEntry& other = nonrigid_entries[j];
            if (!other.iso_group.empty()) continue;
            if (entry.order != other.order || entry.size != other.size) continue;
            if (graphs_isomorphic(entry.graph_data->graph, other.graph_data->graph))
                other.iso_group = entry.label;
        }
    }
    for (CatalogEntry& entry : other_entries) entry.iso_group = entry.label;

    catalog.entries = std::move(nonrigid_entries);
    for (CatalogEntry& entry : other_entries) catalog.entries.push_back(std::move(entry));
    return catalog;
}

namespace {

ordered_json entry_json(const CatalogEntry& e) {
    ordered_json j;
    j["class_id"] = e.class_id;
    j["label"] = e.label;
    j["n"] = e.n;
    j["coloring"] = e.coloring;
    j["partition"] = e.partition;
    j["colors_used"] = e.colors_used;
    j["orbit_size"] = e.orbit_size;
    j["classification"] = e.classification;
    j["order"] = e.order;
    j["size"] = e.size;
    j["max_degree"] = e.max_degree;
    if (e.diameter.kind == DiameterValue::Kind::Finite)
        j["diameter"] = e.diameter.value;
    else
        j["diameter"] = to_string(e.diameter);
    j["bipartite"] = e.bipartite;
    j["connected_or_edgeless"] = e.connected_or_edgeless;
    if (e.vine)
        j["vine"] = {{"p", e.vine->first}, {"q", e.vine->second}};
    else
        j["vine"] = nullptr;
    j["hypercube"] = {{"forbidden", e.hypercube.forbidden},
                      {"dimension", e.hypercube.dimension},
                      {"bound", e.hypercube.bound},
                      {"within_bound", e.hypercube.within_bound},
                      {"min_subset", e.hypercube.min_subset},
                      {"max_subset", e.hypercube.max_subset}};
    ordered_json pc;
    pc["status"] = e.partial_cube.status;
    if (e.partial_cube.status == "partial_cube") pc["dimension"] = e.partial_cube.dimension;
    if (!e.partial_cube.witness.empty()) pc["witness"] = e.partial_cube.witness;
    if (!e.partial_cube.diamond_ring.empty()) pc["diamond_ring"] = e.partial_cube.diamond_ring;
    if (e.partial_cube.diamond_ring_bare_j > 0)
        pc["diamond_ring_bare_j"] = e.partial_cube.diamond_ring_bare_j;
    j["partial_cube"] = pc;
    ordered_json lat;
    lat["status"] = e.lattice.status;
    lat["dim"] = e.lattice.dim;
    if (e.lattice.status == "found") {
        lat["box"] = e.lattice.box;
        lat["minimal_confirmed"] = e.lattice.minimal_confirmed;
    }
    j["lattice"] = lat;
    j["iso_group"] = e.iso_group;
    return j;
}

}  // namespace

std::string catalog_json(const Catalog& catalog) {
    ordered_json j;
    j["n"] = catalog.n;
    j["total_classes"] = catalog.total_classes;
    j["nonrigid"] = catalog.nonrigid;
    j["rigid"] = catalog.rigid;
    j["empty"] = catalog.empty;
    j["four_color_classes_all_nonrigid"] = catalog.four_color_classes_all_nonrigid;
    j["nonrigid_classes_all_use_four_colors"] = catalog.nonrigid_classes_all_use_four_colors;
    j["entries"] = ordered_json::array();
    for (const CatalogEntry& entry : catalog.entries) j["entries"].push_back(entry_json(entry));
    return j.dump(2) + "\n";
}

std::string catalog_csv(const Catalog& catalog) {
    std::string out =
        "class_id,coloring,partition,colors_used,orbit_size,classification,order,size,"
        "max_degree,diameter,bipartite,connected_or_edgeless,vine,hc_forbidden,hc_dimension,"
        "hc_bound,hc_within_bound,pc_status,pc_dimension,lattice_status,lattice_dim,"
        "lattice_box,iso_group\n";
    for (const CatalogEntry& e : catalog.entries) {
        std::string vine = e.vine ? std::to_string(e.vine->first) + ";" +
                                        std::to_string(e.vine->second)
                                  : "";
        std::string box;
        for (std::size_t i = 0; i < e.lattice.box.size(); ++i)
            box += (i ? ";" : "") + std::to_string(e.lattice.box[i]);
        std::string partition;
        for (std::size_t i = 0; i < e.partition.size(); ++i)
            partition += (i ? ";" : "") + std::to_string(e.partition[i]);
        out += e.class_id + ",\"" + e.coloring + "\"," + partition + "," +
               std::to_string(e.colors_used) + "," + std::to_string(e.orbit_size) + "," +
               e.classification + "," + std::to_string(e.order) + "," + std::to_string(e.size) +
               "," + std::to_string(e.max_degree) + "," + to_string(e.diameter) + "," +
               (e.bipartite ? "true" : "false") + "," +
               (e.connected_or_edgeless ? "true" : "false") + "," + vine + "," +
               std::to_string(e.hypercube.forbidden) + "," +
               std::to_string(e.hypercube.dimension) + "," + std::to_string(e.hypercube.bound) +
               "," + (e.hypercube.within_bound ? "true" : "false") + "," +
               e.partial_cube.status + "," +
               (e.partial_cube.status == "partial_cube"
                    ? std::to_string(e.partial_cube.dimension)
                    : "") +
               "," + e.lattice.status + "," + std::to_string(e.lattice.dim) + "," + box + "," +
               e.iso_group + "\n";
    }
    return out;
}

std::string entry_dot(const CatalogEntry& entry) {
    if (!entry.graph_data) throw VerificationError("catalog entry is missing its graph");
    std::vector<std::string> labels;
    labels.reserve(entry.graph_data->vertices.size());
    for (const Triangulation& t : entry.graph_data->vertices) labels.push_back(to_string(t));
    return write_dot(entry.graph_data->graph, entry.class_id, labels);
}

}  // namespace colorgraph
