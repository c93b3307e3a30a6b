#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "colorgraph/colorgraph.hpp"
#include "colorgraph/hypercube.hpp"
#include "colorgraph/lattice.hpp"
#include "colorgraph/partial_cube.hpp"

namespace colorgraph {

// Reference labels pinning the class order of the catalogs for n = 6, 7, 8
// ("1".."5", "1".."7", "A".."Z"); empty for other n.
const std::vector<std::pair<std::string, std::string>>& reference_labels(int n);

struct HypercubeRecord {
    int forbidden = 0;
    int dimension = 0;  // number of allowed diagonals
    int bound = 0;      // floor(n(3n-8)/16)
    bool within_bound = true;
    int min_subset = 0;  // smallest image subset size
    int max_subset = 0;
};

struct PartialCubeRecord {
    std::string status;  // "partial_cube", "not_partial_cube", "undefined"
    int dimension = 0;   // isometric dimension when positive
    std::string witness;
    std::string diamond_ring;
    // Smallest j with a bare DR_j subgraph (no metric conditions); informational.
    int diamond_ring_bare_j = 0;
};

struct LatticeRecord {
    std::string status;  // "found", "none", "unknown"
    int dim = 0;
    std::vector<int> box;
    bool minimal_confirmed = true;
};

struct CatalogEntry {
    int n = 0;
    std::string class_id;  // e.g. "8-A"
    std::string label;     // e.g. "A"
    std::string coloring;  // representative, text form
    std::vector<int> partition;
    int colors_used = 0;
    long orbit_size = 0;
    std::string classification;
    int order = 0;
    int size = 0;
    int max_degree = 0;
    DiameterValue diameter;
    bool bipartite = true;
    bool connected_or_edgeless = true;
    std::optional<std::pair<int, int>> vine;
    HypercubeRecord hypercube;
    PartialCubeRecord partial_cube;
    LatticeRecord lattice;
    std::string iso_group;  // smallest label among isomorphic classmates

    // Kept for DOT output and tests; not serialized.
    std::optional<ColorGraph> graph_data;
};

struct CatalogOptions {
    bool include_rigid = false;
    int cap = kDefaultPolygonCap;
    std::chrono::milliseconds lattice_budget = kDefaultLatticeBudget;
};

struct Catalog {
    int n = 0;
    std::vector<CatalogEntry> entries;
    int total_classes = 0;
    int nonrigid = 0;
    int rigid = 0;
    int empty = 0;
    // Reports for the class lists: whether every class using all four colors
    // is nonrigid, and conversely whether every nonrigid class uses all four.
    bool four_color_classes_all_nonrigid = true;
    bool nonrigid_classes_all_use_four_colors = true;
};

Catalog build_catalog(int n, const CatalogOptions& options = {});

// Entry recomputed from a representative coloring alone (used by the
// round-trip checks and the `graph`/`embed`/`check` commands).
CatalogEntry build_entry_for_coloring(const PolygonColoring& c, const std::string& label,
                                      const CatalogOptions& options = {});

std::string catalog_json(const Catalog& catalog);
std::string catalog_csv(const Catalog& catalog);
std::string entry_dot(const CatalogEntry& entry);

}  // namespace colorgraph
