#include "colorgraph/verify.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "colorgraph/isomorphism.hpp"
#include "colorgraph/vine.hpp"

namespace colorgraph {

const AppendixFacts& appendix_facts(int n) {
    static const AppendixFacts hexagon = {
        6,
        5,
        {
            {"1", "2,0,1,0,3,0", {3, 1, 1, 1}, std::nullopt, 4, 3, 2},
            {"2", "1,0,1,0,3,2", {2, 2, 1, 1}, std::make_pair(1, 3), 4, 3, 3},
            {"3", "2,0,1,0,2,3", {2, 2, 1, 1}, std::make_pair(2, 2), 6, 6, 4},
            {"4", "2,0,1,0,3,1", {2, 2, 1, 1}, std::nullopt, 5, 4, 4},
            {"5", "2,0,1,3,0,1", {2, 2, 1, 1}, std::nullopt, 6, 6, 4},
        },
        {{"3", "5"}},
        {},
        {},
        {},
        {},
        -1,
        {{2, 2}, {3, 1}},
    };
    static const AppendixFacts heptagon = {
        7,
        7,
        {
            {"1", "0,1,0,2,3,0,1", {3, 2, 1, 1}, std::make_pair(1, 4), 5, 4, 4},
            {"2", "0,1,0,3,1,0,2", {3, 2, 1, 1}, std::nullopt, 9, 10, 4},
            {"3", "0,1,0,1,3,0,2", {3, 2, 1, 1}, std::nullopt, 6, 5, 4},
            {"4", "0,1,0,2,3,2,1", {2, 2, 2, 1}, std::make_pair(2, 3), 10, 12, 6},
            {"5", "0,1,0,3,2,1,2", {2, 2, 2, 1}, std::nullopt, 9, 8, 8},
            {"6", "0,1,0,2,3,1,2", {2, 2, 2, 1}, std::nullopt, 12, 14, 8},
            {"7", "0,1,2,0,3,1,2", {2, 2, 2, 1}, std::nullopt, 12, 14, 8},
        },
        {},
        {},
        {},
        {},
        {"5", "6", "7"},
        6,
        {{3, 3}, {4, 2}},
    };
    static const AppendixFacts octagon = {
        8,
        26,
        {
            {"A", "0,1,0,3,0,1,0,2", {4, 2, 1, 1}, std::nullopt, 13, 16, -1},
            {"B", "0,1,0,2,0,3,0,1", {4, 2, 1, 1}, std::nullopt, 7, 6, -1},
            {"C", "0,1,0,1,3,2,0,1", {3, 3, 1, 1}, std::make_pair(1, 5), 6, 5, 5},
            {"D", "0,1,0,2,1,3,0,1", {3, 3, 1, 1}, std::nullopt, 8, 7, -1},
            {"E", "0,1,0,2,3,2,0,2", {3, 3, 1, 1}, std::nullopt, 12, 14, -1},
            {"F", "0,1,2,0,3,2,0,2", {3, 3, 1, 1}, std::nullopt, 12, 14, -1},
            {"G", "0,1,2,0,2,3,0,2", {3, 3, 1, 1}, std::nullopt, 14, -1, -1},
            {"H", "0,1,0,2,3,2,0,1", {3, 2, 2, 1}, std::make_pair(2, 4), 15, 20, 8},
            {"I", "0,1,0,2,1,3,0,2", {3, 2, 2, 1}, std::nullopt, -1, -1, 10},
            {"J", "0,1,0,2,3,1,0,2", {3, 2, 2, 1}, std::nullopt, -1, -1, -1},
            {"K", "0,1,0,1,2,3,0,2", {3, 2, 2, 1}, std::nullopt, -1, -1, -1},
            {"L", "0,1,0,3,2,3,0,2", {3, 2, 2, 1}, std::nullopt, -1, -1, -1},
            {"M", "0,1,0,1,3,2,0,2", {3, 2, 2, 1}, std::nullopt, 10, 9, -1},
            {"N", "0,1,2,0,2,3,0,1", {3, 2, 2, 1}, std::nullopt, 12, 11, 10},
            {"O", "0,1,2,0,3,2,0,1", {3, 2, 2, 1}, std::nullopt, 18, -1, -1},
            {"P", "0,1,2,0,3,1,0,2", {3, 2, 2, 1}, std::nullopt, -1, -1, 10},
            {"Q", "0,1,3,0,3,1,0,2", {3, 2, 2, 1}, std::nullopt, 21, -1, -1},
            {"R", "0,1,2,0,1,3,0,2", {3, 2, 2, 1}, std::nullopt, -1, -1, 10},
            {"S", "0,1,3,0,1,3,0,2", {3, 2, 2, 1}, std::nullopt, -1, -1, -1},
            {"T", "0,1,2,3,2,3,0,1", {2, 2, 2, 2}, std::make_pair(3, 3), 20, 30, 9},
            {"U", "0,1,2,3,1,3,0,2", {2, 2, 2, 2}, std::nullopt, -1, -1, -1},
            {"V", "0,1,3,2,3,1,0,2", {2, 2, 2, 2}, std::nullopt, -1, -1, -1},
            {"W", "0,1,3,2,1,3,0,2", {2, 2, 2, 2}, std::nullopt, -1, -1, -1},
            {"X", "0,1,3,0,2,3,1,2", {2, 2, 2, 2}, std::nullopt, -1, -1, -1},
            {"Y", "0,1,3,2,0,3,1,2", {2, 2, 2, 2}, std::nullopt, -1, -1, -1},
            {"Z", "0,1,3,2,0,1,3,2", {2, 2, 2, 2}, std::nullopt, -1, -1, -1},
        },
        {{"E", "F"}},
        {{"T", "U"}, {"U", "X"}, {"H", "O"}, {"H", "Q"}, {"H", "V"}, {"H", "W"}, {"H", "Y"}},
        {{"P", "S"}, {"S", "P"}},
        {"U", "V", "W", "X", "Y", "Z"},
        {"I", "N", "P", "R"},
        9,
        {{3, 3, 2}},
    };
    static const AppendixFacts none;
    switch (n) {
        case 6: return hexagon;
        case 7: return heptagon;
        case 8: return octagon;
        default: return none;
    }
}

namespace {

long long catalan(int k) {
    // Independent oracle: C_0 = 1, C_{k+1} = sum C_i C_{k-i}.
    static std::vector<long long> table{1};
    while (static_cast<int>(table.size()) <= k) {
        int m = static_cast<int>(table.size());
        long long next = 0;
        for (int i = 0; i < m; ++i) next += table[i] * table[m - 1 - i];
        table.push_back(next);
    }
    return table[k];
}

std::vector<Klein> apply_symmetry(const std::vector<Klein>& c, int rotation, bool reflect,
                                  const std::array<Klein, 4>& sigma) {
    int n = static_cast<int>(c.size());
    std::vector<Klein> out(n);
    for (int i = 0; i < n; ++i) {
        int src = reflect ? ((rotation - i) % n + n) % n : (i + rotation) % n;
        out[i] = sigma[c[src]];
    }
    return out;
}

struct Context {
    int lo;
    int hi;
    VerifyOptions options;
    std::map<int, FlipGraph> assoc_;
    std::map<int, std::vector<ColoringClass>> classes_;
    std::map<int, std::vector<ColorGraph>> graphs_;
    std::map<int, Catalog> catalogs_;

    const FlipGraph& assoc(int n) {
        auto it = assoc_.find(n);
        if (it == assoc_.end()) it = assoc_.emplace(n, build_associahedron(n, options.cap)).first;
        return it->second;
    }
    const std::vector<ColoringClass>& classes(int n) {
        auto it = classes_.find(n);
        if (it == classes_.end()) it = classes_.emplace(n, enumerate_coloring_classes(n)).first;
        return it->second;
    }
    const std::vector<ColorGraph>& graphs(int n) {
        auto it = graphs_.find(n);
        if (it == graphs_.end()) {
            std::vector<ColorGraph> out;
            for (const ColoringClass& cls : classes(n))
                out.push_back(color_graph_from_associahedron(assoc(n), cls.representative));
            it = graphs_.emplace(n, std::move(out)).first;
        }
        return it->second;
    }
    const Catalog& catalog(int n) {
        auto it = catalogs_.find(n);
        if (it == catalogs_.end()) {
            CatalogOptions copts;
            copts.cap = options.cap;
            copts.lattice_budget = options.lattice_budget;
            it = catalogs_.emplace(n, build_catalog(n, copts)).first;
        }
        return it->second;
    }

    int lo_clamped(int floor_n) const { return std::max(lo, floor_n); }
    int hi_clamped(int ceil_n) const { return std::min(hi, ceil_n); }
};

std::string suite_triangulation_count(Context& ctx) {
    for (int n = ctx.lo; n <= ctx.hi; ++n) {
        long long expected = catalan(n - 2);
        long long actual = static_cast<long long>(ctx.assoc(n).vertices.size());
        if (actual != expected)
            return "n=" + std::to_string(n) + ": " + std::to_string(actual) +
                   " triangulations, Catalan oracle says " + std::to_string(expected);
    }
    return "";
}

std::string suite_flip_involution(Context& ctx) {
    for (int n = std::max(ctx.lo, 4); n <= ctx.hi; ++n) {
        for (const Triangulation& t : ctx.assoc(n).vertices) {
            for (const Diagonal& d : t.diagonals()) {
                Triangulation t2 = flip(t, d);
                std::vector<Diagonal> difference;
                std::set_symmetric_difference(t.diagonals().begin(), t.diagonals().end(),
                                              t2.diagonals().begin(), t2.diagonals().end(),
                                              std::back_inserter(difference));
                if (difference.size() != 2)
                    return "n=" + std::to_string(n) + ": flip of " + to_string(d) + " in " +
                           to_string(t) + " changes " + std::to_string(difference.size() / 2) +
                           " diagonals";
                Diagonal fresh = difference[0] == d ? difference[1] : difference[0];
                if (!(flip(t2, fresh) == t))
                    return "n=" + std::to_string(n) + ": flip is not an involution at " +
                           to_string(t);
            }
        }
    }
    return "";
}

std::string suite_tree_duality(Context& ctx) {
    for (int n = ctx.lo; n <= ctx.hi; ++n) {
        for (const Triangulation& t : ctx.assoc(n).vertices) {
            BinaryTree tree = tree_from_triangulation(t);
            if (tree.leaf_count() != n - 1)
                return "n=" + std::to_string(n) + ": dual tree has " +
                       std::to_string(tree.leaf_count()) + " leaves";
            if (!(triangulation_from_tree(tree) == t))
                return "n=" + std::to_string(n) + ": tree round-trip failed at " + to_string(t);
            auto chords = internal_chords(tree);
            for (const Diagonal& d : t.diagonals()) {
                auto other = internal_chords(tree_from_triangulation(flip(t, d)));
                std::vector<std::pair<int, int>> difference;
                std::set_symmetric_difference(chords.begin(), chords.end(), other.begin(),
                                              other.end(), std::back_inserter(difference));
                if (difference.size() != 2)
                    return "n=" + std::to_string(n) + ": flip at " + to_string(d) +
                           " is not a single rotation of the dual tree";
            }
        }
    }
    return "";
}

std::string suite_associahedron_regular(Context& ctx) {
    for (int n = std::max(ctx.lo, 4); n <= ctx.hi; ++n) {
        const FlipGraph& assoc = ctx.assoc(n);
        Graph g = Graph::from_edges(static_cast<int>(assoc.vertices.size()), assoc.edges);
        if (!is_connected(g)) return "n=" + std::to_string(n) + ": associahedron disconnected";
        for (int v = 0; v < g.order; ++v)
            if (g.degree(v) != n - 3)
                return "n=" + std::to_string(n) + ": vertex " + std::to_string(v) + " has degree " +
                       std::to_string(g.degree(v));
    }
    return "";
}

std::string suite_coloring_class_count(Context& ctx) {
    for (int n = ctx.lo; n <= ctx.hi; ++n) {
        long long total = 0;
        for (const ColoringClass& cls : ctx.classes(n)) total += cls.orbit_size;
        if (total != proper_coloring_count(n))
            return "n=" + std::to_string(n) + ": orbit sizes sum to " + std::to_string(total) +
                   ", chromatic oracle says " + std::to_string(proper_coloring_count(n));
    }
    return "";
}

std::string suite_canonical_invariance(Context& ctx) {
    std::array<Klein, 4> sigma{0, 1, 2, 3};
    std::vector<std::array<Klein, 4>> perms;
    do perms.push_back(sigma);
    while (std::next_permutation(sigma.begin(), sigma.end()));
    for (int n = ctx.lo; n <= std::min(ctx.hi, 8); ++n) {
        for (const ColoringClass& cls : ctx.classes(n)) {
            const auto& rep = cls.representative;
            if (!(canonicalize_coloring(rep) == rep))
                return "n=" + std::to_string(n) + ": representative " + rep.to_text() +
                       " is not canonical";
            for (int r = 0; r < n; ++r)
                for (bool refl : {false, true})
                    for (const auto& perm : perms) {
                        PolygonColoring moved{apply_symmetry(rep.colors(), r, refl, perm)};
                        if (!(canonicalize_coloring(moved) == rep))
                            return "n=" + std::to_string(n) + ": canonical form of " +
                                   moved.to_text() + " differs from " + rep.to_text();
                    }
        }
    }
    return "";
}

std::string suite_vine_constancy(Context& ctx) {
    for (int n = ctx.lo; n <= ctx.hi; ++n) {
        for (const ColoringClass& cls : ctx.classes(n)) {
            auto expected = is_vine_class(cls.representative);
            std::array<Klein, 4> identity{0, 1, 2, 3};
            for (int r = 0; r < n; ++r)
                for (bool refl : {false, true}) {
                    PolygonColoring moved{
                        apply_symmetry(cls.representative.colors(), r, refl, identity)};
                    if (is_vine_class(moved) != expected)
                        return "n=" + std::to_string(n) + ": vine detection differs on " +
                               moved.to_text() + " vs " + cls.representative.to_text();
                }
        }
    }
    return "";
}

std::string suite_compatibility_validity(Context& ctx) {
    for (int n = ctx.lo; n <= ctx.hi_clamped(8); ++n) {
        for (const ColoringClass& cls : ctx.classes(n)) {
            ColorVector vec = color_vector(cls.representative);
            for (const Triangulation& t : ctx.assoc(n).vertices) {
                bool compatible = is_compatible(cls.representative, t);
                bool valid = is_valid(vec, tree_from_triangulation(t));
                if (compatible != valid)
                    return "n=" + std::to_string(n) + ": compatibility and validity disagree for " +
                           cls.representative.to_text() + " on " + to_string(t);
            }
        }
    }
    return "";
}

std::string suite_color_vector_sum(Context& ctx) {
    for (int n = ctx.lo; n <= ctx.hi; ++n) {
        for (const ColoringClass& cls : ctx.classes(n)) {
            Klein sum = 0;
            for (Klein e : color_vector(cls.representative)) sum = klein_add(sum, e);
            Klein expected =
                klein_add(cls.representative.color(0), cls.representative.color(n - 1));
            if (sum != expected || sum == 0)
                return "n=" + std::to_string(n) + ": color vector sum " +
                       std::to_string(int(sum)) + " wrong for " + cls.representative.to_text();
        }
    }
    return "";
}

std::string suite_bipartite(Context& ctx) {
    for (int n = ctx.lo; n <= ctx.hi; ++n)
        for (std::size_t i = 0; i < ctx.graphs(n).size(); ++i)
            if (!is_bipartite(ctx.graphs(n)[i].graph))
                return "n=" + std::to_string(n) + ": color graph of " +
                       ctx.classes(n)[i].representative.to_text() + " is not bipartite";
    return "";
}

std::string suite_max_degree(Context& ctx) {
    for (int n = ctx.lo; n <= ctx.hi; ++n)
        for (std::size_t i = 0; i < ctx.graphs(n).size(); ++i)
            if (ctx.graphs(n)[i].graph.max_degree() > n - 3)
                return "n=" + std::to_string(n) + ": color graph of " +
                       ctx.classes(n)[i].representative.to_text() + " has degree above n-3";
    return "";
}

std::string suite_connected_or_edgeless(Context& ctx) {
    for (int n = ctx.lo; n <= ctx.hi; ++n)
        for (std::size_t i = 0; i < ctx.graphs(n).size(); ++i)
            if (!is_connected_or_edgeless(ctx.graphs(n)[i].graph))
                return "n=" + std::to_string(n) + ": color graph of " +
                       ctx.classes(n)[i].representative.to_text() +
                       " is disconnected with edges";
    return "";
}

std::string suite_vine_diameter(Context& ctx) {
    for (int n = ctx.lo; n <= ctx.hi; ++n) {
        for (std::size_t i = 0; i < ctx.graphs(n).size(); ++i) {
            auto vine = is_vine_class(ctx.classes(n)[i].representative);
            if (!vine) continue;
            const Graph& g = ctx.graphs(n)[i].graph;
            auto [p, q] = *vine;
            if (g.order != binomial(p + q, p))
                return "n=" + std::to_string(n) + ": vine (" + std::to_string(p) + "," +
                       std::to_string(q) + ") has order " + std::to_string(g.order) +
                       ", expected binomial " + std::to_string(binomial(p + q, p));
            if (p >= 1) {
                GraphStats stats = graph_stats(g);
                if (stats.diameter != DiameterValue::finite(p * q))
                    return "n=" + std::to_string(n) + ": vine (" + std::to_string(p) + "," +
                           std::to_string(q) + ") has diameter " + to_string(stats.diameter) +
                           ", expected " + std::to_string(p * q);
            }
        }
    }
    return "";
}

std::string suite_hypercube_embedding(Context& ctx) {
    for (int n = ctx.lo; n <= ctx.hi_clamped(8); ++n) {
        for (std::size_t i = 0; i < ctx.graphs(n).size(); ++i) {
            for (Klein forbidden = 0; forbidden < 4; ++forbidden) {
                try {
                    hypercube_embed(ctx.graphs(n)[i], forbidden);
                } catch (const VerificationError& e) {
                    return "n=" + std::to_string(n) + ", coloring " +
                           ctx.classes(n)[i].representative.to_text() + ", forbidden " +
                           std::to_string(int(forbidden)) + ": " + e.what();
                }
            }
        }
    }
    return "";
}

std::string suite_count_formula(Context& ctx) {
    for (int n = ctx.lo; n <= ctx.hi; ++n) {
        for (const ColoringClass& cls : ctx.classes(n)) {
            std::array<int, 4> mult = color_multiplicities(cls.representative);
            for (Klein forbidden = 0; forbidden < 4; ++forbidden) {
                std::array<int, 4> rest;
                int w = mult[forbidden];
                int k = 0;
                for (int v = 0; v < 4; ++v)
                    if (v != forbidden) rest[k++] = mult[v];
                long long expected = count_formula(n, w, rest[0], rest[1], rest[2]);
                long long actual = static_cast<long long>(
                    allowed_diagonals(cls.representative, forbidden).size());
                if (actual != expected)
                    return "n=" + std::to_string(n) + ": allowed diagonals " +
                           std::to_string(actual) + " vs formula " + std::to_string(expected) +
                           " for " + cls.representative.to_text();
            }
        }
    }
    for (int n = 3; n <= 64; ++n)
        for (int w = 0; w <= n - 3; ++w)
            for (int x = 1; x <= n - w - 2; ++x)
                for (int y = 1; y <= n - w - x - 1; ++y) {
                    int z = n - w - x - y;
                    if (z < 1) continue;
                    if (count_formula(n, w, x, y, z) != count_formula_simplified(n, w, x, y, z))
                        return "closed forms disagree at n=" + std::to_string(n) + " (w,x,y,z)=(" +
                               std::to_string(w) + "," + std::to_string(x) + "," +
                               std::to_string(y) + "," + std::to_string(z) + ")";
                }
    return "";
}

std::string suite_dimension_bound(Context& ctx) {
    for (int n = ctx.lo_clamped(4); n <= ctx.hi; ++n) {
        for (const ColoringClass& cls : ctx.classes(n)) {
            Klein best = best_forbidden_color(cls.representative);
            int used = static_cast<int>(allowed_diagonals(cls.representative, best).size());
            if (used > dimension_bound(n))
                return "n=" + std::to_string(n) + ": dimension " + std::to_string(used) +
                       " exceeds bound " + std::to_string(dimension_bound(n)) + " for " +
                       cls.representative.to_text();
            std::array<int, 4> mult = color_multiplicities(cls.representative);
            if (mult[best] * 4 < n)
                return "n=" + std::to_string(n) + ": best color multiplicity below n/4 for " +
                       cls.representative.to_text();
        }
    }
    return "";
}

std::string suite_region_bounds(Context& ctx) {
    for (int n = ctx.lo; n <= ctx.hi_clamped(8); ++n) {
        for (std::size_t i = 0; i < ctx.graphs(n).size(); ++i) {
            const ColoringClass& cls = ctx.classes(n)[i];
            Klein best = best_forbidden_color(cls.representative);
            int w = color_multiplicities(cls.representative)[best];
            HypercubeEmbedding emb = hypercube_embed(ctx.graphs(n)[i], best);
            for (std::uint64_t bits : emb.assignment) {
                int size = std::popcount(bits);
                int ceil_quarter = (n + 3) / 4;
                if (size < w - 1 || size > n - 3 || size < ceil_quarter - 1)
                    return "n=" + std::to_string(n) + ": image subset size " +
                           std::to_string(size) + " outside [" + std::to_string(w - 1) + "," +
                           std::to_string(n - 3) + "] for " + cls.representative.to_text();
            }
        }
    }
    return "";
}

std::string suite_vine_isomorphism(Context& ctx) {
    for (int p = 0; p <= 4; ++p) {
        for (int q = p; q <= 4; ++q) {
            int n = p + q + 2;
            if (n != 2 && (n < ctx.lo || n > ctx.hi)) continue;
            if (!verify_vine_isomorphism(p, q, ctx.options.cap))
                return "vine (" + std::to_string(p) + "," + std::to_string(q) +
                       ") is not isomorphic to its lattice simplex";
        }
    }
    return "";
}

std::string suite_diamond_ring_consistency(Context& ctx) {
    for (int n = ctx.lo_clamped(4); n <= ctx.hi_clamped(8); ++n) {
        for (std::size_t i = 0; i < ctx.graphs(n).size(); ++i) {
            const Graph& g = ctx.graphs(n)[i].graph;
            if (g.size() == 0 || !is_connected(g)) continue;
            auto ring = find_diamond_ring(g);
            if (!ring) continue;
            PartialCubeReport report = partial_cube_check(g);
            if (report.is_partial_cube)
                return "n=" + std::to_string(n) + ": diamond ring found in partial cube " +
                       ctx.classes(n)[i].representative.to_text();
        }
    }
    return "";
}

std::string suite_lattice_dimension(Context& ctx) {
    for (int n = ctx.lo_clamped(4); n <= ctx.hi_clamped(8); ++n) {
        int dim = std::max(1, (n - 2) / 2);
        const auto& boxes = appendix_facts(n).allowed_boxes;
        for (std::size_t i = 0; i < ctx.graphs(n).size(); ++i) {
            const Graph& g = ctx.graphs(n)[i].graph;
            bool found = false;
            if (boxes.empty()) {
                found = lattice_embed_search(g, dim, std::nullopt, ctx.options.lattice_budget)
                            .status == SearchStatus::Found;
            } else {
                for (const auto& box : boxes) {
                    if (lattice_embed_search(g, dim, box, ctx.options.lattice_budget).status ==
                        SearchStatus::Found) {
                        found = true;
                        break;
                    }
                }
            }
            if (!found)
                return "n=" + std::to_string(n) + ": no dimension-" + std::to_string(dim) +
                       " lattice embedding for " + ctx.classes(n)[i].representative.to_text();
        }
    }
    return "";
}

std::string check_appendix(Context& ctx, int n, const AppendixFacts& facts) {
    const Catalog& catalog = ctx.catalog(n);
    if (catalog.nonrigid != facts.nonrigid_count)
        return "n=" + std::to_string(n) + ": " + std::to_string(catalog.nonrigid) +
               " nonrigid classes, expected " + std::to_string(facts.nonrigid_count);
    if (!catalog.four_color_classes_all_nonrigid)
        return "n=" + std::to_string(n) + ": some four-color class is rigid or empty";

    std::map<std::string, const CatalogEntry*> by_label;
    for (const CatalogEntry& entry : catalog.entries) by_label[entry.label] = &entry;
    for (const LabelFacts& lf : facts.labels) {
        auto it = by_label.find(lf.label);
        if (it == by_label.end()) return "n=" + std::to_string(n) + ": missing label " + lf.label;
        const CatalogEntry& entry = *it->second;
        PolygonColoring expected = canonicalize_coloring(PolygonColoring::parse(lf.coloring));
        if (expected.to_text() != entry.coloring)
            return "label " + lf.label + ": representative " + entry.coloring + " expected " +
                   expected.to_text();
        if (entry.partition != lf.partition) return "label " + lf.label + ": wrong partition";
        if (entry.vine != lf.vine) return "label " + lf.label + ": wrong vine detection";
        if (lf.order >= 0 && entry.order != lf.order)
            return "label " + lf.label + ": order " + std::to_string(entry.order) + ", expected " +
                   std::to_string(lf.order);
        if (lf.size >= 0 && entry.size != lf.size)
            return "label " + lf.label + ": size " + std::to_string(entry.size) + ", expected " +
                   std::to_string(lf.size);
        if (lf.diameter >= 0 && entry.diameter != DiameterValue::finite(lf.diameter))
            return "label " + lf.label + ": diameter " + to_string(entry.diameter) +
                   ", expected " + std::to_string(lf.diameter);
    }

    // Isomorphism groups: exactly the named ones, everything else singleton.
    std::map<std::string, std::vector<std::string>> groups;
    for (const CatalogEntry& entry : catalog.entries) groups[entry.iso_group].push_back(entry.label);
    std::vector<std::vector<std::string>> nontrivial;
    for (auto& [leader, members] : groups)
        if (members.size() > 1) nontrivial.push_back(members);
    std::vector<std::vector<std::string>> expected_groups = facts.iso_groups;
    std::sort(nontrivial.begin(), nontrivial.end());
    std::sort(expected_groups.begin(), expected_groups.end());
    if (nontrivial != expected_groups) {
        std::string got;
        for (const auto& group : nontrivial) {
            got += "{";
            for (const auto& member : group) got += member;
            got += "}";
        }
        return "n=" + std::to_string(n) + ": isomorphism groups " + got +
               " differ from the expected ones";
    }

    for (const auto& [pattern, host] : facts.subgraph_pairs) {
        if (!contains_subgraph(by_label.at(host)->graph_data->graph,
                               by_label.at(pattern)->graph_data->graph))
            return "expected " + pattern + " to be a subgraph of " + host;
    }
    for (const auto& [pattern, host] : facts.non_subgraph_pairs) {
        if (contains_subgraph(by_label.at(host)->graph_data->graph,
                              by_label.at(pattern)->graph_data->graph))
            return "expected " + pattern + " not to be a subgraph of " + host;
    }

    std::set<std::string> expected_obstructed(facts.not_partial_cube.begin(),
                                              facts.not_partial_cube.end());
    for (const CatalogEntry& entry : catalog.entries) {
        bool expected_bad = expected_obstructed.count(entry.label) > 0;
        if (expected_bad) {
            if (entry.partial_cube.status != "not_partial_cube")
                return "label " + entry.label + ": expected not_partial_cube, got " +
                       entry.partial_cube.status;
            if (entry.partial_cube.witness.empty())
                return "label " + entry.label + ": missing distance witness";
            if (entry.partial_cube.diamond_ring == "none")
                return "label " + entry.label + ": missing diamond ring";
        } else if (entry.partial_cube.status != "partial_cube") {
            return "label " + entry.label + ": expected partial_cube, got " +
                   entry.partial_cube.status;
        }
    }

    if (facts.exceeded_diameter >= 0) {
        std::set<std::string> expected_exceeding(facts.diameter_exceeding.begin(),
                                                 facts.diameter_exceeding.end());
        for (const CatalogEntry& entry : catalog.entries) {
            bool exceeds = entry.diameter.kind == DiameterValue::Kind::Finite &&
                           entry.diameter.value > facts.exceeded_diameter;
            if (exceeds != (expected_exceeding.count(entry.label) > 0))
                return "label " + entry.label + ": diameter " + to_string(entry.diameter) +
                       (exceeds ? " unexpectedly exceeds " : " fails to exceed ") +
                       std::to_string(facts.exceeded_diameter);
        }
    }

    for (const CatalogEntry& entry : catalog.entries) {
        bool fits = false;
        for (const auto& box : facts.allowed_boxes)
            if (lattice_embed_search(entry.graph_data->graph, static_cast<int>(box.size()), box,
                                     ctx.options.lattice_budget)
                    .status == SearchStatus::Found) {
                fits = true;
                break;
            }
        if (!fits)
            return "label " + entry.label + ": fits none of the expected lattice boxes";
    }
    return "";
}

std::string suite_appendix_goldens(Context& ctx) {
    for (int n = ctx.lo_clamped(6); n <= ctx.hi_clamped(8); ++n) {
        AppendixFacts facts = appendix_facts(n);
        if (facts.labels.empty()) continue;
        if (ctx.options.corrupt_fixture) {
            // Negative control: break one pinned fact and expect detection.
            facts.labels.front().order += 1;
        }
        std::string err = check_appendix(ctx, n, facts);
        if (!err.empty()) return err;
    }
    return "";
}

std::string suite_catalog_roundtrip(Context& ctx) {
    int n = std::min(ctx.hi, 8);
    if (n < std::max(ctx.lo, 4)) return "";
    const Catalog& catalog = ctx.catalog(n);
    CatalogOptions copts;
    copts.cap = ctx.options.cap;
    copts.lattice_budget = ctx.options.lattice_budget;
    for (const CatalogEntry& entry : catalog.entries) {
        CatalogEntry rebuilt = build_entry_for_coloring(PolygonColoring::parse(entry.coloring),
                                                        entry.label, copts);
        if (rebuilt.coloring != entry.coloring || rebuilt.partition != entry.partition ||
            rebuilt.orbit_size != entry.orbit_size ||
            rebuilt.classification != entry.classification || rebuilt.order != entry.order ||
            rebuilt.size != entry.size || !(rebuilt.diameter == entry.diameter) ||
            rebuilt.vine != entry.vine ||
            rebuilt.hypercube.dimension != entry.hypercube.dimension ||
            rebuilt.partial_cube.status != entry.partial_cube.status ||
            rebuilt.lattice.box != entry.lattice.box)
            return "n=" + std::to_string(n) + ": entry " + entry.class_id +
                   " not reproducible from its representative";
    }
    return "";
}

}  // namespace

std::vector<SuiteResult> run_verification(int lo, int hi, const VerifyOptions& options) {
    if (lo < 3 || hi < lo) throw InputError("bad polygon range");
    if (hi > options.cap) throw ResourceError("range end exceeds enumeration cap");
    Context ctx{lo, hi, options, {}, {}, {}, {}};

    std::vector<std::pair<std::string, std::function<std::string(Context&)>>> suites = {
        {"triangulation-count", suite_triangulation_count},
        {"flip-involution", suite_flip_involution},
        {"tree-duality", suite_tree_duality},
        {"associahedron-regular", suite_associahedron_regular},
        {"coloring-class-count", suite_coloring_class_count},
        {"canonical-invariance", suite_canonical_invariance},
        {"vine-detection-constancy", suite_vine_constancy},
        {"compatibility-validity-equivalence", suite_compatibility_validity},
        {"color-vector-sum", suite_color_vector_sum},
        {"bipartite", suite_bipartite},
        {"max-degree-bound", suite_max_degree},
        {"connected-or-edgeless", suite_connected_or_edgeless},
        {"vine-diameter-order", suite_vine_diameter},
        {"hypercube-embedding", suite_hypercube_embedding},
        {"allowed-count-formula", suite_count_formula},
        {"dimension-bound", suite_dimension_bound},
        {"region-bounds", suite_region_bounds},
        {"vine-lattice-isomorphism", suite_vine_isomorphism},
        {"diamond-ring-consistency", suite_diamond_ring_consistency},
        {"lattice-dimension", suite_lattice_dimension},
        {"appendix-goldens", suite_appendix_goldens},
        {"catalog-roundtrip", suite_catalog_roundtrip},
    };

    std::vector<SuiteResult> results;
    for (auto& [name, fn] : suites) {
        SuiteResult result;
        result.name = name;
        auto start = std::chrono::steady_clock::now();
        try {
            result.detail = fn(ctx);
            result.passed = result.detail.empty();
        } catch (const std::exception& e) {
            result.passed = false;
            result.detail = std::string("exception: ") + e.what();
        }
        result.seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        results.push_back(std::move(result));
    }
    return results;
}

}  // namespace colorgraph
