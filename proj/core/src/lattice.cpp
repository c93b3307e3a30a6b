#include "colorgraph/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace colorgraph {

std::string to_string(SearchStatus s) {
    switch (s) {
        case SearchStatus::Found: return "found";
        case SearchStatus::None: return "none";
        case SearchStatus::Unknown: return "unknown";
    }
    return "?";
}

bool verify_lattice_embedding(const Graph& g, const LatticeEmbedding& emb) {
    if (static_cast<int>(emb.points.size()) != g.order) return false;
    for (const auto& p : emb.points)
        if (static_cast<int>(p.size()) != emb.dim) return false;
    std::vector<std::vector<int>> sorted = emb.points;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    for (const auto& [u, v] : g.edges) {
        int total = 0;
        for (int i = 0; i < emb.dim; ++i) total += std::abs(emb.points[u][i] - emb.points[v][i]);
        if (total != 1) return false;
    }
    return true;
}

namespace {

constexpr long long kMaxBoxPoints = 1 << 22;

long long box_points(const std::vector<int>& extents) {
    long long cap = 1;
    for (int e : extents) {
        cap *= e + 1;
        if (cap > kMaxBoxPoints) return kMaxBoxPoints + 1;
    }
    return cap;
}

LatticeEmbedding normalized(int dim, std::vector<std::vector<int>> points) {
    LatticeEmbedding emb;
    emb.dim = dim;
    emb.box.assign(dim, 0);
    if (!points.empty()) {
        for (int i = 0; i < dim; ++i) {
            int lo = points[0][i], hi = points[0][i];
            for (const auto& p : points) {
                lo = std::min(lo, p[i]);
                hi = std::max(hi, p[i]);
            }
            for (auto& p : points) p[i] -= lo;
            emb.box[i] = hi - lo;
        }
    }
    emb.points = std::move(points);
    return emb;
}

struct Searcher {
    const Graph& g;
    int dim;
    std::vector<int> extents;
    std::vector<int> strides;
    std::vector<int> order;            // assignment order of vertices
    std::vector<bool> component_start; // per order position
    std::vector<std::vector<int>> pos;
    std::vector<bool> assigned;
    std::vector<int> occupied;  // point key -> vertex, or -1
    std::chrono::steady_clock::time_point deadline;
    long long nodes = 0;
    bool timed_out = false;

    Searcher(const Graph& graph, int d, std::vector<int> ext,
             std::chrono::steady_clock::time_point dl)
        : g(graph), dim(d), extents(std::move(ext)), deadline(dl) {
        strides.assign(dim, 1);
        for (int i = 1; i < dim; ++i) strides[i] = strides[i - 1] * (extents[i - 1] + 1);
        occupied.assign(static_cast<std::size_t>(box_points(extents)), -1);
        pos.assign(g.order, {});
        assigned.assign(g.order, false);
        // BFS order, new components started at the smallest unvisited vertex.
        std::vector<bool> seen(g.order, false);
        for (int s = 0; s < g.order; ++s) {
            if (seen[s]) continue;
            std::vector<int> queue{s};
            seen[s] = true;
            component_start.push_back(true);
            order.push_back(s);
            for (std::size_t head = order.size() - 1; head < order.size(); ++head) {
                for (int w : g.adj[order[head]]) {
                    if (!seen[w]) {
                        seen[w] = true;
                        order.push_back(w);
                        component_start.push_back(false);
                    }
                }
            }
        }
    }

    int key(const std::vector<int>& p) const {
        int k = 0;
        for (int i = 0; i < dim; ++i) k += p[i] * strides[i];
        return k;
    }

    bool inside(const std::vector<int>& p) const {
        for (int i = 0; i < dim; ++i)
            if (p[i] < 0 || p[i] > extents[i]) return false;
        return true;
    }

    // Fundamental domain of the box symmetries for the very first vertex:
    // below the reflection midpoint on every axis, sorted within groups of
    // axes sharing an extent.
    bool canonical_origin(const std::vector<int>& p) const {
        for (int i = 0; i < dim; ++i) {
            if (2 * p[i] > extents[i]) return false;
            if (i + 1 < dim && extents[i] == extents[i + 1] && p[i] > p[i + 1]) return false;
        }
        return true;
    }

    std::vector<std::vector<int>> candidates(int u, std::size_t k) const {
        std::vector<std::vector<int>> out;
        if (component_start[k]) {
            std::vector<int> p(dim, 0);
            for (;;) {
                if (occupied[key(p)] < 0 && (k != 0 || canonical_origin(p))) out.push_back(p);
                int i = 0;
                while (i < dim && ++p[i] > extents[i]) p[i++] = 0;
                if (i == dim) break;
            }
            return out;
        }
        int anchor = -1;
        for (int w : g.adj[u])
            if (assigned[w]) {
                anchor = w;
                break;
            }
        for (int i = 0; i < dim; ++i) {
            for (int step : {-1, 1}) {
                std::vector<int> p = pos[anchor];
                p[i] += step;
                if (!inside(p) || occupied[key(p)] >= 0) continue;
                bool ok = true;
                for (int w : g.adj[u]) {
                    if (!assigned[w] || w == anchor) continue;
                    int total = 0;
                    for (int d = 0; d < dim; ++d) total += std::abs(p[d] - pos[w][d]);
                    if (total != 1) {
                        ok = false;
                        break;
                    }
                }
                if (ok) out.push_back(std::move(p));
            }
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    bool search(std::size_t k) {
        if (timed_out) return false;
        if (k == order.size()) return true;
        ++nodes;
        if ((nodes == 1 || (nodes & 63) == 0) && std::chrono::steady_clock::now() > deadline) {
            timed_out = true;
            return false;
        }
        int u = order[k];
        for (const auto& p : candidates(u, k)) {
            pos[u] = p;
            assigned[u] = true;
            occupied[key(p)] = u;
            if (search(k + 1)) return true;
            occupied[key(p)] = -1;
            assigned[u] = false;
            if (timed_out) return false;
        }
        return false;
    }
};

}  // namespace

LatticeSearchResult lattice_embed_search(const Graph& g, int dim,
                                         std::optional<std::vector<int>> box,
                                         std::chrono::milliseconds budget) {
    if (dim < 1) throw InputError("lattice dimension must be at least 1");
    if (box && static_cast<int>(box->size()) != dim)
        throw InputError("box must list one extent per axis");
    if (box)
        for (int e : *box)
            if (e < 0) throw InputError("box extents must be nonnegative");

    LatticeSearchResult result;
    if (g.order == 0) {
        result.status = SearchStatus::Found;
        result.embedding = LatticeEmbedding{dim, {}, std::vector<int>(dim, 0)};
        return result;
    }

    if (g.size() == 0) {
        // No edge constraints: lay the vertices out along the first axis, or
        // in lex order of the box when one is given.
        std::vector<std::vector<int>> points;
        if (box) {
            if (box_points(*box) < g.order) {
                result.status = SearchStatus::None;
                return result;
            }
            std::vector<int> p(dim, 0);
            while (static_cast<int>(points.size()) < g.order) {
                points.push_back(p);
                int i = 0;
                while (i < dim && ++p[i] > (*box)[i]) p[i++] = 0;
            }
        } else {
            for (int v = 0; v < g.order; ++v) {
                std::vector<int> p(dim, 0);
                p[0] = v;
                points.push_back(std::move(p));
            }
        }
        result.status = SearchStatus::Found;
        result.embedding = normalized(dim, std::move(points));
        if (!verify_lattice_embedding(g, *result.embedding))
            throw VerificationError("lattice embedding failed re-verification");
        return result;
    }

    std::vector<int> extents;
    if (box) {
        extents = *box;
    } else {
        if (!is_connected(g))
            throw InputError("unbounded lattice search needs a connected graph; give a box");
        extents.assign(dim, diameter_of_connected(g));
    }
    if (box_points(extents) > kMaxBoxPoints)
        throw ResourceError("lattice search box has too many points; give a smaller box");
    if (box_points(extents) < g.order) {
        result.status = SearchStatus::None;
        return result;
    }

    Searcher searcher(g, dim, extents, std::chrono::steady_clock::now() + budget);
    bool found = searcher.search(0);
    result.nodes = searcher.nodes;
    if (found) {
        std::vector<std::vector<int>> points(g.order);
        for (int v = 0; v < g.order; ++v) points[v] = searcher.pos[v];
        result.status = SearchStatus::Found;
        result.embedding = normalized(dim, std::move(points));
        if (!verify_lattice_embedding(g, *result.embedding))
            throw VerificationError("lattice embedding failed re-verification");
    } else if (searcher.timed_out) {
        result.status = SearchStatus::Unknown;
    } else {
        result.status = SearchStatus::None;
    }
    return result;
}

LatticeSearchResult smallest_box_embedding(const Graph& g, int dim,
                                           std::chrono::milliseconds budget) {
    if (dim < 1) throw InputError("lattice dimension must be at least 1");
    LatticeSearchResult result;
    if (g.order == 0) {
        result.status = SearchStatus::Found;
        result.embedding = LatticeEmbedding{dim, {}, std::vector<int>(dim, 0)};
        return result;
    }
    if (g.size() > 0 && !is_connected(g))
        throw InputError("smallest-box search needs a connected graph or an edgeless one");

    int max_extent = g.size() > 0 ? diameter_of_connected(g) : g.order - 1;
    // Candidate boxes: nonincreasing extents, enough points, smallest first.
    std::vector<std::vector<int>> candidates;
    std::vector<int> extents(dim, 0);
    auto generate = [&](auto&& self, int i, int hi) -> void {
        if (i == dim) {
            if (box_points(extents) >= g.order) candidates.push_back(extents);
            return;
        }
        for (int e = 0; e <= hi; ++e) {
            extents[i] = e;
            self(self, i + 1, e);
        }
    };
    generate(generate, 0, max_extent);
    std::sort(candidates.begin(), candidates.end(), [](const auto& a, const auto& b) {
        long long pa = box_points(a), pb = box_points(b);
        if (pa != pb) return pa < pb;
        return a < b;
    });

    auto deadline = std::chrono::steady_clock::now() + budget;
    bool unknown_seen = false;
    for (const auto& box : candidates) {
        auto remaining = std::chrono::duration_cast<std::chrono::milliseconds>(
            deadline - std::chrono::steady_clock::now());
        if (remaining.count() <= 0) {
            unknown_seen = true;
            break;
        }
        LatticeSearchResult attempt = lattice_embed_search(g, dim, box, remaining);
        result.nodes += attempt.nodes;
        if (attempt.status == SearchStatus::Found) {
            result.status = SearchStatus::Found;
            result.embedding = std::move(attempt.embedding);
            result.minimal_confirmed = !unknown_seen;
            return result;
        }
        if (attempt.status == SearchStatus::Unknown) unknown_seen = true;
    }
    result.status = unknown_seen ? SearchStatus::Unknown : SearchStatus::None;
    return result;
}

}  // namespace colorgraph
