#include "colorgraph/isomorphism.hpp"

#include <algorithm>
#include <map>

namespace colorgraph {

namespace {

// One round of neighborhood refinement over both graphs with a shared
// signature dictionary; returns false once the color histograms diverge.
bool refine(const Graph& a, const Graph& b, std::vector<int>& ca, std::vector<int>& cb) {
    for (;;) {
        using Signature = std::pair<int, std::vector<int>>;
        std::map<Signature, int> dictionary;
        auto resign = [&](const Graph& g, const std::vector<int>& colors) {
            std::vector<Signature> sig(g.order);
            for (int v = 0; v < g.order; ++v) {
                std::vector<int> nbr;
                nbr.reserve(g.adj[v].size());
                for (int w : g.adj[v]) nbr.push_back(colors[w]);
                std::sort(nbr.begin(), nbr.end());
                sig[v] = {colors[v], std::move(nbr)};
            }
            return sig;
        };
        auto sa = resign(a, ca), sb = resign(b, cb);
        for (const auto& s : sa) dictionary.emplace(s, 0);
        for (const auto& s : sb) dictionary.emplace(s, 0);
        int next = 0;
        for (auto& [sig, id] : dictionary) id = next++;
        std::vector<int> na(a.order), nb(b.order);
        for (int v = 0; v < a.order; ++v) na[v] = dictionary[sa[v]];
        for (int v = 0; v < b.order; ++v) nb[v] = dictionary[sb[v]];
        std::vector<int> ha(next, 0), hb(next, 0);
        for (int c : na) ha[c]++;
        for (int c : nb) hb[c]++;
        if (ha != hb) return false;
        bool stable = (na == ca && nb == cb);
        ca = std::move(na);
        cb = std::move(nb);
        if (stable) return true;
    }
}

struct IsoSearch {
    const Graph& a;
    const Graph& b;
    const std::vector<int>& ca;
    const std::vector<int>& cb;
    std::vector<int> map;      // a-vertex -> b-vertex or -1
    std::vector<bool> used;    // b-vertices taken
    std::vector<int> order;    // assignment order of a-vertices

    bool assign(std::size_t k) {
        if (k == order.size()) return true;
        int u = order[k];
        for (int v = 0; v < b.order; ++v) {
            if (used[v] || cb[v] != ca[u]) continue;
            bool ok = true;
            for (std::size_t j = 0; j < k && ok; ++j)
                if (a.has_edge(u, order[j]) != b.has_edge(v, map[order[j]])) ok = false;
            if (!ok) continue;
            map[u] = v;
            used[v] = true;
            if (assign(k + 1)) return true;
            map[u] = -1;
            used[v] = false;
        }
        return false;
    }
};

}  // namespace

std::optional<std::vector<int>> graphs_isomorphic(const Graph& a, const Graph& b) {
    if (a.order != b.order || a.size() != b.size()) return std::nullopt;
    if (a.order == 0) return std::vector<int>{};
    std::vector<int> ca(a.order, 0), cb(b.order, 0);
    for (int v = 0; v < a.order; ++v) ca[v] = a.degree(v);
    for (int v = 0; v < b.order; ++v) cb[v] = b.degree(v);
    if (!refine(a, b, ca, cb)) return std::nullopt;

    IsoSearch search{a, b, ca, cb, std::vector<int>(a.order, -1),
                     std::vector<bool>(b.order, false), {}};
    // Assign constrained vertices first: rare refinement color, high degree.
    std::vector<int> freq(*std::max_element(ca.begin(), ca.end()) + 1, 0);
    for (int c : ca) freq[c]++;
    search.order.resize(a.order);
    for (int v = 0; v < a.order; ++v) search.order[v] = v;
    std::sort(search.order.begin(), search.order.end(), [&](int u, int v) {
        if (freq[ca[u]] != freq[ca[v]]) return freq[ca[u]] < freq[ca[v]];
        if (a.degree(u) != a.degree(v)) return a.degree(u) > a.degree(v);
        return u < v;
    });
    if (!search.assign(0)) return std::nullopt;
    return search.map;
}

namespace {

struct SubSearch {
    const Graph& host;
    const Graph& pattern;
    const std::vector<std::vector<int>>& dp;
    const std::vector<std::vector<int>>& dh;
    std::vector<int> order;  // pattern vertices, connectivity-first
    std::vector<int> map;
    std::vector<bool> used;

    bool assign(std::size_t k) {
        if (k == order.size()) return true;
        int u = order[k];
        for (int v = 0; v < host.order; ++v) {
            if (used[v] || host.degree(v) < pattern.degree(u)) continue;
            bool ok = true;
            for (std::size_t j = 0; j < k && ok; ++j) {
                int w = order[j];
                if (pattern.has_edge(u, w) && !host.has_edge(v, map[w])) ok = false;
                // Edges map to edges, so host distances never exceed pattern distances.
                if (ok && dp[u][w] >= 0 && (dh[v][map[w]] < 0 || dh[v][map[w]] > dp[u][w]))
                    ok = false;
            }
            if (!ok) continue;
            map[u] = v;
            used[v] = true;
            if (assign(k + 1)) return true;
            map[u] = -1;
            used[v] = false;
        }
        return false;
    }
};

}  // namespace

std::optional<std::vector<int>> contains_subgraph(const Graph& host, const Graph& pattern) {
    if (pattern.order > host.order || pattern.size() > host.size()) return std::nullopt;
    if (pattern.order == 0) return std::vector<int>{};
    auto dp = all_pairs_distances(pattern);
    auto dh = all_pairs_distances(host);

    SubSearch search{host, pattern, dp, dh, {}, std::vector<int>(pattern.order, -1),
                     std::vector<bool>(host.order, false)};
    std::vector<bool> placed(pattern.order, false);
    std::vector<int> mapped_neighbors(pattern.order, 0);
    for (int k = 0; k < pattern.order; ++k) {
        int best = -1;
        for (int v = 0; v < pattern.order; ++v) {
            if (placed[v]) continue;
            if (best < 0 || mapped_neighbors[v] > mapped_neighbors[best] ||
                (mapped_neighbors[v] == mapped_neighbors[best] &&
                 pattern.degree(v) > pattern.degree(best)))
                best = v;
        }
        placed[best] = true;
        search.order.push_back(best);
        for (int w : pattern.adj[best]) mapped_neighbors[w]++;
    }
    if (!search.assign(0)) return std::nullopt;
    return search.map;
}

}  // namespace colorgraph
