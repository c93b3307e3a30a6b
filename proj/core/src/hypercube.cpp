#include "colorgraph/hypercube.hpp"

#include <algorithm>
#include <bit>

namespace colorgraph {

std::vector<Diagonal> allowed_diagonals(const PolygonColoring& c, Klein forbidden) {
    int n = c.polygon_size();
    std::vector<Diagonal> out;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            Diagonal d(i, j);
            if (!is_valid_diagonal(d, n)) continue;
            if (c.color(i) == c.color(j)) continue;
            if (c.color(i) == forbidden || c.color(j) == forbidden) continue;
            out.push_back(d);
        }
    }
    return out;
}

namespace {
long long choose2(long long k) { return k * (k - 1) / 2; }
}  // namespace

long long count_formula(int n, int w, int x, int y, int z) {
    if (w < 0 || x < 0 || y < 0 || z < 0 || w + x + y + z != n)
        throw InputError("color multiplicities must be nonnegative and sum to n");
    return static_cast<long long>(n) * (n - 3) / 2 - choose2(w) - choose2(x) - choose2(y) -
           choose2(z) - static_cast<long long>(w) * (n - 2 - w);
}

long long count_formula_simplified(int n, int w, int x, int y, int z) {
    if (w < 0 || x < 1 || y < 1 || z < 1 || w + x + y + z != n)
        throw InputError("simplified count needs x, y, z >= 1 summing with w to n");
    return static_cast<long long>(x - 1) * (y - 1) + static_cast<long long>(y - 1) * (z - 1) +
           static_cast<long long>(z - 1) * (x - 1) + n - 3;
}

std::array<int, 4> color_multiplicities(const PolygonColoring& c) {
    std::array<int, 4> mult{0, 0, 0, 0};
    for (int v = 0; v < c.polygon_size(); ++v) mult[c.color(v)]++;
    return mult;
}

Klein best_forbidden_color(const PolygonColoring& c) {
    std::array<int, 4> mult = color_multiplicities(c);
    int best = 0;
    for (int v = 1; v < 4; ++v)
        if (mult[v] > mult[best]) best = v;
    return static_cast<Klein>(best);
}

int dimension_bound(int n) {
    if (n < 4) throw InputError("dimension bound defined for n >= 4");
    return static_cast<int>((static_cast<long long>(n) * (3 * n - 8)) / 16);
}

HypercubeEmbedding hypercube_embed(const ColorGraph& g, Klein forbidden) {
    if (forbidden > 3) throw InputError("forbidden color must be in 0..3");
    HypercubeEmbedding emb;
    emb.forbidden = forbidden;
    emb.allowed = allowed_diagonals(g.coloring, forbidden);
    if (emb.allowed.size() > 64)
        throw ResourceError("more than 64 allowed diagonals");

    emb.assignment.reserve(g.vertices.size());
    for (const Triangulation& t : g.vertices) {
        std::uint64_t bits = 0;
        for (std::size_t k = 0; k < emb.allowed.size(); ++k)
            if (t.contains(emb.allowed[k])) bits |= std::uint64_t{1} << k;
        emb.assignment.push_back(bits);
    }

    // Injectivity.
    std::vector<std::uint64_t> sorted = emb.assignment;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw VerificationError("hypercube assignment is not injective");

    // Flip edges land on Hamming-1 pairs, and conversely every Hamming-1 pair
    // inside the image is a flip edge (vertex-induced).
    int order = static_cast<int>(g.vertices.size());
    for (int u = 0; u < order; ++u) {
        for (int v = u + 1; v < order; ++v) {
            int hamming = std::popcount(emb.assignment[u] ^ emb.assignment[v]);
            bool edge = g.graph.has_edge(u, v);
            if (edge && hamming != 1)
                throw VerificationError("color-graph edge not Hamming-1 in the hypercube");
            if (!edge && hamming == 1)
                throw VerificationError("hypercube image is not vertex-induced");
        }
    }
    return emb;
}

}  // namespace colorgraph
