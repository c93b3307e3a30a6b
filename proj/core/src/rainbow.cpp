#include "colorgraph/rainbow.hpp"

#include <algorithm>
#include <bit>
#include <optional>

namespace colorgraph {

namespace {

struct QuadLayout {
    std::array<int, 4> corners{};  // in forward cyclic order along the interval
    std::vector<int> interval;     // covered polygon vertices, forward order
};

QuadLayout layout_quad(const std::array<int, 4>& quad, int n) {
    std::array<int, 4> sorted = quad;
    std::sort(sorted.begin(), sorted.end());
    // The covering interval is the complement of the largest gap between
    // cyclically consecutive corners.
    int best_gap = -1, gap_after = 0;
    for (int i = 0; i < 4; ++i) {
        int a = sorted[i], b = sorted[(i + 1) % 4];
        int gap = (b - a + n) % n;
        if (gap > best_gap) {
            best_gap = gap;
            gap_after = i;
        }
    }
    QuadLayout layout;
    int start = sorted[(gap_after + 1) % 4];
    for (int i = 0; i < 4; ++i) layout.corners[i] = sorted[(gap_after + 1 + i) % 4];
    int end = sorted[gap_after];
    for (int v = start;; v = (v + 1) % n) {
        layout.interval.push_back(v);
        if (v == end) break;
    }
    return layout;
}

// First compatible triangulation of the sub-polygon given by `region`
// (polygon vertices in cyclic order), or nullopt. Chords between
// region-consecutive vertices already exist and are not re-checked.
bool triangulate_region(const std::vector<int>& region, const PolygonColoring& c, int n,
                        std::vector<Diagonal>& out) {
    int k = static_cast<int>(region.size());
    if (k < 3) return true;
    int a = region.front(), b = region.back();
    for (int m = 1; m + 1 < k; ++m) {
        int v = region[m];
        std::vector<Diagonal> added;
        if (m >= 2) {
            if (c.color(a) == c.color(v)) continue;
            added.emplace_back(a, v);
        }
        if (m + 2 < k) {
            if (c.color(v) == c.color(b)) continue;
            added.emplace_back(v, b);
        }
        std::size_t mark = out.size();
        for (const Diagonal& d : added) {
            if (!is_valid_diagonal(d, n))
                throw VerificationError("region chord is not a polygon diagonal");
            out.push_back(d);
        }
        std::vector<int> left(region.begin(), region.begin() + m + 1);
        std::vector<int> right(region.begin() + m, region.end());
        if (triangulate_region(left, c, n, out) && triangulate_region(right, c, n, out))
            return true;
        out.resize(mark);
    }
    return false;
}

}  // namespace

RainbowCube rainbow_quad_cube(const PolygonColoring& c,
                              const std::vector<std::array<int, 4>>& quads, int cap) {
    int n = c.polygon_size();
    int r = static_cast<int>(quads.size());
    std::vector<QuadLayout> layouts;
    std::vector<bool> covered(n, false);
    for (const auto& quad : quads) {
        std::array<Klein, 4> colors{};
        for (int i = 0; i < 4; ++i) {
            if (quad[i] < 0 || quad[i] >= n) throw InputError("quad vertex out of range");
            colors[i] = c.color(quad[i]);
        }
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) {
                if (quad[i] == quad[j]) throw InputError("quad vertices must be distinct");
                if (colors[i] == colors[j])
                    throw InputError("quadrilateral must use four distinct colors");
            }
        QuadLayout layout = layout_quad(quad, n);
        for (int v : layout.interval) {
            if (covered[v])
                throw InputError("quadrilateral intervals overlap or interleave");
            covered[v] = true;
        }
        layouts.push_back(std::move(layout));
    }

    // Fixed part: the quad boundary chords plus compatible triangulations of
    // the pockets and of the outer region.
    std::vector<Diagonal> base;
    for (const QuadLayout& layout : layouts) {
        for (int i = 0; i < 4; ++i) {
            Diagonal side(layout.corners[i], layout.corners[(i + 1) % 4]);
            if (is_valid_diagonal(side, n)) base.push_back(side);
        }
        for (int i = 0; i < 3; ++i) {
            // Pocket between consecutive corners inside the interval.
            std::vector<int> pocket;
            for (int v = layout.corners[i];; v = (v + 1) % n) {
                pocket.push_back(v);
                if (v == layout.corners[i + 1]) break;
            }
            if (pocket.size() >= 3 && !triangulate_region(pocket, c, n, base))
                throw VerificationError("no compatible triangulation of a quad pocket");
        }
    }
    std::vector<int> outer;
    {
        std::vector<int> keep(n, 1);
        for (const QuadLayout& layout : layouts)
            for (int v : layout.interval)
                if (v != layout.interval.front() && v != layout.interval.back()) keep[v] = 0;
        for (int v = 0; v < n; ++v)
            if (keep[v]) outer.push_back(v);
    }
    if (outer.size() >= 3 && !triangulate_region(outer, c, n, base))
        throw VerificationError("no compatible triangulation outside the quadrilaterals");

    RainbowCube cube;
    cube.r = r;
    for (int mask = 0; mask < (1 << r); ++mask) {
        std::vector<Diagonal> diagonals = base;
        for (int i = 0; i < r; ++i) {
            const auto& q = layouts[i].corners;
            diagonals.push_back((mask >> i) & 1 ? Diagonal(q[1], q[3]) : Diagonal(q[0], q[2]));
        }
        Triangulation t(n, std::move(diagonals));
        if (!is_compatible(c, t))
            throw VerificationError("rainbow cube triangulation is not compatible");
        cube.triangulations.push_back(std::move(t));
    }

    ColorGraph g = build_color_graph(c, cap);
    for (const Triangulation& t : cube.triangulations) {
        int idx = g.index_of(t);
        if (idx < 0) throw VerificationError("rainbow cube vertex missing from color graph");
        cube.vertex_indices.push_back(idx);
    }
    for (int u = 0; u < (1 << r); ++u) {
        for (int v = u + 1; v < (1 << r); ++v) {
            bool expect = std::popcount(static_cast<unsigned>(u ^ v)) == 1;
            if (g.graph.has_edge(cube.vertex_indices[u], cube.vertex_indices[v]) != expect)
                throw VerificationError("rainbow cube does not induce a hypercube subgraph");
        }
    }
    return cube;
}

}  // namespace colorgraph
