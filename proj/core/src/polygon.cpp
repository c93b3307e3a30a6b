#include "colorgraph/polygon.hpp"

#include <algorithm>
#include <map>

namespace colorgraph {

namespace {

int cyclic_distance(int i, int j, int n) {
    int d = std::abs(i - j);
    return std::min(d, n - d);
}

void require_valid(const Diagonal& d, int n) {
    if (!is_valid_diagonal(d, n))
        throw InputError("not a diagonal of the " + std::to_string(n) + "-gon: " + to_string(d));
}

}  // namespace

bool is_valid_diagonal(const Diagonal& d, int n) {
    if (n < 3) return false;
    if (d.a < 0 || d.b >= n) return false;
    return cyclic_distance(d.a, d.b, n) >= 2;
}

bool diagonals_cross(const Diagonal& x, const Diagonal& y, int n) {
    require_valid(x, n);
    require_valid(y, n);
    if (x.a == y.a || x.a == y.b || x.b == y.a || x.b == y.b) return false;
    // With x = (a,b), a < b, the open arcs are (a,b) and (b,a); the chords
    // cross iff exactly one endpoint of y lies strictly between a and b.
    bool y_a_inside = x.a < y.a && y.a < x.b;
    bool y_b_inside = x.a < y.b && y.b < x.b;
    return y_a_inside != y_b_inside;
}

std::string to_string(const Diagonal& d) {
    return "{" + std::to_string(d.a) + "," + std::to_string(d.b) + "}";
}

Triangulation::Triangulation(int n, std::vector<Diagonal> diagonals)
    : n_(n), diagonals_(std::move(diagonals)) {
    if (n < 3) throw InputError("polygon size must be at least 3");
    std::sort(diagonals_.begin(), diagonals_.end());
    if (static_cast<int>(diagonals_.size()) != n - 3)
        throw InputError("a triangulation of the " + std::to_string(n) + "-gon has exactly " +
                         std::to_string(n - 3) + " diagonals");
    for (std::size_t i = 0; i < diagonals_.size(); ++i) {
        require_valid(diagonals_[i], n);
        if (i > 0 && diagonals_[i] == diagonals_[i - 1])
            throw InputError("duplicate diagonal " + to_string(diagonals_[i]));
        for (std::size_t j = i + 1; j < diagonals_.size(); ++j)
            if (diagonals_cross(diagonals_[i], diagonals_[j], n))
                throw InputError("crossing diagonals " + to_string(diagonals_[i]) + " and " +
                                 to_string(diagonals_[j]));
    }
}

bool Triangulation::contains(const Diagonal& d) const {
    return std::binary_search(diagonals_.begin(), diagonals_.end(), d);
}

bool Triangulation::has_edge(int u, int v) const {
    if (u == v) return false;
    if (cyclic_distance(u, v, n_) == 1) return true;
    return contains(Diagonal(u, v));
}

Triangulation Triangulation::fan(int n, int apex) {
    std::vector<Diagonal> diagonals;
    for (int v = 0; v < n; ++v)
        if (is_valid_diagonal(Diagonal(apex, v), n)) diagonals.emplace_back(apex, v);
    return Triangulation(n, std::move(diagonals));
}

std::string to_string(const Triangulation& t) {
    if (t.diagonals().empty()) return "{}";
    std::string s;
    for (const Diagonal& d : t.diagonals()) s += to_string(d);
    return s;
}

Diagonal flipped_diagonal(const Triangulation& t, const Diagonal& d) {
    int n = t.polygon_size();
    if (!t.contains(d)) throw InputError("diagonal " + to_string(d) + " not in triangulation");
    // The two triangles adjacent to d have apexes u (in the arc a..b) and
    // v (in the arc b..a); each is the unique vertex of its arc joined to
    // both endpoints of d.
    int apex_inside = -1, apex_outside = -1;
    for (int v = 0; v < n; ++v) {
        if (v == d.a || v == d.b) continue;
        if (!t.has_edge(d.a, v) || !t.has_edge(d.b, v)) continue;
        if (d.a < v && v < d.b)
            apex_inside = v;
        else
            apex_outside = v;
    }
    if (apex_inside < 0 || apex_outside < 0)
        throw VerificationError("diagonal " + to_string(d) + " has no flip quadrilateral");
    return Diagonal(apex_inside, apex_outside);
}

Triangulation flip(const Triangulation& t, const Diagonal& d) {
    Diagonal opposite = flipped_diagonal(t, d);
    std::vector<Diagonal> diagonals;
    diagonals.reserve(t.diagonals().size());
    for (const Diagonal& e : t.diagonals())
        if (e != d) diagonals.push_back(e);
    diagonals.push_back(opposite);
    return Triangulation(t.polygon_size(), std::move(diagonals));
}

std::vector<Triangulation> flip_neighbors(const Triangulation& t) {
    std::vector<Triangulation> result;
    result.reserve(t.diagonals().size());
    for (const Diagonal& d : t.diagonals()) result.push_back(flip(t, d));
    return result;
}

namespace {

// Diagonal sets triangulating the sub-polygon a, a+1, ..., b, not counting
// the base chord (a,b) itself. Ranges are short (b-a <= 11), so the table
// over all (a,b) pairs stays small.
using DiagonalSets = std::vector<std::vector<Diagonal>>;

const DiagonalSets& triangulate_range(int a, int b, int n,
                                      std::map<std::pair<int, int>, DiagonalSets>& memo) {
    auto it = memo.find({a, b});
    if (it != memo.end()) return it->second;
    DiagonalSets sets;
    if (b - a < 2) {
        sets.push_back({});
    } else {
        for (int m = a + 1; m < b; ++m) {
            const DiagonalSets& left = triangulate_range(a, m, n, memo);
            const DiagonalSets& right = triangulate_range(m, b, n, memo);
            for (const auto& ls : left) {
                for (const auto& rs : right) {
                    std::vector<Diagonal> set = ls;
                    set.insert(set.end(), rs.begin(), rs.end());
                    if (is_valid_diagonal(Diagonal(a, m), n)) set.emplace_back(a, m);
                    if (is_valid_diagonal(Diagonal(m, b), n)) set.emplace_back(m, b);
                    sets.push_back(std::move(set));
                }
            }
        }
    }
    return memo.emplace(std::make_pair(a, b), std::move(sets)).first->second;
}

}  // namespace

std::vector<Triangulation> enumerate_triangulations(int n) {
    if (n < 3) throw InputError("polygon size must be at least 3");
    std::map<std::pair<int, int>, DiagonalSets> memo;
    const DiagonalSets& sets = triangulate_range(0, n - 1, n, memo);
    std::vector<Triangulation> result;
    result.reserve(sets.size());
    for (const auto& set : sets) result.emplace_back(n, set);
    return result;
}

int FlipGraph::index_of(const Triangulation& t) const {
    auto it = std::lower_bound(sorted_order_.begin(), sorted_order_.end(), t,
                               [&](int i, const Triangulation& v) { return vertices[i] < v; });
    if (it == sorted_order_.end() || !(vertices[*it] == t)) return -1;
    return *it;
}

FlipGraph build_associahedron(int n, int cap) {
    if (n < 3) throw InputError("polygon size must be at least 3");
    if (n > cap)
        throw ResourceError("polygon size " + std::to_string(n) + " exceeds enumeration cap " +
                            std::to_string(cap));
    FlipGraph g;
    g.n = n;
    g.vertices = enumerate_triangulations(n);
    g.sorted_order_.resize(g.vertices.size());
    for (std::size_t i = 0; i < g.vertices.size(); ++i) g.sorted_order_[i] = static_cast<int>(i);
    std::sort(g.sorted_order_.begin(), g.sorted_order_.end(),
              [&](int i, int j) { return g.vertices[i] < g.vertices[j]; });
    g.adjacency.resize(g.vertices.size());
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        for (const Triangulation& nb : flip_neighbors(g.vertices[i])) {
            int j = g.index_of(nb);
            if (j < 0) throw VerificationError("flip neighbor missing from enumeration");
            if (static_cast<int>(i) < j) g.edges.emplace_back(static_cast<int>(i), j);
            g.adjacency[i].push_back(j);
        }
    }
    std::sort(g.edges.begin(), g.edges.end());
    for (auto& nbrs : g.adjacency) std::sort(nbrs.begin(), nbrs.end());
    return g;
}

}  // namespace colorgraph
