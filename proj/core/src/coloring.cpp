#include "colorgraph/coloring.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>

namespace colorgraph {

PolygonColoring::PolygonColoring(std::vector<Klein> colors) : colors_(std::move(colors)) {
    int n = static_cast<int>(colors_.size());
    if (n < 3) throw InputError("coloring needs at least 3 vertices");
    for (int i = 0; i < n; ++i) {
        if (colors_[i] > 3) throw InputError("color value out of range 0..3");
        if (colors_[i] == colors_[(i + 1) % n])
            throw InputError("improper coloring: vertices " + std::to_string(i) + " and " +
                             std::to_string((i + 1) % n) + " share color " +
                             std::to_string(int(colors_[i])));
    }
}

PolygonColoring PolygonColoring::parse(std::string_view text) {
    std::vector<Klein> colors;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string_view item = text.substr(pos, comma == std::string_view::npos
                                                     ? std::string_view::npos
                                                     : comma - pos);
        while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
        while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
        if (item.size() != 1 || item[0] < '0' || item[0] > '3')
            throw InputError("bad coloring text: expected digits 0..3 separated by commas");
        colors.push_back(static_cast<Klein>(item[0] - '0'));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return PolygonColoring(std::move(colors));
}

std::string PolygonColoring::to_text() const {
    std::string s;
    for (std::size_t i = 0; i < colors_.size(); ++i) {
        if (i) s += ',';
        s += static_cast<char>('0' + colors_[i]);
    }
    return s;
}

ColorVector color_vector(const PolygonColoring& c) {
    int n = c.polygon_size();
    ColorVector v(n - 1);
    for (int i = 0; i + 1 < n; ++i) v[i] = klein_add(c.color(i), c.color(i + 1));
    return v;
}

bool is_compatible(const PolygonColoring& c, const Triangulation& t) {
    if (c.polygon_size() != t.polygon_size())
        throw InputError("coloring and triangulation have different polygon sizes");
    for (const Diagonal& d : t.diagonals())
        if (c.color(d.a) == c.color(d.b)) return false;
    return true;
}

bool is_valid(const ColorVector& v, const BinaryTree& tree) {
    if (static_cast<int>(v.size()) != tree.leaf_count())
        throw InputError("color vector length does not match the tree leaf count");
    for (Klein e : v)
        if (e == 0 || e > 3) throw InputError("color vector entries must be in 1..3");
    // 0 is not a legal edge color, so it doubles as the failure sentinel.
    std::function<Klein(int)> edge_color = [&](int node) -> Klein {
        if (tree.is_leaf(node)) return v[tree.leaf_label(node) - 1];
        Klein a = edge_color(tree.left(node));
        if (a == 0) return 0;
        Klein b = edge_color(tree.right(node));
        if (b == 0 || a == b) return 0;
        return klein_add(a, b);
    };
    return edge_color(tree.root()) != 0;
}

namespace {

std::vector<Klein> transform(const std::vector<Klein>& c, int rotation, bool reflect) {
    int n = static_cast<int>(c.size());
    std::vector<Klein> out(n);
    for (int i = 0; i < n; ++i) {
        int src = reflect ? (rotation - i % n + 2 * n) % n : (i + rotation) % n;
        out[i] = c[src];
    }
    return out;
}

// Lexicographically smallest color relabeling: first color seen becomes 0,
// the next new one 1, and so on.
std::vector<Klein> relabel_first_occurrence(const std::vector<Klein>& c) {
    std::array<int, 4> map{-1, -1, -1, -1};
    int next = 0;
    std::vector<Klein> out(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (map[c[i]] < 0) map[c[i]] = next++;
        out[i] = static_cast<Klein>(map[c[i]]);
    }
    return out;
}

}  // namespace

PolygonColoring canonicalize_coloring(const PolygonColoring& c) {
    int n = c.polygon_size();
    std::vector<Klein> best;
    for (int r = 0; r < n; ++r) {
        for (bool refl : {false, true}) {
            std::vector<Klein> cand = relabel_first_occurrence(transform(c.colors(), r, refl));
            if (best.empty() || cand < best) best = std::move(cand);
        }
    }
    return PolygonColoring(std::move(best));
}

std::vector<ColoringClass> enumerate_coloring_classes(int n) {
    if (n < 3) throw InputError("polygon size must be at least 3");
    std::map<std::vector<Klein>, long> orbit_counts;
    std::vector<Klein> colors(n);
    std::function<void(int)> extend = [&](int i) {
        if (i == n) {
            if (colors[n - 1] == colors[0]) return;
            orbit_counts[canonicalize_coloring(PolygonColoring(colors)).colors()]++;
            return;
        }
        for (Klein v = 0; v < 4; ++v) {
            if (i > 0 && v == colors[i - 1]) continue;
            colors[i] = v;
            extend(i + 1);
        }
    };
    extend(0);

    std::vector<ColoringClass> classes;
    classes.reserve(orbit_counts.size());
    for (const auto& [rep, count] : orbit_counts) {
        ColoringClass cls{PolygonColoring(rep), count, {}};
        std::array<int, 4> mult{0, 0, 0, 0};
        for (Klein v : rep) mult[v]++;
        for (int m : mult)
            if (m > 0) cls.partition.push_back(m);
        std::sort(cls.partition.rbegin(), cls.partition.rend());
        classes.push_back(std::move(cls));
    }
    std::sort(classes.begin(), classes.end(), [](const ColoringClass& a, const ColoringClass& b) {
        auto pad = [](const std::vector<int>& p) {
            std::array<int, 4> out{0, 0, 0, 0};
            std::copy(p.begin(), p.end(), out.begin());
            return out;
        };
        auto pa = pad(a.partition), pb = pad(b.partition);
        if (pa != pb) return pa > pb;
        return a.representative < b.representative;
    });
    return classes;
}

std::optional<std::pair<int, int>> is_vine_class(const PolygonColoring& c) {
    int n = c.polygon_size();
    for (int r = 0; r < n; ++r) {
        for (bool refl : {false, true}) {
            PolygonColoring presented{transform(c.colors(), r, refl)};
            ColorVector v = color_vector(presented);
            // 1^p 2 1^q up to a permutation of {1,2,3}: one minority entry,
            // all the others equal.
            int len = static_cast<int>(v.size());
            if (len == 2 && v[0] != v[1]) return std::make_pair(0, 1);
            std::array<int, 4> freq{0, 0, 0, 0};
            for (Klein e : v) freq[e]++;
            int majority = -1, minority = -1;
            for (int val = 1; val <= 3; ++val) {
                if (freq[val] == len - 1) majority = val;
                if (freq[val] == 1) minority = val;
            }
            if (majority < 0 || minority < 0 || majority == minority) continue;
            int k = -1;
            for (int i = 0; i < len; ++i)
                if (v[i] == minority) k = i;
            return std::make_pair(std::min(k, len - 1 - k), std::max(k, len - 1 - k));
        }
    }
    return std::nullopt;
}

long long proper_coloring_count(int n) {
    long long pow3 = 1;
    for (int i = 0; i < n; ++i) pow3 *= 3;
    return pow3 + (n % 2 == 0 ? 3 : -3);
}

}  // namespace colorgraph
