#include "colorgraph/vine.hpp"

#include <algorithm>
#include <cstdlib>

#include "colorgraph/colorgraph.hpp"

namespace colorgraph {

long long binomial(int a, int b) {
    if (b < 0 || b > a) return 0;
    b = std::min(b, a - b);
    long long result = 1;
    for (int i = 1; i <= b; ++i) result = result * (a - b + i) / i;
    return result;
}

PolygonColoring vine_coloring(int p, int q) {
    if (p < 0 || q < 0 || p + q + 2 < 3) throw InputError("vine shape needs p+q+2 >= 3");
    int n = p + q + 2;
    std::vector<Klein> colors(n);
    colors[0] = 0;
    for (int i = 0; i + 1 < n; ++i) {
        Klein step = (i == p) ? Klein{2} : Klein{1};
        colors[i + 1] = klein_add(colors[i], step);
    }
    return PolygonColoring(std::move(colors));
}

namespace {

struct VineShape {
    // Attachment positions along the central path, root end first.
    std::vector<int> left_positions;   // of left-attached leaves, top to bottom
    std::vector<int> right_positions;  // of right-attached leaves, top to bottom
};

// Decomposes the tree along the path from the root to leaf `center`,
// requiring every sibling off the path to be a leaf. Left siblings must read
// 1..center-1 top to bottom and right siblings k, k-1, ..., center+1.
bool decompose_vine(const BinaryTree& tree, int center, VineShape& shape) {
    if (!tree.is_well_formed()) return false;
    int k = tree.leaf_count();
    std::vector<int> left_labels, right_labels;
    int node = tree.root();
    int lo = 1;  // first leaf label covered by `node`
    int position = 0;
    while (!tree.is_leaf(node)) {
        int left = tree.left(node);
        int right = tree.right(node);
        // In-order labels split between the children at lo + |left leaves|.
        int left_count = 0;
        {
            std::vector<int> stack{left};
            while (!stack.empty()) {
                int x = stack.back();
                stack.pop_back();
                if (tree.is_leaf(x))
                    ++left_count;
                else {
                    stack.push_back(tree.left(x));
                    stack.push_back(tree.right(x));
                }
            }
        }
        int split = lo + left_count;  // right child covers split..hi
        if (center < split) {
            if (!tree.is_leaf(right)) return false;
            right_labels.push_back(tree.leaf_label(right));
            shape.right_positions.push_back(position);
            node = left;
        } else {
            if (!tree.is_leaf(left)) return false;
            left_labels.push_back(tree.leaf_label(left));
            shape.left_positions.push_back(position);
            node = right;
            lo = split;
        }
        ++position;
    }
    if (tree.leaf_label(node) != center) return false;
    for (std::size_t i = 0; i < left_labels.size(); ++i)
        if (left_labels[i] != static_cast<int>(i) + 1) return false;
    for (std::size_t i = 0; i < right_labels.size(); ++i)
        if (right_labels[i] != k - static_cast<int>(i)) return false;
    return true;
}

}  // namespace

bool is_vine_tree(const BinaryTree& tree, int p, int q) {
    if (tree.leaf_count() != p + q + 1) return false;
    VineShape shape;
    if (!decompose_vine(tree, p + 1, shape)) return false;
    return static_cast<int>(shape.left_positions.size()) == p &&
           static_cast<int>(shape.right_positions.size()) == q;
}

std::vector<int> vine_coordinates(const BinaryTree& tree, int p, int q) {
    if (tree.leaf_count() != p + q + 1)
        throw InputError("tree has the wrong leaf count for vine shape (p,q)");
    VineShape shape;
    if (!decompose_vine(tree, p + 1, shape) ||
        static_cast<int>(shape.left_positions.size()) != p ||
        static_cast<int>(shape.right_positions.size()) != q)
        throw InputError("tree is not a vine of shape (p,q)");
    std::vector<int> x(p);
    for (int i = 0; i < p; ++i) {
        int above = 0;
        for (int rp : shape.right_positions)
            if (rp < shape.left_positions[i]) ++above;
        x[i] = above;
    }
    return x;
}

BinaryTree vine_from_coordinates(const std::vector<int>& x, int p, int q) {
    if (static_cast<int>(x.size()) != p) throw InputError("coordinate vector must have length p");
    for (int i = 0; i < p; ++i) {
        if (x[i] < 0 || x[i] > q) throw InputError("coordinates must lie in 0..q");
        if (i > 0 && x[i] < x[i - 1]) throw InputError("coordinates must be nondecreasing");
    }
    // Attachment sequence from the root down; the topmost right leaf carries
    // the largest label p+q+1.
    struct Attachment {
        bool left;
        int label;
    };
    std::vector<Attachment> sequence;
    int rights_placed = 0;
    for (int i = 0; i < p; ++i) {
        while (rights_placed < x[i]) {
            sequence.push_back({false, p + q + 1 - rights_placed});
            ++rights_placed;
        }
        sequence.push_back({true, i + 1});
    }
    while (rights_placed < q) {
        sequence.push_back({false, p + q + 1 - rights_placed});
        ++rights_placed;
    }
    BinaryTree node = BinaryTree::leaf(p + 1);
    for (auto it = sequence.rbegin(); it != sequence.rend(); ++it)
        node = it->left ? BinaryTree::join(BinaryTree::leaf(it->label), node)
                        : BinaryTree::join(node, BinaryTree::leaf(it->label));
    return node;
}

std::vector<std::vector<int>> simplex_points(int p, int q) {
    std::vector<std::vector<int>> points;
    std::vector<int> x(p);
    auto extend = [&](auto&& self, int i, int lo) -> void {
        if (i == p) {
            points.push_back(x);
            return;
        }
        for (int v = lo; v <= q; ++v) {
            x[i] = v;
            self(self, i + 1, v);
        }
    };
    extend(extend, 0, 0);
    return points;
}

namespace {

bool lattice_adjacent(const std::vector<int>& a, const std::vector<int>& b) {
    int diffs = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        int d = std::abs(a[i] - b[i]);
        if (d > 1) return false;
        diffs += d;
    }
    return diffs == 1;
}

}  // namespace

bool verify_vine_isomorphism(int p, int q, int cap) {
    if (p < 0 || q < 0) throw InputError("vine parameters must be nonnegative");
    if (p + q == 0) {
        // Degenerate shape: one vine (a single leaf), one lattice point.
        BinaryTree t = BinaryTree::leaf(1);
        return vine_coordinates(t, 0, 0).empty() && simplex_points(0, 0).size() == 1;
    }
    ColorGraph g = build_color_graph(vine_coloring(p, q), cap);
    std::vector<std::vector<int>> points = simplex_points(p, q);
    if (g.vertices.size() != points.size()) return false;

    std::vector<std::vector<int>> coords;
    coords.reserve(g.vertices.size());
    for (const Triangulation& t : g.vertices) {
        BinaryTree tree = tree_from_triangulation(t);
        if (!is_vine_tree(tree, p, q)) return false;
        coords.push_back(vine_coordinates(tree, p, q));
    }

    std::vector<std::vector<int>> sorted = coords;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != points) return false;  // points are generated lex-sorted

    int order = static_cast<int>(coords.size());
    for (int u = 0; u < order; ++u)
        for (int v = u + 1; v < order; ++v)
            if (lattice_adjacent(coords[u], coords[v]) != g.graph.has_edge(u, v)) return false;
    return true;
}

}  // namespace colorgraph
