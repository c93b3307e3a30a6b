#include "colorgraph/tree.hpp"

#include <algorithm>
#include <functional>

namespace colorgraph {

BinaryTree BinaryTree::leaf(int label) {
    BinaryTree t;
    t.nodes_.push_back(Node{-1, -1, label});
    t.root_ = 0;
    t.leaf_count_ = 1;
    return t;
}

BinaryTree BinaryTree::join(const BinaryTree& left, const BinaryTree& right) {
    BinaryTree t;
    t.nodes_ = left.nodes_;
    int offset = static_cast<int>(t.nodes_.size());
    for (Node node : right.nodes_) {
        if (node.left >= 0) node.left += offset;
        if (node.right >= 0) node.right += offset;
        t.nodes_.push_back(node);
    }
    t.nodes_.push_back(Node{left.root_, right.root_ + offset, -1});
    t.root_ = static_cast<int>(t.nodes_.size()) - 1;
    t.leaf_count_ = left.leaf_count_ + right.leaf_count_;
    return t;
}

std::vector<int> BinaryTree::leaf_sequence() const {
    std::vector<int> seq;
    seq.reserve(leaf_count_);
    std::function<void(int)> walk = [&](int node) {
        if (is_leaf(node)) {
            seq.push_back(leaf_label(node));
            return;
        }
        walk(left(node));
        walk(right(node));
    };
    if (root_ >= 0) walk(root_);
    return seq;
}

bool BinaryTree::is_well_formed() const {
    std::vector<int> seq = leaf_sequence();
    for (std::size_t i = 0; i < seq.size(); ++i)
        if (seq[i] != static_cast<int>(i) + 1) return false;
    return !seq.empty();
}

bool BinaryTree::operator==(const BinaryTree& other) const {
    std::function<bool(int, int)> eq = [&](int a, int b) {
        if (is_leaf(a) != other.is_leaf(b)) return false;
        if (is_leaf(a)) return leaf_label(a) == other.leaf_label(b);
        return eq(left(a), other.left(b)) && eq(right(a), other.right(b));
    };
    if ((root_ < 0) != (other.root_ < 0)) return false;
    if (root_ < 0) return true;
    return eq(root_, other.root_);
}

std::string to_string(const BinaryTree& t) {
    std::function<std::string(int)> fmt = [&](int node) -> std::string {
        if (t.is_leaf(node)) return std::to_string(t.leaf_label(node));
        return "(" + fmt(t.left(node)) + "," + fmt(t.right(node)) + ")";
    };
    return fmt(t.root());
}

BinaryTree tree_from_triangulation(const Triangulation& t) {
    int n = t.polygon_size();
    // Sub-polygon over vertices a..b with base chord (a,b): its dual subtree
    // splits at the unique apex m joined to both a and b.
    std::function<BinaryTree(int, int)> build = [&](int a, int b) -> BinaryTree {
        if (b - a == 1) return BinaryTree::leaf(b);  // side {a,a+1} is leaf a+1
        int apex = -1;
        for (int m = a + 1; m < b; ++m) {
            if (t.has_edge(a, m) && t.has_edge(m, b)) {
                apex = m;
                break;
            }
        }
        if (apex < 0) throw VerificationError("no apex for chord in triangulation");
        return BinaryTree::join(build(a, apex), build(apex, b));
    };
    return build(0, n - 1);
}

Triangulation triangulation_from_tree(const BinaryTree& tree) {
    if (!tree.is_well_formed())
        throw InputError("malformed tree: leaves must read 1..k left to right");
    int n = tree.leaf_count() + 1;
    std::vector<Diagonal> diagonals;
    // Node covering leaves a+1..b spans the chord (a,b).
    std::function<int(int, int)> walk = [&](int node, int a) -> int {
        if (tree.is_leaf(node)) return a + 1;
        int m = walk(tree.left(node), a);
        int b = walk(tree.right(node), m);
        if (is_valid_diagonal(Diagonal(a, b), n) && !(a == 0 && b == n - 1))
            diagonals.emplace_back(a, b);
        return b;
    };
    walk(tree.root(), 0);
    return Triangulation(n, std::move(diagonals));
}

std::vector<std::pair<int, int>> internal_chords(const BinaryTree& tree) {
    std::vector<std::pair<int, int>> chords;
    std::function<int(int, int)> walk = [&](int node, int a) -> int {
        if (tree.is_leaf(node)) return a + 1;
        int m = walk(tree.left(node), a);
        int b = walk(tree.right(node), m);
        if (node != tree.root()) chords.emplace_back(a, b);
        return b;
    };
    walk(tree.root(), 0);
    std::sort(chords.begin(), chords.end());
    return chords;
}

}  // namespace colorgraph
