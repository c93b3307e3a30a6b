#pragma once

#include <string>
#include <vector>

#include "colorgraph/polygon.hpp"

namespace colorgraph {

// Rooted binary tree with leaves labelled 1..k in left-to-right order; the
// dual of a polygon triangulation rooted at side {n-1,0}.
class BinaryTree {
  public:
    struct Node {
        int left = -1;
        int right = -1;
        int leaf = -1;  // leaf label, or -1 for internal nodes
    };

    static BinaryTree leaf(int label);
    static BinaryTree join(const BinaryTree& left, const BinaryTree& right);

    int root() const { return root_; }
    bool is_leaf(int node) const { return nodes_[node].leaf >= 0; }
    int leaf_label(int node) const { return nodes_[node].leaf; }
    int left(int node) const { return nodes_[node].left; }
    int right(int node) const { return nodes_[node].right; }
    int leaf_count() const { return leaf_count_; }
    int node_count() const { return static_cast<int>(nodes_.size()); }

    // Leaf labels in left-to-right order.
    std::vector<int> leaf_sequence() const;
    // True iff the tree has leaves labelled exactly 1..k left to right.
    bool is_well_formed() const;

    bool operator==(const BinaryTree& other) const;

  private:
    std::vector<Node> nodes_;
    int root_ = -1;
    int leaf_count_ = 0;
};

// Textual form, e.g. "((1,2),3)".
std::string to_string(const BinaryTree& t);

// Dual tree of t: leaves 1..n-1 correspond to polygon sides {0,1}..{n-2,n-1},
// the root edge to side {n-1,0}.
BinaryTree tree_from_triangulation(const Triangulation& t);

// Inverse of tree_from_triangulation.
Triangulation triangulation_from_tree(const BinaryTree& tree);

// Chords (a,b) spanned by the internal non-root nodes of the dual tree; two
// trees one rotation apart differ in exactly one chord.
std::vector<std::pair<int, int>> internal_chords(const BinaryTree& tree);

}  // namespace colorgraph
