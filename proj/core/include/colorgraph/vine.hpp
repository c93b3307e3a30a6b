#pragma once

#include <vector>

#include "colorgraph/coloring.hpp"
#include "colorgraph/tree.hpp"

namespace colorgraph {

long long binomial(int a, int b);

// Coloring whose color vector is literally 1^p 2 1^q under the root
// convention (side {n-1,0} omitted), with n = p+q+2.
PolygonColoring vine_coloring(int p, int q);

// A vine for 1^p 2 1^q has a central path from the root to leaf p+1 with all
// other leaves attached directly to it.
bool is_vine_tree(const BinaryTree& tree, int p, int q);

// Coordinates (x_1..x_p) of a vine: x_i counts the right leaves attached
// above the i-th left leaf. Always 0 <= x_1 <= ... <= x_p <= q; bijective
// with the vines of shape (p,q). Throws InputError when tree is not one.
std::vector<int> vine_coordinates(const BinaryTree& tree, int p, int q);

// Inverse of vine_coordinates.
BinaryTree vine_from_coordinates(const std::vector<int>& x, int p, int q);

// All integer points 0 <= x_1 <= ... <= x_p <= q, lexicographically sorted.
std::vector<std::vector<int>> simplex_points(int p, int q);

// Builds the color graph realizing 1^p 2 1^q, maps its vertices through
// vine_coordinates, and checks the bijection onto the simplex point set and
// that graph edges coincide with lattice adjacency.
bool verify_vine_isomorphism(int p, int q, int cap = kDefaultPolygonCap);

}  // namespace colorgraph
