#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "colorgraph/errors.hpp"

namespace colorgraph {

inline constexpr int kDefaultPolygonCap = 12;

// Chord of the n-gon between two non-adjacent vertices, stored as (a,b) with a < b.
struct Diagonal {
    int a = 0;
    int b = 0;

    Diagonal() = default;
    Diagonal(int i, int j) : a(i < j ? i : j), b(i < j ? j : i) {}

    auto operator<=>(const Diagonal&) const = default;
};

bool is_valid_diagonal(const Diagonal& d, int n);

// True iff the two diagonals properly cross inside the n-gon: no shared
// endpoint and exactly one endpoint of b strictly inside one of the two open
// arcs cut by a. Throws InputError on degenerate input.
bool diagonals_cross(const Diagonal& a, const Diagonal& b, int n);

std::string to_string(const Diagonal& d);

// Maximal set of pairwise noncrossing diagonals of the n-gon, kept sorted so
// equality and ordering are structural.
class Triangulation {
  public:
    Triangulation(int n, std::vector<Diagonal> diagonals);

    int polygon_size() const { return n_; }
    const std::vector<Diagonal>& diagonals() const { return diagonals_; }
    bool contains(const Diagonal& d) const;
    // Polygon side or diagonal of this triangulation.
    bool has_edge(int u, int v) const;

    // Fan triangulation: all diagonals from one apex vertex.
    static Triangulation fan(int n, int apex);

    auto operator<=>(const Triangulation&) const = default;

  private:
    int n_;
    std::vector<Diagonal> diagonals_;
};

std::string to_string(const Triangulation& t);

// Replaces d by the opposite diagonal of the quadrilateral formed by the two
// triangles adjacent to d. An involution.
Triangulation flip(const Triangulation& t, const Diagonal& d);

// The diagonal produced by flipping d in t, without building the new triangulation.
Diagonal flipped_diagonal(const Triangulation& t, const Diagonal& d);

// All n-3 triangulations one flip away, in diagonal order of t.
std::vector<Triangulation> flip_neighbors(const Triangulation& t);

// Every triangulation of the n-gon, in a deterministic order given by the
// recursive ear decomposition over the base side {n-1,0} with ascending apex.
std::vector<Triangulation> enumerate_triangulations(int n);

// Flip graph on all triangulations of the n-gon: the associahedron skeleton.
struct FlipGraph {
    int n = 0;
    std::vector<Triangulation> vertices;
    std::vector<std::pair<int, int>> edges;  // u < v, sorted
    std::vector<std::vector<int>> adjacency;

    // Index of t in `vertices`, or -1.
    int index_of(const Triangulation& t) const;

  private:
    friend FlipGraph build_associahedron(int n, int cap);
    std::vector<int> sorted_order_;  // vertex indices sorted by triangulation
};

FlipGraph build_associahedron(int n, int cap = kDefaultPolygonCap);

}  // namespace colorgraph
