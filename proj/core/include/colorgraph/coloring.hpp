#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "colorgraph/klein.hpp"
#include "colorgraph/polygon.hpp"
#include "colorgraph/tree.hpp"

namespace colorgraph {

// Proper coloring of the polygon cycle with Klein elements: adjacent vertices
// (cyclically) get distinct colors.
class PolygonColoring {
  public:
    explicit PolygonColoring(std::vector<Klein> colors);

    int polygon_size() const { return static_cast<int>(colors_.size()); }
    Klein color(int v) const { return colors_[v]; }
    const std::vector<Klein>& colors() const { return colors_; }

    // Comma-separated digits, index 0 first, e.g. "0,1,0,3,0,2".
    static PolygonColoring parse(std::string_view text);
    std::string to_text() const;

    bool operator==(const PolygonColoring&) const = default;
    bool operator<(const PolygonColoring& o) const { return colors_ < o.colors_; }

  private:
    std::vector<Klein> colors_;
};

// Sequence of n-1 nonzero Klein elements: the leaf colors of the dual tree,
// the side {n-1,0} being the omitted root side.
using ColorVector = std::vector<Klein>;

ColorVector color_vector(const PolygonColoring& c);

// True iff every diagonal of t joins differently colored vertices.
bool is_compatible(const PolygonColoring& c, const Triangulation& t);

// True iff v extends to a proper three-coloring of the tree edges: at every
// internal node the two child edge colors differ (their sum goes upward).
bool is_valid(const ColorVector& v, const BinaryTree& tree);

// Lexicographic minimum of the orbit under the dihedral group of the polygon
// and all 24 permutations of the four colors. Idempotent, constant on orbits.
PolygonColoring canonicalize_coloring(const PolygonColoring& c);

struct ColoringClass {
    PolygonColoring representative;  // canonical form
    long orbit_size = 0;             // distinct colorings in the orbit
    std::vector<int> partition;      // color multiplicities, descending

    int colors_used() const { return static_cast<int>(partition.size()); }
};

// One canonical representative per orbit of proper colorings, ordered by
// partition (descending) then by canonical form.
std::vector<ColoringClass> enumerate_coloring_classes(int n);

// If some presentation of the color vector (over all root sides, both
// orientations and all color permutations) reads 1^p 2 1^q, the pair (p,q)
// with p <= q; otherwise nullopt. Constant on coloring classes.
std::optional<std::pair<int, int>> is_vine_class(const PolygonColoring& c);

// Number of proper colorings of the n-cycle with 4 colors: 3^n + 3 (-1)^n.
long long proper_coloring_count(int n);

}  // namespace colorgraph
