#include <doctest.h>

#include <algorithm>
#include <array>
#include <map>
#include <set>

#include "colorgraph/coloring.hpp"
#include "colorgraph/colorgraph.hpp"
#include "colorgraph/vine.hpp"

using namespace colorgraph;

TEST_CASE("klein group law") {
    CHECK(klein_add(1, 2) == 3);
    CHECK(klein_add(2, 2) == 0);
    CHECK(klein_add(0, 3) == 3);
    CHECK(klein_add(klein_add(1, 2), 3) == 0);
    for (Klein a = 0; a < 4; ++a) {
        CHECK(klein_add(a, a) == 0);
        for (Klein b = 0; b < 4; ++b) CHECK(klein_add(a, b) == klein_add(b, a));
    }
}

TEST_CASE("coloring parse and properness") {
    PolygonColoring c = PolygonColoring::parse("0,1,0,3,0,2");
    CHECK(c.polygon_size() == 6);
    CHECK(c.to_text() == "0,1,0,3,0,2");
    CHECK_THROWS_AS(PolygonColoring::parse("0,1,1,2"), InputError);   // adjacent equal
    CHECK_THROWS_AS(PolygonColoring::parse("0,1,2,0"), InputError);   // wrap-around equal
    CHECK_THROWS_AS(PolygonColoring::parse("0,1,4"), InputError);     // out of range
    CHECK_THROWS_AS(PolygonColoring::parse("0,1"), InputError);       // too short
    CHECK_THROWS_AS(PolygonColoring::parse("0,,1"), InputError);
}

TEST_CASE("color vector") {
    CHECK(color_vector(PolygonColoring::parse("0,1,2")) == ColorVector{1, 3});
    CHECK(color_vector(PolygonColoring::parse("0,1,0,3,0,2")) == ColorVector{1, 1, 3, 3, 2});

    // Equivariance under a color permutation fixing 0 (here 2 <-> 3).
    PolygonColoring swapped = PolygonColoring::parse("0,1,0,2,0,3");
    ColorVector base = color_vector(PolygonColoring::parse("0,1,0,3,0,2"));
    ColorVector mapped = color_vector(swapped);
    std::array<Klein, 4> sigma{0, 1, 3, 2};
    for (std::size_t i = 0; i < base.size(); ++i) CHECK(mapped[i] == sigma[base[i]]);
}

TEST_CASE("compatibility") {
    PolygonColoring c = PolygonColoring::parse("0,1,0,3,0,2");
    CHECK(is_compatible(c, Triangulation::fan(6, 1)));
    CHECK_FALSE(is_compatible(c, Triangulation::fan(6, 0)));
    PolygonColoring square = PolygonColoring::parse("0,1,2,3");
    for (const auto& t : enumerate_triangulations(4)) CHECK(is_compatible(square, t));
    CHECK_THROWS_AS(is_compatible(square, Triangulation::fan(6, 0)), InputError);
}

TEST_CASE("validity on trees") {
    BinaryTree cherry = BinaryTree::join(BinaryTree::leaf(1), BinaryTree::leaf(2));
    CHECK(is_valid(ColorVector{1, 3}, cherry));
    CHECK_FALSE(is_valid(ColorVector{1, 1}, cherry));
    CHECK_THROWS_AS(is_valid(ColorVector{1, 2, 3}, cherry), InputError);
    CHECK_THROWS_AS(is_valid(ColorVector{1, 0}, cherry), InputError);

    BinaryTree fan_tree = tree_from_triangulation(Triangulation::fan(6, 1));
    CHECK(is_valid(ColorVector{1, 1, 3, 3, 2}, fan_tree));
}

TEST_CASE("compatibility equals validity through the duality") {
    for (int n = 4; n <= 7; ++n) {
        auto triangulations = enumerate_triangulations(n);
        for (const auto& cls : enumerate_coloring_classes(n)) {
            ColorVector vec = color_vector(cls.representative);
            for (const auto& t : triangulations)
                CHECK(is_compatible(cls.representative, t) ==
                      is_valid(vec, tree_from_triangulation(t)));
        }
    }
}

TEST_CASE("canonicalization") {
    PolygonColoring c = PolygonColoring::parse("0,1,0,3,0,2");
    PolygonColoring canon = canonicalize_coloring(c);
    CHECK(canonicalize_coloring(canon) == canon);  // idempotent
    // Rotation by two and a 2<->3 color swap stay in the class.
    CHECK(canonicalize_coloring(PolygonColoring::parse("0,3,0,2,0,1")) == canon);
    CHECK(canonicalize_coloring(PolygonColoring::parse("0,1,0,2,0,3")) == canon);
    // Distinct classes stay distinct.
    PolygonColoring p2 = PolygonColoring::parse("1,0,1,0,3,2");
    PolygonColoring p3 = PolygonColoring::parse("2,0,1,0,2,3");
    CHECK_FALSE(canonicalize_coloring(p2) == canonicalize_coloring(p3));
}

TEST_CASE("class enumeration") {
    // Non-rigid square classes: just the all-distinct coloring.
    int nonrigid = 0;
    for (const auto& cls : enumerate_coloring_classes(4)) {
        ColorGraph g = build_color_graph(cls.representative);
        if (g.graph.size() > 0) {
            ++nonrigid;
            CHECK(cls.partition == std::vector<int>{1, 1, 1, 1});
        }
    }
    CHECK(nonrigid == 1);

    for (int n = 4; n <= 8; ++n) {
        long long total = 0;
        std::set<std::string> reps;
        for (const auto& cls : enumerate_coloring_classes(n)) {
            total += cls.orbit_size;
            reps.insert(cls.representative.to_text());
            CHECK(canonicalize_coloring(cls.representative) == cls.representative);
        }
        CHECK(total == proper_coloring_count(n));
        CHECK(reps.size() == enumerate_coloring_classes(n).size());
    }

    // The two-color hexagon class exists and is annotated as using 2 colors.
    bool found = false;
    for (const auto& cls : enumerate_coloring_classes(6))
        if (cls.representative == canonicalize_coloring(PolygonColoring::parse("0,1,0,1,0,1"))) {
            found = true;
            CHECK(cls.partition == std::vector<int>{3, 3});
            CHECK(cls.colors_used() == 2);
        }
    CHECK(found);
}

TEST_CASE("vine class detection") {
    CHECK(is_vine_class(PolygonColoring::parse("0,1,2,3,2,3,0,1")) == std::make_pair(3, 3));
    CHECK(is_vine_class(PolygonColoring::parse("0,1,0,2,3,2,0,1")) == std::make_pair(2, 4));
    CHECK_FALSE(is_vine_class(PolygonColoring::parse("0,1,0,3,0,2")).has_value());

    // Round-trip: the constructed vine coloring is detected with the same shape.
    for (int p = 0; p <= 4; ++p)
        for (int q = std::max(p, 1); p + q + 2 >= 3 && q <= 4; ++q)
            CHECK(is_vine_class(vine_coloring(p, q)) == std::make_pair(p, q));
}
