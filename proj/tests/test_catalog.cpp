#include <doctest.h>

#include <fstream>
#include <set>

#include <json.hpp>

#include "colorgraph/catalog.hpp"
#include "colorgraph/verify.hpp"

using namespace colorgraph;
using nlohmann::json;

#ifndef COLORGRAPH_FIXTURE_DIR
#define COLORGRAPH_FIXTURE_DIR "tests/fixtures"
#endif

TEST_CASE("reference labels are proper and pairwise inequivalent") {
    for (int n : {6, 7, 8}) {
        const auto& labels = reference_labels(n);
        CHECK(labels.size() == (n == 6 ? 5u : n == 7 ? 7u : 26u));
        std::set<std::string> canon;
        for (const auto& [label, text] : labels) {
            PolygonColoring c = PolygonColoring::parse(text);
            CHECK(c.polygon_size() == n);
            canon.insert(canonicalize_coloring(c).to_text());
        }
        CHECK(canon.size() == labels.size());
    }
    CHECK(reference_labels(5).empty());
}

TEST_CASE("hexagon catalog") {
    Catalog catalog = build_catalog(6);
    REQUIRE(catalog.entries.size() == 5);
    CHECK(catalog.nonrigid == 5);
    CHECK(catalog.four_color_classes_all_nonrigid);
    CHECK(catalog.nonrigid_classes_all_use_four_colors);
    CHECK(catalog.entries[0].class_id == "6-1");
    CHECK(catalog.entries[0].partition == std::vector<int>{3, 1, 1, 1});
    for (int i = 1; i < 5; ++i)
        CHECK(catalog.entries[i].partition == std::vector<int>{2, 2, 1, 1});
    // Labels 3 and 5 share an isomorphism group led by 3.
    CHECK(catalog.entries[2].iso_group == "3");
    CHECK(catalog.entries[4].iso_group == "3");
    CHECK(catalog.entries[1].iso_group == "2");

    Catalog with_rigid = build_catalog(6, CatalogOptions{true, kDefaultPolygonCap,
                                                         kDefaultLatticeBudget});
    CHECK(with_rigid.entries.size() ==
          static_cast<std::size_t>(with_rigid.total_classes));
    CHECK(with_rigid.rigid + with_rigid.empty + with_rigid.nonrigid == with_rigid.total_classes);
    bool saw_rigid = false;
    for (const auto& entry : with_rigid.entries)
        if (entry.classification == "rigid") {
            saw_rigid = true;
            CHECK(entry.label[0] == 'r');
            CHECK(entry.colors_used <= 3);
        }
    CHECK(saw_rigid);
}

TEST_CASE("catalog json is deterministic and round-trips") {
    Catalog a = build_catalog(6);
    Catalog b = build_catalog(6);
    std::string ja = catalog_json(a);
    CHECK(ja == catalog_json(b));
    CHECK(catalog_csv(a) == catalog_csv(b));

    json parsed = json::parse(ja);
    REQUIRE(parsed["entries"].size() == 5);
    for (const auto& je : parsed["entries"]) {
        CatalogEntry rebuilt = build_entry_for_coloring(
            PolygonColoring::parse(je["coloring"].get<std::string>()),
            je["label"].get<std::string>());
        CHECK(rebuilt.coloring == je["coloring"]);
        CHECK(rebuilt.order == je["order"].get<int>());
        CHECK(rebuilt.size == je["size"].get<int>());
        CHECK(rebuilt.orbit_size == je["orbit_size"].get<long>());
        CHECK(rebuilt.classification == je["classification"]);
        if (je["vine"].is_null())
            CHECK_FALSE(rebuilt.vine.has_value());
        else
            CHECK(rebuilt.vine == std::make_pair(je["vine"]["p"].get<int>(),
                                                 je["vine"]["q"].get<int>()));
        CHECK(rebuilt.hypercube.dimension == je["hypercube"]["dimension"].get<int>());
        CHECK(rebuilt.partial_cube.status == je["partial_cube"]["status"]);
        if (je["lattice"]["status"] == "found")
            CHECK(rebuilt.lattice.box == je["lattice"]["box"].get<std::vector<int>>());
    }
}

TEST_CASE("csv and dot outputs") {
    Catalog catalog = build_catalog(6);
    std::string csv = catalog_csv(catalog);
    CHECK(csv.find("class_id,coloring") == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 6);  // header + 5 rows

    std::string dot = entry_dot(catalog.entries[0]);
    CHECK(dot.find("graph \"6-1\"") != std::string::npos);
    CHECK(dot.find("--") != std::string::npos);
    CHECK(dot.find("{1,3}") != std::string::npos);
}

TEST_CASE("embedded appendix facts agree with the committed fixtures") {
    for (int n : {6, 7, 8}) {
        std::ifstream in(std::string(COLORGRAPH_FIXTURE_DIR) + "/appendix_n" + std::to_string(n) +
                         ".json");
        REQUIRE(in.good());
        json fixture = json::parse(in);
        const AppendixFacts& facts = appendix_facts(n);
        CHECK(fixture["n"].get<int>() == facts.n);
        CHECK(fixture["nonrigid_count"].get<int>() == facts.nonrigid_count);
        REQUIRE(fixture["labels"].size() == facts.labels.size());
        for (std::size_t i = 0; i < facts.labels.size(); ++i) {
            const json& jf = fixture["labels"][i];
            const LabelFacts& lf = facts.labels[i];
            CHECK(jf["label"] == lf.label);
            CHECK(jf["coloring"] == lf.coloring);
            CHECK(jf["partition"].get<std::vector<int>>() == lf.partition);
            if (jf["vine"].is_null())
                CHECK_FALSE(lf.vine.has_value());
            else
                CHECK(lf.vine == std::make_pair(jf["vine"][0].get<int>(),
                                                jf["vine"][1].get<int>()));
            CHECK(jf["order"].get<int>() == lf.order);
            CHECK(jf["size"].get<int>() == lf.size);
            CHECK(jf["diameter"].get<int>() == lf.diameter);
        }
        CHECK(fixture["not_partial_cube"].get<std::vector<std::string>>() ==
              facts.not_partial_cube);
        CHECK(fixture["diameter_exceeding"].get<std::vector<std::string>>() ==
              facts.diameter_exceeding);
        CHECK(fixture["exceeded_diameter"].get<int>() == facts.exceeded_diameter);
        CHECK(fixture["allowed_boxes"].get<std::vector<std::vector<int>>>() ==
              facts.allowed_boxes);
        CHECK(fixture["iso_groups"].get<std::vector<std::vector<std::string>>>() ==
              facts.iso_groups);
        std::vector<std::pair<std::string, std::string>> sub, nonsub;
        for (const auto& p : fixture["subgraph_pairs"]) sub.emplace_back(p[0], p[1]);
        for (const auto& p : fixture["non_subgraph_pairs"]) nonsub.emplace_back(p[0], p[1]);
        CHECK(sub == facts.subgraph_pairs);
        CHECK(nonsub == facts.non_subgraph_pairs);
    }
}

TEST_CASE("verification runner") {
    auto results = run_verification(4, 6);
    CHECK(results.size() >= 20);
    for (const auto& r : results) {
        INFO(r.name << ": " << r.detail);
        CHECK(r.passed);
    }

    VerifyOptions corrupt;
    corrupt.corrupt_fixture = true;
    auto corrupted = run_verification(6, 6, corrupt);
    bool goldens_failed = false;
    for (const auto& r : corrupted)
        if (r.name == "appendix-goldens") {
            goldens_failed = !r.passed;
            CHECK(r.detail.find("label") != std::string::npos);
        }
    CHECK(goldens_failed);

    CHECK_THROWS_AS(run_verification(8, 4), InputError);
    CHECK_THROWS_AS(run_verification(4, 20), ResourceError);
}
