#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "colorgraph/catalog.hpp"

namespace colorgraph {

// Facts pinned per labelled class of the n = 6, 7, 8 catalogs. Fields left
// at -1 / nullopt are not asserted for that label.
struct LabelFacts {
    std::string label;
    std::string coloring;  // committed representative for the label
    std::vector<int> partition;
    std::optional<std::pair<int, int>> vine;  // the vine table is exhaustive
    int order = -1;
    int size = -1;
    int diameter = -1;
};

struct AppendixFacts {
    int n = 0;
    int nonrigid_count = 0;
    std::vector<LabelFacts> labels;
    std::vector<std::vector<std::string>> iso_groups;  // the only non-singletons
    std::vector<std::pair<std::string, std::string>> subgraph_pairs;      // pattern, host
    std::vector<std::pair<std::string, std::string>> non_subgraph_pairs;  // pattern, host
    std::vector<std::string> not_partial_cube;  // exactly these labels fail
    // Labels whose diameter exceeds the largest vine diameter, and that value.
    std::vector<std::string> diameter_exceeding;
    int exceeded_diameter = -1;
    // Every class embeds in dimension floor((n-2)/2) within one of these boxes.
    std::vector<std::vector<int>> allowed_boxes;
};

const AppendixFacts& appendix_facts(int n);

struct SuiteResult {
    std::string name;
    bool passed = true;
    std::string detail;  // counterexample or summary
    double seconds = 0.0;
};

struct VerifyOptions {
    int cap = kDefaultPolygonCap;
    std::chrono::milliseconds lattice_budget = kDefaultLatticeBudget;
    // Deliberately corrupts one golden expectation; the run must then fail.
    bool corrupt_fixture = false;
};

// Runs every invariant suite over polygon sizes lo..hi.
std::vector<SuiteResult> run_verification(int lo, int hi, const VerifyOptions& options = {});

}  // namespace colorgraph
