#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "colorgraph/graph.hpp"

namespace colorgraph {

inline constexpr std::chrono::milliseconds kDefaultLatticeBudget{30000};

// Injective placement of the vertices on integer points of Z^dim with every
// edge a unit step; coordinates are translated so each axis starts at 0.
struct LatticeEmbedding {
    int dim = 0;
    std::vector<std::vector<int>> points;  // one per vertex
    std::vector<int> box;                  // extent (number of unit steps) per axis
};

enum class SearchStatus { Found, None, Unknown };

std::string to_string(SearchStatus s);

struct LatticeSearchResult {
    SearchStatus status = SearchStatus::None;
    std::optional<LatticeEmbedding> embedding;
    long long nodes = 0;
    // False when a smaller candidate box timed out before this embedding was
    // found, so minimality is unconfirmed.
    bool minimal_confirmed = true;
};

// Backtracking search for an embedding of g into Z^dim. With a box the
// search is exhaustive inside it; without one the extent per axis is bounded
// by the graph diameter, which any embedding satisfies. Exceeding the budget
// yields Unknown, never a coerced answer.
LatticeSearchResult lattice_embed_search(
    const Graph& g, int dim, std::optional<std::vector<int>> box = std::nullopt,
    std::chrono::milliseconds budget = kDefaultLatticeBudget);

// Tries candidate boxes in increasing size (lattice points, then extents)
// and returns the first that admits an embedding.
LatticeSearchResult smallest_box_embedding(
    const Graph& g, int dim, std::chrono::milliseconds budget = kDefaultLatticeBudget);

// Re-verification used on every returned embedding: injectivity plus one
// unit step per edge.
bool verify_lattice_embedding(const Graph& g, const LatticeEmbedding& emb);

}  // namespace colorgraph
