#pragma once

#include <cstdint>
#include <vector>

#include "treesearch/strategy.hpp"
#include "treesearch/tree.hpp"

namespace treesearch {

struct VertexExtension {
    std::int64_t rank = 0;
    std::vector<std::int64_t> sequence;  // values visible from the new vertex, decreasing
};

// Merges the children's visibility sequences: the new rank is the lowest
// integer above the largest duplicated value that appears in no child
// sequence; child values below the rank are blocked by the new vertex, so
// the merged sequence is the rank followed by the surviving larger values.
VertexExtension vertex_extension(const std::vector<std::vector<std::int64_t>>& child_sequences);

struct RankAssignment {
    VertexId root = kNoVertex;
    std::vector<std::int64_t> rank;                       // 1-indexed
    std::vector<std::vector<std::int64_t>> sequence;      // per vertex, decreasing
};

// Bottom-up ranking of the tree, weights ignored.  Equal ranks are always
// separated by a strictly higher rank on their connecting path, and the
// root's visibility sequence is minimal over all valid rankings.
RankAssignment rank_tree(const RootedView& rv);

// Query plan from a ranking: highest rank first in every candidate set.
DecisionTree ranks_to_decision_tree(const WeightedTree& t, const RankAssignment& ra);

// Separation property check, exhaustive over equal-rank pairs.
bool valid_rank_assignment(const WeightedTree& t, const std::vector<std::int64_t>& rank);

}  // namespace treesearch
