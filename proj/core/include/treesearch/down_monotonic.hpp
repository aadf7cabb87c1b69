#pragma once

#include <map>
#include <vector>

#include "treesearch/strategy.hpp"
#include "treesearch/tree.hpp"

namespace treesearch {

// Expands an interval sequence to granularity d: every [a,b) becomes the
// integers a/d .. b/d - 1, listed decreasing.  d must divide all endpoints.
std::vector<std::int64_t> expand_granularity(const std::vector<Interval>& sequence,
                                             std::int64_t d);

// The lowest slot for a vertex of weight w (a power of two) that clears all
// cross-child conflicts: strictly above the maximal interval appearing in
// one child sequence while intersecting another, aligned to multiples of w,
// of length w, and disjoint from every visible child interval.  With no
// children the slot is [0, w).
Interval greedy_interval(Weight w, const std::vector<std::vector<Interval>>& child_sequences);

struct DownResult {
    WeightedTree rounded;
    VertexId root = kNoVertex;
    StrategyFunction f;                               // valid on the rounded tree
    std::map<VertexId, std::vector<Interval>> sequence;  // visibility per vertex
    DecisionTree tree;
};

// Greedy aligned slots bottom-up over the rounding, rooted at the least-id
// valid down-monotonic root.  Exact on rounded inputs; a 2-approximation for
// arbitrary down-monotonic inputs when the plan is priced at the original
// weights.  Throws if the input is not down-monotonic.
DownResult solve_down_monotonic(const WeightedTree& t);

}  // namespace treesearch
