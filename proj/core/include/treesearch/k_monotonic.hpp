#pragma once

#include <utility>
#include <vector>

#include "treesearch/monotonic.hpp"
#include "treesearch/strategy.hpp"
#include "treesearch/tree.hpp"

namespace treesearch {

// Boundary edges of a root subtree: pairs (member with a child outside,
// that child), sorted.  These are exactly the points where deeper search
// strategies are stitched in.
std::vector<std::pair<VertexId, VertexId>> exit_targets(const RootedView& rv,
                                                        const std::vector<VertexId>& t_prime);

// One recursion level of the composed solver.
struct StitchedLevel {
    int label = 0;                   // partition class solved at this level
    int depth = 1;                   // recursion depth, 1-based
    Weight bound = 0;                // certified bound of the sub-solver
    std::vector<VertexId> vertices;  // the root subtree it covered, ascending
};

// A single static plan for the whole tree assembled from monotone
// sub-strategies, with per-vertex provenance.
struct StitchedStrategy {
    DecisionTree tree;
    std::vector<int> level_of;  // vertex -> index into levels
    std::vector<StitchedLevel> levels;
    int max_depth = 0;  // never exceeds the partition's k
};

// Solves each partition class with the matching monotone solver (down for
// down or uniform classes, up otherwise) over the rounding, and attaches the
// recursively solved hanging subtrees where the oracle answers exit the
// current root subtree.  The input partition is re-validated.
StitchedStrategy solve_k_monotonic(const WeightedTree& t, const KPartition& part);

}  // namespace treesearch
