#pragma once

#include <map>
#include <set>
#include <vector>

#include "treesearch/monotonic.hpp"
#include "treesearch/strategy.hpp"
#include "treesearch/tree.hpp"

namespace treesearch {

// Lifts the slot of a component root minimally above every slot assigned
// below it in its subtree; leaves an already structured slot in place.
void structuring_operator(const RootedView& rv, StrategyFunction& f, VertexId v);

// Realigns a component root's slot to the width of the layer directly
// above: the result has length `width_above` and ends at the least multiple
// of `width_above` at or after the old end.  May pad leftward below the old
// start.  The old slot must span consecutive multiples of `own_weight`.
Interval cost_scaling_operator(Interval slot, Weight own_weight, Weight width_above);

// Mutable bottom-up solver state shared across component passes.
struct UpState {
    StrategyFunction f;                                       // evolving slots
    std::map<VertexId, std::int64_t> slot_index;              // per-vertex rank in layer units
    std::map<VertexId, std::vector<std::int64_t>> sequence;   // in-component merged sequences
    std::map<VertexId, std::vector<VertexId>> plan_children;  // final plan fragments
    std::set<int> processed;                                  // component ids
    VertexId plan_root = kNoVertex;                           // set by the top component
};

// One pass of the bottom-up algorithm: ranks the component's vertices with
// the vertex extension operator over in-component sequences and the slot
// indices of the directly-below roots, converts ranks to slots, assembles
// the component's plan fragment (component root on top unless it is the tree
// root), and finishes a non-top root with structuring plus cost scaling.
// All components directly below must be processed already.
void process_component(const LayerDecomposition& ld, int component_id, UpState& state);

struct UpResult {
    WeightedTree rounded;
    VertexId root = kNoVertex;
    LayerDecomposition layers;
    StrategyFunction f;
    std::map<VertexId, std::int64_t> slot_index;
    DecisionTree tree;
    Weight bound = 0;  // certified upper bound: sup of all assigned slots
};

// The bottom-up approximation for up-monotonic cost functions: rounds,
// roots at the least-id valid root, processes layer components bottom-up.
// The returned plan costs at most `bound` under the original weights.
UpResult solve_up_monotonic(const WeightedTree& t);

// Whether every layer-component root dominates its whole subtree inside the
// plan.  `include_top` additionally requires it of the top component (the
// solver's own output intentionally exempts it).
bool is_structured_decision_tree(const WeightedTree& rounded, const DecisionTree& d,
                                 bool include_top = true);

// Rebuilds d so that every layer-component root sits above its entire
// subtree, splicing top-down; at most doubles the cost.
DecisionTree structure_decision_tree(const WeightedTree& rounded, const DecisionTree& d);

}  // namespace treesearch
