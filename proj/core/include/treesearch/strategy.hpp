#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "treesearch/interval.hpp"
#include "treesearch/tree.hpp"

namespace treesearch {

// Maps each vertex in scope to its query time slot.  The key set is the
// scope; during bottom-up passes it may cover only a subtree.
using StrategyFunction = std::map<VertexId, Interval>;

// Adaptive query plan: a rooted tree over the searched tree's vertex set.
// The candidate set of a node is exactly the node set of its subtree.
struct DecisionTree {
    VertexId root = kNoVertex;
    std::vector<VertexId> parent;                 // 1-indexed, parent[root] == kNoVertex
    std::vector<std::vector<VertexId>> children;  // ascending id

    int size() const { return static_cast<int>(parent.size()) - 1; }
    std::vector<VertexId> subtree_nodes(VertexId v) const;  // ascending

    bool operator==(const DecisionTree&) const = default;
};

// Builds the tree from a parent map and checks it spans 1..n.
DecisionTree make_decision_tree(int n, VertexId root, std::vector<VertexId> parent);

// Checks the full candidate-set semantics against t: nodes are exactly V(t),
// and the children of every node are the first queries of the connected
// components left after removing it from the node's candidate set.
bool is_valid_decision_tree(const WeightedTree& t, const DecisionTree& d,
                            std::string* why = nullptr);

struct StrategyVerdict {
    bool valid = true;
    VertexId v1 = kNoVertex;  // witnessing pair when invalid (v1 == v2 for a
    VertexId v2 = kNoVertex;  // slot shorter than the vertex weight)
    std::string reason;
};

// Definition check for a strategy function on the whole tree: every slot is
// at least as long as the vertex weight, and any two intersecting slots have
// a vertex with a strictly higher slot on their connecting path.
// Throws if f is not total on V(t).
StrategyVerdict validate_strategy_function(const WeightedTree& t, const StrategyFunction& f);

// Extracts the decision tree encoded by a valid strategy function: in every
// connected candidate set the unique vertex whose slot has the maximal right
// endpoint is queried first.  A duplicated maximum means f was invalid and
// raises std::logic_error.
DecisionTree strategy_to_decision_tree(const WeightedTree& t, const StrategyFunction& f);

// Inverse construction: subtrees receive slots first, then each node is
// placed directly above everything below it in its candidate set.  The
// result is valid and extracts back to exactly d.
StrategyFunction decision_tree_to_strategy(const WeightedTree& t, const DecisionTree& d);

// Worst-case cost of the plan under an arbitrary weight map (1-indexed):
// maximum over root-to-leaf paths of the sum of weights on the path.
Weight decision_tree_cost(const DecisionTree& d, const std::vector<Weight>& w);
Weight decision_tree_cost(const DecisionTree& d, const WeightedTree& t);

// Plan for the induced subtree on `sub` (connected), never costlier than d
// under any weight map.  Splices non-members out of d.
DecisionTree restrict_decision_tree(const WeightedTree& t, const DecisionTree& d,
                                    const std::vector<VertexId>& sub);

struct SimulationStep {
    VertexId vertex = kNoVertex;
    Weight cost = 0;
    bool found = false;
    VertexId toward = kNoVertex;  // the answering neighbor when not found
};

struct SimulationTrace {
    VertexId target = kNoVertex;
    std::vector<SimulationStep> queries;
    Weight total_cost = 0;
};

// Runs the plan against the oracle for one target: walks d from the root,
// descending into the child whose candidate set contains the target.
SimulationTrace simulate(const WeightedTree& t, const DecisionTree& d, VertexId target);

// Slots visible from v within its rooted subtree, in decreasing order.
// A vertex u below v is blocked when any vertex on the path from u up to and
// including v has a slot strictly above u's.  f must cover the subtree of v.
std::vector<Interval> visibility_sequence(const RootedView& rv, const StrategyFunction& f,
                                          VertexId v);

// The screening neighborhood of v: v itself, every vertex reachable along
// paths free of screening vertices, and the screening vertices themselves
// (the first strictly-higher slot met in each direction).  f must be total.
std::vector<VertexId> screening_neighborhood(const WeightedTree& t, const StrategyFunction& f,
                                             VertexId v);

}  // namespace treesearch
