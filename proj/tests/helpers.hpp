#pragma once

#include <functional>
#include <vector>

#include "treesearch/strategy.hpp"
#include "treesearch/tree.hpp"

namespace treesearch::testing {

// path 1-2-...-n with the given weights
inline WeightedTree make_path(const std::vector<Weight>& weights) {
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId v = 2; v <= static_cast<VertexId>(weights.size()); ++v)
        edges.emplace_back(v - 1, v);
    return WeightedTree::create(static_cast<int>(weights.size()), weights, edges);
}

// vertex 1 is the center, leaves take the remaining weights
inline WeightedTree make_star(Weight center, const std::vector<Weight>& leaves) {
    std::vector<Weight> weights{center};
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (std::size_t i = 0; i < leaves.size(); ++i) {
        weights.push_back(leaves[i]);
        edges.emplace_back(1, static_cast<VertexId>(i + 2));
    }
    return WeightedTree::create(static_cast<int>(weights.size()), weights, edges);
}

// deterministic valid plan sampler: query a random candidate, recurse
inline DecisionTree random_decision_tree(const WeightedTree& t, std::uint64_t seed) {
    std::uint64_t state = seed ? seed : 1;
    auto next = [&state]() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    };
    std::vector<VertexId> parent(t.size() + 1, kNoVertex);
    std::function<VertexId(const std::vector<VertexId>&)> pick =
        [&](const std::vector<VertexId>& candidates) -> VertexId {
        VertexId q = candidates[next() % candidates.size()];
        std::vector<char> member(t.size() + 1, 0);
        for (VertexId v : candidates) member[v] = 1;
        for (const auto& comp : components_without(t, member, q)) parent[pick(comp)] = q;
        return q;
    };
    std::vector<VertexId> all(t.size());
    for (VertexId v = 1; v <= t.size(); ++v) all[v - 1] = v;
    VertexId root = pick(all);
    return make_decision_tree(t.size(), root, std::move(parent));
}

// worst-case cost measured the slow way: simulate every target
inline Weight cost_by_simulation(const WeightedTree& t, const DecisionTree& d) {
    Weight worst = 0;
    for (VertexId target = 1; target <= t.size(); ++target)
        worst = std::max(worst, simulate(t, d, target).total_cost);
    return worst;
}

}  // namespace treesearch::testing
