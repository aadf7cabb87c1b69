#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "treesearch/strategy.hpp"
#include "treesearch/tree.hpp"

namespace treesearch {

// Hard cap for the exponential oracles.
constexpr int kOracleVertexCap = 18;
constexpr int kEdgeOracleEdgeCap = 12;

struct OptResult {
    Weight cost = 0;      // minimum worst-case search cost
    DecisionTree tree;    // an optimal plan attaining it (ties by least id)
};

// Exact min-max search over connected candidate sets, memoized on bitmasks.
// A singleton candidate set costs the weight of its vertex: the final query
// that confirms the target is charged.  Requires t.size() <= 18.
OptResult opt_cost(const WeightedTree& t);

// Undirected edge-weighted tree for the edge-query search model.
class EdgeWeightedTree {
  public:
    struct Edge {
        VertexId u = 0, v = 0;  // normalized u < v
        Weight cost = 1;
        bool operator==(const Edge&) const = default;
    };

    EdgeWeightedTree() = default;
    static EdgeWeightedTree create(int n, std::vector<Edge> edges);

    int size() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& incident_edges(VertexId v) const { return incident_[v]; }

    bool operator==(const EdgeWeightedTree&) const = default;

  private:
    int n_ = 0;
    std::vector<Edge> edges_;            // sorted by (u, v)
    std::vector<std::vector<int>> incident_;  // vertex -> edge indices
};

// Querying an edge tells which side of it holds the target; a singleton
// candidate set costs nothing (the target is identified, there is no vertex
// to query in this model).  Requires <= 12 edges.
Weight edge_opt_cost(const EdgeWeightedTree& t);

// The node-weighted image of an edge instance: every original vertex gets
// weight M = 1 + sum of edge costs, every edge becomes a midpoint vertex
// inheriting the edge cost.  Midpoint ids follow the sorted edge order after
// the originals.  Output has 2n-1 vertices.
WeightedTree subdivide_edge_tree(const EdgeWeightedTree& t);

// M as used by the subdivision.
Weight subdivision_heavy_weight(const EdgeWeightedTree& t);

}  // namespace treesearch
