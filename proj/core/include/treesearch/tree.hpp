#pragma once

#include <utility>
#include <vector>

#include "treesearch/common.hpp"

namespace treesearch {

// Undirected tree on vertices 1..n with positive integer query costs.
// Immutable after construction; all operations on it are pure.
class WeightedTree {
  public:
    WeightedTree() = default;  // empty placeholder, size() == 0

    // Validates everything: n >= 1, weights positive, exactly n-1 edges over
    // known vertex ids, no duplicate or self edges, connected and acyclic.
    static WeightedTree create(int n, std::vector<Weight> weights,
                               std::vector<std::pair<VertexId, VertexId>> edges);

    int size() const { return n_; }
    Weight weight(VertexId v) const { return weight_[v]; }
    const std::vector<Weight>& weights() const { return weight_; }  // 1-indexed, [0] unused
    const std::vector<VertexId>& neighbors(VertexId v) const { return adj_[v]; }
    const std::vector<std::pair<VertexId, VertexId>>& edges() const { return edges_; }
    bool has_edge(VertexId u, VertexId v) const;

    bool operator==(const WeightedTree&) const = default;

  private:
    int n_ = 0;
    std::vector<Weight> weight_;                        // 1-indexed
    std::vector<std::pair<VertexId, VertexId>> edges_;  // normalized u < v, sorted
    std::vector<std::vector<VertexId>> adj_;            // sorted ascending
};

// Rounds every weight up to the nearest power of two; topology unchanged.
// Idempotent.  Throws on integer overflow of the widened weight.
WeightedTree round_weights(const WeightedTree& t);

bool weights_rounded(const WeightedTree& t);

// A rooted reading of a tree: parents, ordered children (ascending id) and a
// postorder sequence.  Carries its own copy of the tree.
struct RootedView {
    WeightedTree tree;
    VertexId root = kNoVertex;
    std::vector<VertexId> parent;                 // parent[root] == kNoVertex
    std::vector<std::vector<VertexId>> children;  // ascending id
    std::vector<VertexId> postorder;              // children before parents
    std::vector<int> depth;                       // depth[root] == 0

    // Vertices of the subtree rooted at v, ascending id.
    std::vector<VertexId> subtree(VertexId v) const;
};

RootedView make_rooted(const WeightedTree& t, VertexId root);

// Vertices of the path from u to v inclusive, in path order.
std::vector<VertexId> path_between(const WeightedTree& t, VertexId u, VertexId v);

// The neighbor of `from` that lies on the path toward `target`.
// Precondition: from != target.
VertexId neighbor_toward(const WeightedTree& t, VertexId from, VertexId target);

bool is_connected_subset(const WeightedTree& t, const std::vector<char>& member);

// Connected components of the induced subgraph on `member` minus `removed`,
// each component listed ascending, components ordered by smallest vertex.
std::vector<std::vector<VertexId>> components_without(const WeightedTree& t,
                                                      const std::vector<char>& member,
                                                      VertexId removed);

// Induced weighted subtree plus the id maps between old and new names.
// `vertices` must be connected; new ids are 1..k in ascending old-id order.
struct InducedSubtree {
    WeightedTree tree;
    std::vector<VertexId> to_old;   // 1-indexed: new id -> old id
    std::vector<VertexId> to_new;   // old id -> new id, 0 for dropped vertices
};

InducedSubtree induced_subtree(const WeightedTree& t, const std::vector<VertexId>& vertices);

}  // namespace treesearch
