#pragma once

#include <optional>
#include <vector>

#include "treesearch/tree.hpp"

namespace treesearch {

enum class Direction { Up, Down, Both };

// Which roots witness each monotonicity direction.  For a uniform tree every
// vertex witnesses both; "neither" is the empty classification.
struct Classification {
    std::vector<VertexId> up_roots;    // weights non-increasing away from the root
    std::vector<VertexId> down_roots;  // weights non-decreasing away from the root
    bool uniform = false;

    bool up() const { return !up_roots.empty(); }
    bool down() const { return !down_roots.empty(); }
    bool neither() const { return up_roots.empty() && down_roots.empty(); }
};

Classification classify_monotonic(const WeightedTree& t);

// One weight-uniform connected piece of a layer.
struct LayerComponent {
    int id = 0;
    VertexId root = kNoVertex;          // unique vertex whose parent is outside
    Weight weight = 0;
    std::vector<VertexId> vertices;     // ascending
    std::vector<int> below;             // components directly below, by id
    std::optional<int> above;           // component directly above, if any
    std::vector<VertexId> lower_border; // members with a child outside the component
};

struct Layer {
    Weight weight = 0;
    std::vector<int> component_ids;
};

// Weight classes of a rounded tree rooted at an up-monotonic root, split
// into connected components with the directly-below relation.
struct LayerDecomposition {
    RootedView rooted;
    std::vector<Layer> layers;              // ascending weight
    std::vector<LayerComponent> components; // indexed by id
    std::vector<int> component_of;          // vertex -> component id
    int top_component = -1;                 // the one containing the root
};

// Requires rounded weights and a root valid for the up-monotonic reading.
LayerDecomposition decompose_layers(const RootedView& rv);

// One class of a k-monotonic partition.
struct PartitionClass {
    int label = 0;
    VertexId top = kNoVertex;  // class vertex closest to the root
    Direction direction = Direction::Both;
    std::vector<VertexId> vertices;  // ascending
};

struct KPartition {
    RootedView rooted;
    std::vector<int> label;  // vertex -> class label
    std::vector<PartitionClass> classes;
    int k = 0;  // max distinct labels on any root-to-leaf path
};

// Splits the tree into monotone subtrees.  With explicit labels they are
// validated (connected classes, each monotone from its top vertex) and
// returned as given; otherwise a top-down greedy runs from `root`, or from
// every candidate root keeping the smallest k when no root is given.  Each
// greedy subtree starts undirected, commits a direction at the first strict
// weight change, and a child violating the committed direction starts a new
// subtree.  The greedy is a validity-preserving heuristic, not a minimizer.
KPartition partition_k_monotonic(const WeightedTree& t,
                                 std::optional<VertexId> root = std::nullopt,
                                 const std::optional<std::vector<int>>& explicit_labels = std::nullopt);

}  // namespace treesearch
