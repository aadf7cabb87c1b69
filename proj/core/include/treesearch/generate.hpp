#pragma once

#include <cstdint>
#include <variant>

#include "treesearch/exact.hpp"
#include "treesearch/tree.hpp"

namespace treesearch {

enum class GenKind { Uniform, Up, Down, KMono, Spider, EdgeSpider };

struct GenSpec {
    GenKind kind = GenKind::Uniform;
    int n = 1;
    Weight max_weight = 8;
    std::uint64_t seed = 0;
    int k = 2;  // KMono only
};

using GeneratedInstance = std::variant<WeightedTree, EdgeWeightedTree>;

// Deterministic in the spec.  Every instance is checked against its declared
// kind before being returned: uniform/up/down classify accordingly with the
// generator's root among the witnesses, kmono partitions to exactly k from
// vertex 1, spiders have at most one vertex of degree above two, and
// edge-spiders additionally have diameter at most six.
GeneratedInstance gen_instance(const GenSpec& spec);

// Convenience accessors that throw when the variant holds the other shape.
WeightedTree gen_weighted(const GenSpec& spec);
EdgeWeightedTree gen_edge(const GenSpec& spec);

// General random edge-weighted tree (not necessarily a spider).
EdgeWeightedTree gen_edge_tree(int n, Weight max_cost, std::uint64_t seed);

// Small deterministic PRNG helpers shared with the campaigns.
std::uint64_t split_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace treesearch
