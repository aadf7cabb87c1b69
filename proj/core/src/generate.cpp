#include "treesearch/generate.hpp"

#include <algorithm>
#include <numeric>

#include "treesearch/monotonic.hpp"

namespace treesearch {

namespace {

// splitmix64; fixed algorithm so campaigns reproduce across platforms
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    std::uint64_t below(std::uint64_t bound) { return bound ? next() % bound : 0; }
    std::int64_t in_range(std::int64_t lo, std::int64_t hi) {  // inclusive
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }
};

// half the time a power of two, to exercise both the exact and the rounding
// paths downstream
Weight sample_weight(Rng& rng, Weight lo, Weight hi) {
    if (lo > hi) throw Error("sample_weight: empty range");
    if (rng.below(2) == 0) {
        std::vector<Weight> powers;
        for (Weight p = 1; p <= hi; p *= 2)
            if (p >= lo) powers.push_back(p);
        if (!powers.empty()) return powers[rng.below(powers.size())];
    }
    return rng.in_range(lo, hi);
}

// random recursive tree: vertex i attaches to a uniform earlier vertex
std::vector<std::pair<VertexId, VertexId>> random_shape(Rng& rng, int n) {
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId v = 2; v <= n; ++v)
        edges.emplace_back(static_cast<VertexId>(1 + rng.below(v - 1)), v);
    return edges;
}

// legs around vertex 1; max_leg bounds the leg length
std::vector<std::pair<VertexId, VertexId>> spider_shape(Rng& rng, int n, int max_leg) {
    std::vector<std::pair<VertexId, VertexId>> edges;
    VertexId next = 2;
    while (next <= n) {
        int leg = static_cast<int>(1 + rng.below(max_leg));
        VertexId prev = 1;
        for (int i = 0; i < leg && next <= n; ++i) {
            edges.emplace_back(prev, next);
            prev = next++;
        }
    }
    return edges;
}

int tree_diameter(const std::vector<std::pair<VertexId, VertexId>>& edges, int n) {
    std::vector<std::vector<VertexId>> adj(n + 1);
    for (auto [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    auto farthest = [&](VertexId s) {
        std::vector<int> dist(n + 1, -1);
        std::vector<VertexId> order{s};
        dist[s] = 0;
        for (std::size_t i = 0; i < order.size(); ++i)
            for (VertexId w : adj[order[i]])
                if (dist[w] < 0) {
                    dist[w] = dist[order[i]] + 1;
                    order.push_back(w);
                }
        VertexId best = s;
        for (VertexId v = 1; v <= n; ++v)
            if (dist[v] > dist[best]) best = v;
        return std::pair{best, dist[best]};
    };
    auto [a, _] = farthest(1);
    return farthest(a).second;
}

WeightedTree monotone_instance(Rng& rng, int n, Weight max_weight, bool up) {
    auto edges = random_shape(rng, n);
    std::vector<VertexId> parent(n + 1, kNoVertex);
    for (auto [p, c] : edges) parent[c] = p;
    std::vector<Weight> weights(n + 1, 0);
    weights[1] = sample_weight(rng, 1, max_weight);
    for (VertexId v = 2; v <= n; ++v)
        weights[v] = up ? sample_weight(rng, 1, weights[parent[v]])
                        : sample_weight(rng, weights[parent[v]], max_weight);
    weights.erase(weights.begin());
    return WeightedTree::create(n, std::move(weights), std::move(edges));
}

// weights as a function of depth: k alternating strictly monotone bands,
// so the greedy segmentation from vertex 1 recovers exactly k
WeightedTree k_monotone_instance(Rng& rng, int n, Weight max_weight, int k) {
    if (k < 1) throw Error("gen_instance: k must be positive");
    int depth_needed = 2 * k - 1;  // backbone long enough for k bands of length >= 2
    if (n < depth_needed + 1)
        throw Error("gen_instance: n too small for the requested k");

    // backbone 1-2-...-(depth_needed+1), the rest attaches anywhere
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId v = 2; v <= depth_needed + 1; ++v) edges.emplace_back(v - 1, v);
    for (VertexId v = depth_needed + 2; v <= n; ++v)
        edges.emplace_back(static_cast<VertexId>(1 + rng.below(v - 1)), v);
    std::vector<int> depth(n + 1, 0);
    for (auto [p, c] : edges) depth[c] = depth[p] + 1;
    int max_depth = *std::max_element(depth.begin() + 1, depth.end());

    // band boundaries: first k-1 bands of length 2, the last takes the rest
    std::vector<int> band_of(max_depth + 1, k - 1);
    for (int d = 0; d <= max_depth; ++d)
        if (d < 2 * (k - 1)) band_of[d] = d / 2;

    // strictly monotone inside each band, flipping at the boundaries; a
    // boundary step into band b already carries band b's trend, so every
    // step simply follows the band of its deeper endpoint
    bool first_increases = rng.below(2) == 0;
    std::vector<std::int64_t> ladder(max_depth + 1, 0);
    for (int d = 1; d <= max_depth; ++d) {
        bool increases = (band_of[d] % 2 == 0) == first_increases;
        ladder[d] = ladder[d - 1] + (increases ? 1 : -1);
    }
    std::int64_t low = *std::min_element(ladder.begin(), ladder.end());
    for (auto& v : ladder) v += 1 - low;
    std::int64_t high = *std::max_element(ladder.begin(), ladder.end());
    if (high > max_weight)
        throw Error("gen_instance: max weight too small for the requested k");

    std::vector<Weight> weights(n + 1, 0);
    for (VertexId v = 1; v <= n; ++v) weights[v] = ladder[depth[v]];
    weights.erase(weights.begin());
    return WeightedTree::create(n, std::move(weights), std::move(edges));
}

}  // namespace

std::uint64_t split_seed(std::uint64_t seed, std::uint64_t index) {
    Rng rng(seed ^ (0xd1342543de82ef95ull * (index + 1)));
    return rng.next();
}

EdgeWeightedTree gen_edge_tree(int n, Weight max_cost, std::uint64_t seed) {
    if (n < 2) throw Error("gen_edge_tree: need at least one edge");
    Rng rng(seed);
    auto shape = random_shape(rng, n);
    std::vector<EdgeWeightedTree::Edge> edges;
    for (auto [u, v] : shape) edges.push_back({u, v, sample_weight(rng, 1, max_cost)});
    return EdgeWeightedTree::create(n, std::move(edges));
}

GeneratedInstance gen_instance(const GenSpec& spec) {
    if (spec.n < 1) throw Error("gen_instance: n must be positive");
    if (spec.max_weight < 1) throw Error("gen_instance: max weight must be positive");
    Rng rng(spec.seed);

    switch (spec.kind) {
        case GenKind::Uniform: {
            auto edges = random_shape(rng, spec.n);
            Weight w = sample_weight(rng, 1, spec.max_weight);
            WeightedTree t = WeightedTree::create(
                spec.n, std::vector<Weight>(spec.n, w), std::move(edges));
            if (!classify_monotonic(t).uniform)
                throw std::logic_error("generator produced a non-uniform instance");
            return t;
        }
        case GenKind::Up:
        case GenKind::Down: {
            bool up = spec.kind == GenKind::Up;
            WeightedTree t = monotone_instance(rng, spec.n, spec.max_weight, up);
            Classification cls = classify_monotonic(t);
            const auto& roots = up ? cls.up_roots : cls.down_roots;
            if (!std::binary_search(roots.begin(), roots.end(), VertexId{1}))
                throw std::logic_error("generator root does not witness the declared kind");
            return t;
        }
        case GenKind::KMono: {
            WeightedTree t = k_monotone_instance(rng, spec.n, spec.max_weight, spec.k);
            KPartition part = partition_k_monotonic(t, VertexId{1});
            if (part.k != spec.k)
                throw std::logic_error("generator produced k=" + std::to_string(part.k) +
                                       " instead of " + std::to_string(spec.k));
            return t;
        }
        case GenKind::Spider: {
            auto edges = spec.n == 1 ? std::vector<std::pair<VertexId, VertexId>>{}
                                     : spider_shape(rng, spec.n, std::max(1, spec.n / 2));
            std::vector<Weight> weights;
            for (int i = 0; i < spec.n; ++i) weights.push_back(sample_weight(rng, 1, spec.max_weight));
            WeightedTree t = WeightedTree::create(spec.n, std::move(weights), std::move(edges));
            int high_degree = 0;
            for (VertexId v = 1; v <= t.size(); ++v)
                if (t.neighbors(v).size() > 2) ++high_degree;
            if (high_degree > 1) throw std::logic_error("generator produced a non-spider");
            return t;
        }
        case GenKind::EdgeSpider: {
            if (spec.n < 2) throw Error("gen_instance: edge spider needs at least one edge");
            auto shape = spider_shape(rng, spec.n, 3);  // legs <= 3 keep the diameter <= 6
            if (tree_diameter(shape, spec.n) > 6)
                throw std::logic_error("generator produced a wide spider");
            std::vector<EdgeWeightedTree::Edge> edges;
            for (auto [u, v] : shape) edges.push_back({u, v, sample_weight(rng, 1, spec.max_weight)});
            return EdgeWeightedTree::create(spec.n, std::move(edges));
        }
    }
    throw Error("gen_instance: unknown kind");
}

WeightedTree gen_weighted(const GenSpec& spec) {
    auto inst = gen_instance(spec);
    if (auto* t = std::get_if<WeightedTree>(&inst)) return *t;
    throw Error("gen_weighted: spec describes an edge-weighted instance");
}

EdgeWeightedTree gen_edge(const GenSpec& spec) {
    auto inst = gen_instance(spec);
    if (auto* t = std::get_if<EdgeWeightedTree>(&inst)) return *t;
    throw Error("gen_edge: spec describes a node-weighted instance");
}

}  // namespace treesearch
