#include "treesearch/exact.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

namespace treesearch {

namespace {

using Mask = std::uint32_t;

inline Mask bit(VertexId v) { return Mask{1} << (v - 1); }

// Connected pieces of `mask` after deleting vertex q, as masks.
std::vector<Mask> split_components(const WeightedTree& t, Mask mask, VertexId q) {
    std::vector<Mask> components;
    Mask rest = mask & ~bit(q);
    while (rest) {
        VertexId seed = __builtin_ctz(rest) + 1;
        Mask comp = 0;
        std::vector<VertexId> stack{seed};
        comp |= bit(seed);
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            for (VertexId w : t.neighbors(v)) {
                Mask wb = bit(w);
                if ((rest & wb) && !(comp & wb)) {
                    comp |= wb;
                    stack.push_back(w);
                }
            }
        }
        components.push_back(comp);
        rest &= ~comp;
    }
    return components;
}

}  // namespace

OptResult opt_cost(const WeightedTree& t) {
    if (t.size() > kOracleVertexCap)
        throw Error("instance too large for the exact oracle (n <= " +
                    std::to_string(kOracleVertexCap) + ")");

    struct Entry {
        Weight cost;
        VertexId best;
    };
    std::unordered_map<Mask, Entry> memo;
    memo.reserve(1u << std::min(t.size(), 16));

    std::function<Weight(Mask)> solve = [&](Mask mask) -> Weight {
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second.cost;
        Weight best_cost = -1;
        VertexId best_q = kNoVertex;
        for (VertexId q = 1; q <= t.size(); ++q) {
            if (!(mask & bit(q))) continue;
            Weight worst = 0;
            for (Mask comp : split_components(t, mask, q))
                worst = std::max(worst, solve(comp));
            Weight total = t.weight(q) + worst;
            if (best_cost < 0 || total < best_cost) {
                best_cost = total;
                best_q = q;
            }
        }
        memo[mask] = {best_cost, best_q};
        return best_cost;
    };

    Mask full = (Mask{1} << t.size()) - 1;
    Weight opt = solve(full);

    std::vector<VertexId> parent(t.size() + 1, kNoVertex);
    std::function<VertexId(Mask)> rebuild = [&](Mask mask) -> VertexId {
        VertexId q = memo.at(mask).best;
        for (Mask comp : split_components(t, mask, q)) parent[rebuild(comp)] = q;
        return q;
    };
    VertexId root = rebuild(full);
    return {opt, make_decision_tree(t.size(), root, std::move(parent))};
}

EdgeWeightedTree EdgeWeightedTree::create(int n, std::vector<Edge> edges) {
    if (n < 1) throw Error("edge tree needs at least one vertex");
    if (static_cast<int>(edges.size()) != n - 1)
        throw Error("edge tree on " + std::to_string(n) + " vertices needs exactly " +
                    std::to_string(n - 1) + " edges");
    EdgeWeightedTree t;
    t.n_ = n;
    for (auto& e : edges) {
        if (e.u < 1 || e.u > n || e.v < 1 || e.v > n)
            throw Error("edge references unknown vertex");
        if (e.u == e.v) throw Error("self loop in edge tree");
        if (e.cost < 1) throw Error("edge cost must be positive");
        if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges.begin(), edges.end(),
              [](const Edge& a, const Edge& b) { return std::pair{a.u, a.v} < std::pair{b.u, b.v}; });
    for (std::size_t i = 1; i < edges.size(); ++i)
        if (edges[i].u == edges[i - 1].u && edges[i].v == edges[i - 1].v)
            throw Error("duplicate edge in edge tree");
    t.edges_ = std::move(edges);
    t.incident_.assign(n + 1, {});
    for (int i = 0; i < static_cast<int>(t.edges_.size()); ++i) {
        t.incident_[t.edges_[i].u].push_back(i);
        t.incident_[t.edges_[i].v].push_back(i);
    }
    // connectivity via union-find
    std::vector<int> up(n + 1);
    for (int i = 0; i <= n; ++i) up[i] = i;
    std::function<int(int)> find = [&](int x) { return up[x] == x ? x : up[x] = find(up[x]); };
    for (const auto& e : t.edges_) {
        int a = find(e.u), b = find(e.v);
        if (a == b) throw Error("edge tree contains a cycle");
        up[a] = b;
    }
    return t;
}

Weight edge_opt_cost(const EdgeWeightedTree& t) {
    if (static_cast<int>(t.edges().size()) > kEdgeOracleEdgeCap)
        throw Error("instance too large for the edge oracle (<= " +
                    std::to_string(kEdgeOracleEdgeCap) + " edges)");

    std::unordered_map<Mask, Weight> memo;

    // side of edge e containing `seed`, within the candidate mask
    auto side_of = [&](Mask mask, int e, VertexId seed) -> Mask {
        Mask comp = bit(seed);
        std::vector<VertexId> stack{seed};
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            for (int i : t.incident_edges(v)) {
                if (i == e) continue;
                const auto& other = t.edges()[i];
                VertexId w = (other.u == v) ? other.v : other.u;
                if ((mask & bit(w)) && !(comp & bit(w))) {
                    comp |= bit(w);
                    stack.push_back(w);
                }
            }
        }
        return comp;
    };

    std::function<Weight(Mask)> solve = [&](Mask mask) -> Weight {
        if ((mask & (mask - 1)) == 0) return 0;  // singleton: identified
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        Weight best = -1;
        for (int e = 0; e < static_cast<int>(t.edges().size()); ++e) {
            const auto& edge = t.edges()[e];
            if (!(mask & bit(edge.u)) || !(mask & bit(edge.v))) continue;
            Mask side_u = side_of(mask, e, edge.u);
            Mask side_v = mask & ~side_u;
            Weight total = edge.cost + std::max(solve(side_u), solve(side_v));
            if (best < 0 || total < best) best = total;
        }
        if (best < 0) throw std::logic_error("edge oracle: no splitting edge in candidate set");
        memo[mask] = best;
        return best;
    };

    Mask full = (Mask{1} << t.size()) - 1;
    return solve(full);
}

Weight subdivision_heavy_weight(const EdgeWeightedTree& t) {
    Weight sum = 0;
    for (const auto& e : t.edges()) sum += e.cost;
    return sum + 1;
}

WeightedTree subdivide_edge_tree(const EdgeWeightedTree& t) {
    Weight heavy = subdivision_heavy_weight(t);
    int n = t.size();
    int total = 2 * n - 1;
    std::vector<Weight> weights(total + 1, heavy);
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int i = 0; i < static_cast<int>(t.edges().size()); ++i) {
        VertexId mid = n + 1 + i;
        weights[mid] = t.edges()[i].cost;
        edges.emplace_back(t.edges()[i].u, mid);
        edges.emplace_back(mid, t.edges()[i].v);
    }
    weights.erase(weights.begin());  // create() takes n weights for ids 1..n
    return WeightedTree::create(total, std::move(weights), std::move(edges));
}

}  // namespace treesearch
