#include "treesearch/tree.hpp"

#include <algorithm>
#include <queue>

namespace treesearch {

WeightedTree WeightedTree::create(int n, std::vector<Weight> weights,
                                  std::vector<std::pair<VertexId, VertexId>> edges) {
    if (n < 1) throw Error("tree needs at least one vertex");
    if (static_cast<int>(weights.size()) == n) weights.insert(weights.begin(), 0);
    if (static_cast<int>(weights.size()) != n + 1)
        throw Error("expected one weight per vertex");
    for (VertexId v = 1; v <= n; ++v)
        if (weights[v] < 1)
            throw Error("vertex " + std::to_string(v) + " has non-positive weight");
    if (static_cast<int>(edges.size()) != n - 1)
        throw Error("tree on " + std::to_string(n) + " vertices needs exactly " +
                    std::to_string(n - 1) + " edges, got " + std::to_string(edges.size()));

    WeightedTree t;
    t.n_ = n;
    t.weight_ = std::move(weights);
    t.adj_.assign(n + 1, {});
    for (auto& [u, v] : edges) {
        if (u < 1 || u > n || v < 1 || v > n)
            throw Error("edge references unknown vertex");
        if (u == v) throw Error("self loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
        t.adj_[u].push_back(v);
        t.adj_[v].push_back(u);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw Error("duplicate edge");
    t.edges_ = std::move(edges);
    for (auto& nbrs : t.adj_) std::sort(nbrs.begin(), nbrs.end());

    // n-1 distinct edges: connected iff acyclic, one BFS checks both.
    std::vector<char> seen(n + 1, 0);
    std::queue<VertexId> queue;
    queue.push(1);
    seen[1] = 1;
    int reached = 0;
    while (!queue.empty()) {
        VertexId v = queue.front();
        queue.pop();
        ++reached;
        for (VertexId w : t.adj_[v])
            if (!seen[w]) {
                seen[w] = 1;
                queue.push(w);
            }
    }
    if (reached != n) throw Error("graph is disconnected or contains a cycle");
    return t;
}

bool WeightedTree::has_edge(VertexId u, VertexId v) const {
    if (u < 1 || u > n_ || v < 1 || v > n_) return false;
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

WeightedTree round_weights(const WeightedTree& t) {
    std::vector<Weight> rounded(t.size() + 1, 0);
    for (VertexId v = 1; v <= t.size(); ++v) rounded[v] = ceil_power_of_two(t.weight(v));
    return WeightedTree::create(t.size(), std::move(rounded), t.edges());
}

bool weights_rounded(const WeightedTree& t) {
    for (VertexId v = 1; v <= t.size(); ++v)
        if (!is_power_of_two(t.weight(v))) return false;
    return true;
}

RootedView make_rooted(const WeightedTree& t, VertexId root) {
    if (root < 1 || root > t.size()) throw Error("root " + std::to_string(root) + " out of range");
    RootedView rv;
    rv.tree = t;
    rv.root = root;
    rv.parent.assign(t.size() + 1, kNoVertex);
    rv.children.assign(t.size() + 1, {});
    rv.depth.assign(t.size() + 1, 0);

    std::vector<VertexId> stack{root};
    std::vector<char> seen(t.size() + 1, 0);
    seen[root] = 1;
    std::vector<VertexId> preorder;
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        preorder.push_back(v);
        for (VertexId w : t.neighbors(v)) {
            if (seen[w]) continue;
            seen[w] = 1;
            rv.parent[w] = v;
            rv.depth[w] = rv.depth[v] + 1;
            rv.children[v].push_back(w);  // neighbors sorted, so children sorted
            stack.push_back(w);
        }
    }
    // Reverse preorder visits every child before its parent only within one
    // branch; build a proper postorder instead.
    rv.postorder.reserve(t.size());
    std::vector<std::pair<VertexId, std::size_t>> frames{{root, 0}};
    while (!frames.empty()) {
        auto& [v, next] = frames.back();
        if (next < rv.children[v].size()) {
            VertexId c = rv.children[v][next++];
            frames.emplace_back(c, 0);
        } else {
            rv.postorder.push_back(v);
            frames.pop_back();
        }
    }
    return rv;
}

std::vector<VertexId> RootedView::subtree(VertexId v) const {
    std::vector<VertexId> out;
    std::vector<VertexId> stack{v};
    while (!stack.empty()) {
        VertexId u = stack.back();
        stack.pop_back();
        out.push_back(u);
        for (VertexId c : children[u]) stack.push_back(c);
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

std::vector<VertexId> bfs_parents(const WeightedTree& t, VertexId source) {
    std::vector<VertexId> parent(t.size() + 1, kNoVertex);
    std::vector<char> seen(t.size() + 1, 0);
    std::queue<VertexId> queue;
    queue.push(source);
    seen[source] = 1;
    while (!queue.empty()) {
        VertexId v = queue.front();
        queue.pop();
        for (VertexId w : t.neighbors(v))
            if (!seen[w]) {
                seen[w] = 1;
                parent[w] = v;
                queue.push(w);
            }
    }
    return parent;
}

}  // namespace

std::vector<VertexId> path_between(const WeightedTree& t, VertexId u, VertexId v) {
    auto parent = bfs_parents(t, u);
    std::vector<VertexId> path;
    for (VertexId x = v; x != kNoVertex; x = parent[x]) {
        path.push_back(x);
        if (x == u) break;
    }
    std::reverse(path.begin(), path.end());
    return path;
}

VertexId neighbor_toward(const WeightedTree& t, VertexId from, VertexId target) {
    if (from == target) throw Error("neighbor_toward: from equals target");
    auto parent = bfs_parents(t, target);
    return parent[from];
}

bool is_connected_subset(const WeightedTree& t, const std::vector<char>& member) {
    VertexId start = kNoVertex;
    int count = 0;
    for (VertexId v = 1; v <= t.size(); ++v)
        if (member[v]) {
            if (start == kNoVertex) start = v;
            ++count;
        }
    if (count == 0) return false;
    std::vector<char> seen(t.size() + 1, 0);
    std::vector<VertexId> stack{start};
    seen[start] = 1;
    int reached = 0;
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        ++reached;
        for (VertexId w : t.neighbors(v))
            if (member[w] && !seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
    }
    return reached == count;
}

std::vector<std::vector<VertexId>> components_without(const WeightedTree& t,
                                                      const std::vector<char>& member,
                                                      VertexId removed) {
    std::vector<std::vector<VertexId>> components;
    std::vector<char> seen(t.size() + 1, 0);
    for (VertexId v = 1; v <= t.size(); ++v) {
        if (!member[v] || v == removed || seen[v]) continue;
        std::vector<VertexId> comp;
        std::vector<VertexId> stack{v};
        seen[v] = 1;
        while (!stack.empty()) {
            VertexId x = stack.back();
            stack.pop_back();
            comp.push_back(x);
            for (VertexId w : t.neighbors(x))
                if (member[w] && w != removed && !seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        components.push_back(std::move(comp));
    }
    return components;
}

InducedSubtree induced_subtree(const WeightedTree& t, const std::vector<VertexId>& vertices) {
    std::vector<char> member(t.size() + 1, 0);
    for (VertexId v : vertices) member[v] = 1;
    if (!is_connected_subset(t, member)) throw Error("vertex subset is not connected");

    InducedSubtree out;
    out.to_new.assign(t.size() + 1, kNoVertex);
    std::vector<VertexId> sorted(vertices);
    std::sort(sorted.begin(), sorted.end());
    out.to_old.assign(sorted.size() + 1, kNoVertex);
    std::vector<Weight> weights;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        out.to_new[sorted[i]] = static_cast<VertexId>(i + 1);
        out.to_old[i + 1] = sorted[i];
        weights.push_back(t.weight(sorted[i]));
    }
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (auto [u, v] : t.edges())
        if (member[u] && member[v]) edges.emplace_back(out.to_new[u], out.to_new[v]);
    out.tree = WeightedTree::create(static_cast<int>(sorted.size()), std::move(weights),
                                    std::move(edges));
    return out;
}

}  // namespace treesearch
