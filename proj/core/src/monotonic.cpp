#include "treesearch/monotonic.hpp"

#include <algorithm>
#include <map>

namespace treesearch {

namespace {

// weights never increase (up) or never decrease (down) on any path away from r
bool valid_root(const WeightedTree& t, VertexId r, Direction dir) {
    auto rv = make_rooted(t, r);
    for (VertexId v = 1; v <= t.size(); ++v) {
        VertexId p = rv.parent[v];
        if (p == kNoVertex) continue;
        if (dir == Direction::Up && t.weight(v) > t.weight(p)) return false;
        if (dir == Direction::Down && t.weight(v) < t.weight(p)) return false;
    }
    return true;
}

}  // namespace

Classification classify_monotonic(const WeightedTree& t) {
    Classification c;
    c.uniform = true;
    for (VertexId v = 2; v <= t.size(); ++v)
        if (t.weight(v) != t.weight(1)) {
            c.uniform = false;
            break;
        }
    for (VertexId r = 1; r <= t.size(); ++r) {
        if (valid_root(t, r, Direction::Up)) c.up_roots.push_back(r);
        if (valid_root(t, r, Direction::Down)) c.down_roots.push_back(r);
    }
    return c;
}

LayerDecomposition decompose_layers(const RootedView& rv) {
    const WeightedTree& t = rv.tree;
    if (!weights_rounded(t)) throw Error("decompose_layers requires rounded weights");
    if (!valid_root(t, rv.root, Direction::Up))
        throw Error("root " + std::to_string(rv.root) + " is not a valid up-monotonic root");

    LayerDecomposition ld;
    ld.rooted = rv;
    ld.component_of.assign(t.size() + 1, -1);

    // walk down from the root; a weight change opens a new component
    std::vector<VertexId> stack{rv.root};
    ld.components.push_back({0, rv.root, t.weight(rv.root), {}, {}, std::nullopt, {}});
    ld.component_of[rv.root] = 0;
    ld.top_component = 0;
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        int comp = ld.component_of[v];
        for (VertexId c : rv.children[v]) {
            if (t.weight(c) == t.weight(v)) {
                ld.component_of[c] = comp;
            } else {
                int fresh = static_cast<int>(ld.components.size());
                ld.components.push_back({fresh, c, t.weight(c), {}, {}, comp, {}});
                ld.components[comp].below.push_back(fresh);
                ld.component_of[c] = fresh;
            }
            stack.push_back(c);
        }
    }
    for (VertexId v = 1; v <= t.size(); ++v) {
        ld.components[ld.component_of[v]].vertices.push_back(v);
        for (VertexId c : rv.children[v])
            if (ld.component_of[c] != ld.component_of[v]) {
                ld.components[ld.component_of[v]].lower_border.push_back(v);
                break;
            }
    }
    for (auto& comp : ld.components) std::sort(comp.vertices.begin(), comp.vertices.end());

    std::map<Weight, std::vector<int>> by_weight;
    for (const auto& comp : ld.components) by_weight[comp.weight].push_back(comp.id);
    for (auto& [w, ids] : by_weight) ld.layers.push_back({w, std::move(ids)});
    return ld;
}

namespace {

struct GreedyResult {
    std::vector<int> label;
    int k = 0;
};

GreedyResult greedy_partition(const WeightedTree& t, const RootedView& rv) {
    std::vector<int> label(t.size() + 1, -1);
    std::vector<Direction> committed;  // per label
    label[rv.root] = 0;
    committed.push_back(Direction::Both);

    // level-order walk with ascending children; direction state lives per label
    std::vector<VertexId> order{rv.root};
    for (std::size_t i = 0; i < order.size(); ++i) {
        VertexId v = order[i];
        for (VertexId c : rv.children[v]) {
            Weight wc = t.weight(c), wv = t.weight(v);
            int lab = label[v];
            Direction dir = committed[lab];
            if (wc == wv) {
                label[c] = lab;
            } else if (wc < wv) {  // step fits the up-monotonic reading
                if (dir == Direction::Down) {
                    label[c] = static_cast<int>(committed.size());
                    committed.push_back(Direction::Both);
                } else {
                    label[c] = lab;
                    committed[lab] = Direction::Up;
                }
            } else {  // wc > wv, fits the down-monotonic reading
                if (dir == Direction::Up) {
                    label[c] = static_cast<int>(committed.size());
                    committed.push_back(Direction::Both);
                } else {
                    label[c] = lab;
                    committed[lab] = Direction::Down;
                }
            }
            order.push_back(c);
        }
    }

    GreedyResult out;
    out.label = std::move(label);
    // k = max label changes + 1 over root-to-leaf paths
    std::vector<int> changes(t.size() + 1, 0);
    out.k = 1;
    for (std::size_t i = 0; i < order.size(); ++i) {
        VertexId v = order[i];
        for (VertexId c : rv.children[v]) {
            changes[c] = changes[v] + (out.label[c] != out.label[v] ? 1 : 0);
            out.k = std::max(out.k, changes[c] + 1);
        }
    }
    return out;
}

// direction(s) a class supports when rooted at its top vertex
Direction class_direction(const WeightedTree& t, const RootedView& rv,
                          const std::vector<int>& label, VertexId top) {
    bool up_ok = true, down_ok = true;
    std::vector<VertexId> stack{top};
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        for (VertexId c : rv.children[v]) {
            if (label[c] != label[top]) continue;
            if (t.weight(c) > t.weight(v)) up_ok = false;
            if (t.weight(c) < t.weight(v)) down_ok = false;
            stack.push_back(c);
        }
    }
    if (up_ok && down_ok) return Direction::Both;
    if (up_ok) return Direction::Up;
    if (down_ok) return Direction::Down;
    throw Error("partition class at vertex " + std::to_string(top) + " is not monotone");
}

KPartition finish_partition(const WeightedTree& t, RootedView rv, std::vector<int> label) {
    KPartition part;
    part.rooted = std::move(rv);
    part.label = std::move(label);

    std::map<int, PartitionClass> classes;
    for (VertexId v = 1; v <= t.size(); ++v) {
        auto& cls = classes[part.label[v]];
        cls.label = part.label[v];
        cls.vertices.push_back(v);
    }
    // connectivity and top vertex per class
    for (auto& [lab, cls] : classes) {
        std::vector<char> member(t.size() + 1, 0);
        for (VertexId v : cls.vertices) member[v] = 1;
        if (!is_connected_subset(t, member))
            throw Error("partition class " + std::to_string(lab) + " is not connected");
        cls.top = cls.vertices.front();
        for (VertexId v : cls.vertices)
            if (part.rooted.depth[v] < part.rooted.depth[cls.top]) cls.top = v;
        cls.direction = class_direction(t, part.rooted, part.label, cls.top);
    }
    for (auto& [lab, cls] : classes) part.classes.push_back(std::move(cls));

    std::vector<int> changes(t.size() + 1, 0);
    part.k = 1;
    std::vector<VertexId> order{part.rooted.root};
    for (std::size_t i = 0; i < order.size(); ++i) {
        VertexId v = order[i];
        for (VertexId c : part.rooted.children[v]) {
            changes[c] = changes[v] + (part.label[c] != part.label[v] ? 1 : 0);
            part.k = std::max(part.k, changes[c] + 1);
            order.push_back(c);
        }
    }
    return part;
}

}  // namespace

KPartition partition_k_monotonic(const WeightedTree& t, std::optional<VertexId> root,
                                 const std::optional<std::vector<int>>& explicit_labels) {
    if (explicit_labels) {
        if (!root) throw Error("an explicit partition needs a root");
        if (static_cast<int>(explicit_labels->size()) != t.size() + 1)
            throw Error("explicit partition must label every vertex");
        return finish_partition(t, make_rooted(t, *root), *explicit_labels);
    }
    if (root) {
        auto rv = make_rooted(t, *root);
        auto greedy = greedy_partition(t, rv);
        return finish_partition(t, std::move(rv), std::move(greedy.label));
    }
    // no root given: try them all, keep the smallest k (ties by least root id)
    int best_k = -1;
    VertexId best_root = kNoVertex;
    for (VertexId r = 1; r <= t.size(); ++r) {
        auto greedy = greedy_partition(t, make_rooted(t, r));
        if (best_k < 0 || greedy.k < best_k) {
            best_k = greedy.k;
            best_root = r;
        }
    }
    return partition_k_monotonic(t, best_root, std::nullopt);
}

}  // namespace treesearch
