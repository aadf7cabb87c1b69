#include "treesearch/up_monotonic.hpp"

#include <algorithm>
#include <cassert>
#include <functional>

#include "treesearch/ranking.hpp"

namespace treesearch {

void structuring_operator(const RootedView& rv, StrategyFunction& f, VertexId v) {
    Weight w = rv.tree.weight(v);
    if (!f.count(v)) throw Error("structuring_operator: vertex has no slot");
    if (f.at(v).length() < w) throw Error("structuring_operator: slot shorter than the weight");
    std::int64_t sup_below = 0;
    for (VertexId u : rv.subtree(v)) {
        if (u == v) continue;
        if (!f.count(u)) throw Error("structuring_operator: slot missing below the root");
        sup_below = std::max(sup_below, f.at(u).b);
    }
    if (f.at(v).a < sup_below) f[v] = Interval{sup_below, sup_below + w};
}

Interval cost_scaling_operator(Interval slot, Weight own_weight, Weight width_above) {
    if (!is_power_of_two(width_above) || width_above < own_weight)
        throw Error("cost_scaling_operator: width above must be a power of two >= the own weight");
    if (slot.a % own_weight != 0 || slot.b % own_weight != 0)
        throw Error("cost_scaling_operator: slot endpoints must be multiples of the own weight");
    std::int64_t end = width_above * ceil_div(slot.b, width_above);
    Interval scaled{end - width_above, end};
    if (slot.length() == own_weight && scaled.b - slot.b > width_above - own_weight)
        throw std::logic_error("cost scaling exceeded its additive allowance");
    return scaled;
}

namespace {

// T* of a component: its vertices plus the directly-below roots as leaves.
// Every rooted-tree child of an in-component vertex belongs to it.
struct VirtualTree {
    std::vector<VertexId> nodes;  // ascending
    const RootedView* rv = nullptr;
    std::vector<char> in_component;  // over all vertex ids

    std::vector<VertexId> children_of(VertexId v) const {
        if (!in_component[v]) return {};  // below roots are leaves here
        return rv->children[v];
    }
};

std::vector<std::vector<VertexId>> virtual_components(const VirtualTree& vt,
                                                      const std::vector<VertexId>& nodes,
                                                      VertexId removed) {
    std::vector<char> member(vt.rv->tree.size() + 1, 0);
    for (VertexId v : nodes) member[v] = 1;
    member[removed] = 0;
    std::vector<char> seen(vt.rv->tree.size() + 1, 0);
    std::vector<std::vector<VertexId>> components;
    for (VertexId v : nodes) {
        if (!member[v] || seen[v]) continue;
        std::vector<VertexId> comp;
        std::vector<VertexId> stack{v};
        seen[v] = 1;
        while (!stack.empty()) {
            VertexId x = stack.back();
            stack.pop_back();
            comp.push_back(x);
            auto visit = [&](VertexId y) {
                if (y != kNoVertex && member[y] && !seen[y]) {
                    seen[y] = 1;
                    stack.push_back(y);
                }
            };
            for (VertexId c : vt.children_of(x)) visit(c);
            visit(vt.rv->parent[x]);
        }
        std::sort(comp.begin(), comp.end());
        components.push_back(std::move(comp));
    }
    return components;
}

}  // namespace

void process_component(const LayerDecomposition& ld, int component_id, UpState& state) {
    const LayerComponent& comp = ld.components[component_id];
    const RootedView& rv = ld.rooted;
    Weight width = comp.weight;

    // slot indices for the roots directly below, from their scaled slots
    for (int below_id : comp.below) {
        if (!state.processed.count(below_id))
            throw Error("process_component: component below is not processed yet");
        VertexId r = ld.components[below_id].root;
        Interval slot = state.f.at(r);
        if (slot.length() != width || slot.a % width != 0)
            throw std::logic_error("below root not aligned to this layer's width");
        state.slot_index[r] = slot.a / width;
    }

    // rank the component's vertices bottom-up
    std::vector<char> in_component(rv.tree.size() + 1, 0);
    for (VertexId v : comp.vertices) in_component[v] = 1;
    for (VertexId v : rv.postorder) {
        if (!in_component[v]) continue;
        std::vector<std::vector<std::int64_t>> child_sequences;
        for (VertexId c : rv.children[v]) {
            if (in_component[c])
                child_sequences.push_back(state.sequence.at(c));
            else
                child_sequences.push_back({state.slot_index.at(c)});
        }
        VertexExtension ext = vertex_extension(child_sequences);
        state.slot_index[v] = ext.rank;
        state.sequence[v] = std::move(ext.sequence);
        state.f[v] = Interval{ext.rank * width, (ext.rank + 1) * width};
    }

    // assemble the plan fragment by descending slot index
    VirtualTree vt;
    vt.rv = &rv;
    vt.in_component = in_component;
    vt.nodes = comp.vertices;
    for (int below_id : comp.below) vt.nodes.push_back(ld.components[below_id].root);
    std::sort(vt.nodes.begin(), vt.nodes.end());

    std::function<VertexId(const std::vector<VertexId>&)> extract =
        [&](const std::vector<VertexId>& nodes) -> VertexId {
        VertexId best = nodes.front();
        int ties = 1;
        for (std::size_t i = 1; i < nodes.size(); ++i) {
            std::int64_t k = state.slot_index.at(nodes[i]);
            if (k > state.slot_index.at(best)) {
                best = nodes[i];
                ties = 1;
            } else if (k == state.slot_index.at(best)) {
                ++ties;
            }
        }
        if (ties != 1) throw std::logic_error("duplicated slot maximum inside a component");
        for (const auto& piece : virtual_components(vt, nodes, best))
            state.plan_children[best].push_back(extract(piece));
        return best;
    };

    if (comp.root != rv.root) {
        // the component root is placed on top of its fragment by fiat
        for (const auto& piece : virtual_components(vt, vt.nodes, comp.root))
            state.plan_children[comp.root].push_back(extract(piece));
        structuring_operator(rv, state.f, comp.root);
        Weight width_above = rv.tree.weight(rv.parent[comp.root]);
        state.f[comp.root] = cost_scaling_operator(state.f.at(comp.root), width, width_above);
    } else {
        state.plan_root = extract(vt.nodes);
    }
    state.processed.insert(component_id);
}

UpResult solve_up_monotonic(const WeightedTree& t) {
    UpResult result;
    result.rounded = round_weights(t);
    Classification cls = classify_monotonic(result.rounded);
    if (!cls.up())
        throw Error("solve_up_monotonic: no vertex witnesses an up-monotonic cost function");
    result.root = cls.up_roots.front();
    result.layers = decompose_layers(make_rooted(result.rounded, result.root));

    std::vector<int> order;
    for (const auto& comp : result.layers.components) order.push_back(comp.id);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        int da = result.layers.rooted.depth[result.layers.components[a].root];
        int db = result.layers.rooted.depth[result.layers.components[b].root];
        return da != db ? da > db : a < b;
    });

    UpState state;
    for (int id : order) process_component(result.layers, id, state);

    std::vector<VertexId> parent(result.rounded.size() + 1, kNoVertex);
    std::vector<VertexId> stack{state.plan_root};
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        for (VertexId c : state.plan_children[v]) {
            parent[c] = v;
            stack.push_back(c);
        }
    }
    result.tree = make_decision_tree(result.rounded.size(), state.plan_root, std::move(parent));
    result.f = std::move(state.f);
    result.slot_index = std::move(state.slot_index);
    for (const auto& [v, slot] : result.f) result.bound = std::max(result.bound, slot.b);

    if (decision_tree_cost(result.tree, result.rounded) > result.bound)
        throw std::logic_error("plan cost exceeds the certified bound");
    return result;
}

namespace {

struct LayerContext {
    WeightedTree rounded;
    LayerDecomposition layers;
};

LayerContext layer_context(const WeightedTree& rounded) {
    if (!weights_rounded(rounded)) throw Error("expected rounded weights");
    Classification cls = classify_monotonic(rounded);
    if (!cls.up()) throw Error("expected an up-monotonic cost function");
    LayerContext ctx;
    ctx.rounded = rounded;
    ctx.layers = decompose_layers(make_rooted(rounded, cls.up_roots.front()));
    return ctx;
}

}  // namespace

bool is_structured_decision_tree(const WeightedTree& rounded, const DecisionTree& d,
                                 bool include_top) {
    LayerContext ctx = layer_context(rounded);

    // plan-subtree membership via entry/exit times
    std::vector<int> tin(d.size() + 1, 0), tout(d.size() + 1, 0);
    int clock = 0;
    std::function<void(VertexId)> dfs = [&](VertexId v) {
        tin[v] = clock++;
        for (VertexId c : d.children[v]) dfs(c);
        tout[v] = clock++;
    };
    dfs(d.root);
    auto in_plan_subtree = [&](VertexId u, VertexId v) {
        return tin[v] <= tin[u] && tout[u] <= tout[v];
    };

    for (const auto& comp : ctx.layers.components) {
        if (!include_top && comp.id == ctx.layers.top_component) continue;
        for (VertexId u : ctx.layers.rooted.subtree(comp.root))
            if (!in_plan_subtree(u, comp.root)) return false;
    }
    return true;
}

DecisionTree structure_decision_tree(const WeightedTree& rounded, const DecisionTree& d) {
    LayerContext ctx = layer_context(rounded);
    const RootedView& rv = ctx.layers.rooted;
    int n = rounded.size();

    // mutable plan
    std::vector<VertexId> parent = d.parent;
    std::vector<std::vector<VertexId>> children = d.children;
    VertexId root = d.root;

    auto plan_subtree = [&](VertexId v) {
        std::vector<VertexId> out;
        std::vector<VertexId> stack{v};
        while (!stack.empty()) {
            VertexId x = stack.back();
            stack.pop_back();
            out.push_back(x);
            for (VertexId c : children[x]) stack.push_back(c);
        }
        return out;
    };

    // restriction of the fragment under `from` to `keep`, computed against
    // the current links without mutating them: returns the fragment's top
    // and the (child, parent) pairs of the spliced fragment
    auto build_links = [&](auto&& self, VertexId v, const std::vector<char>& keep,
                           std::vector<std::pair<VertexId, VertexId>>& links) -> std::vector<VertexId> {
        std::vector<VertexId> kept;
        for (VertexId c : children[v])
            for (VertexId r : self(self, c, keep, links)) kept.push_back(r);
        if (!keep[v]) return kept;
        for (VertexId r : kept) links.emplace_back(r, v);  // (child, parent)
        return {v};
    };
    auto restrict_fragment = [&](VertexId from, const std::vector<char>& keep,
                                 std::vector<std::pair<VertexId, VertexId>>& links) -> VertexId {
        // descend to the first kept vertex
        VertexId cur = from;
        while (!keep[cur]) {
            VertexId next = kNoVertex;
            for (VertexId c : children[cur]) {
                for (VertexId x : plan_subtree(c))
                    if (keep[x]) {
                        next = c;
                        break;
                    }
                if (next != kNoVertex) break;
            }
            if (next == kNoVertex) throw std::logic_error("restriction lost the subset");
            cur = next;
        }
        auto tops = build_links(build_links, cur, keep, links);
        assert(tops.size() == 1 && tops.front() == cur);
        (void)tops;
        return cur;
    };

    // process components top-down by the depth of their roots
    std::vector<int> order;
    for (const auto& comp : ctx.layers.components) order.push_back(comp.id);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        int da = rv.depth[ctx.layers.components[a].root];
        int db = rv.depth[ctx.layers.components[b].root];
        return da != db ? da < db : a < b;
    });

    for (int id : order) {
        VertexId v = ctx.layers.components[id].root;
        std::vector<VertexId> target = rv.subtree(v);  // must end up under v
        std::vector<char> is_target(n + 1, 0);
        for (VertexId u : target) is_target[u] = 1;

        // already structured with respect to this component?
        {
            std::vector<char> under(n + 1, 0);
            for (VertexId u : plan_subtree(v)) under[u] = 1;
            bool ok = true;
            for (VertexId u : target)
                if (!under[u]) {
                    ok = false;
                    break;
                }
            if (ok) continue;
        }

        // shallowest plan node whose subtree holds the whole target set
        VertexId w = root;
        while (!is_target[w]) {
            VertexId next = kNoVertex;
            for (VertexId c : children[w]) {
                int inside = 0;
                for (VertexId x : plan_subtree(c))
                    if (is_target[x]) ++inside;
                if (inside == static_cast<int>(target.size())) {
                    next = c;
                    break;
                }
            }
            if (next == kNoVertex)
                throw std::logic_error("component subtree split above its first plan vertex");
            w = next;
        }

        std::vector<VertexId> candidates = plan_subtree(w);
        VertexId parent_w = parent[w];
        std::vector<char> member(n + 1, 0);
        for (VertexId u : candidates) member[u] = 1;

        // compute every piece against the pristine links, then rewire at once
        std::vector<VertexId> new_children;
        std::vector<std::pair<VertexId, VertexId>> links;
        for (const auto& piece : components_without(rounded, member, v)) {
            std::vector<char> keep(n + 1, 0);
            for (VertexId u : piece) keep[u] = 1;
            new_children.push_back(restrict_fragment(w, keep, links));
        }
        for (VertexId u : candidates) {
            children[u].clear();
            parent[u] = kNoVertex;
        }
        for (auto [c, p] : links) {
            parent[c] = p;
            children[p].push_back(c);
        }
        children[v] = new_children;
        for (VertexId c : new_children) parent[c] = v;
        parent[v] = parent_w;
        if (parent_w == kNoVertex) {
            root = v;
        } else {
            for (VertexId& c : children[parent_w])
                if (c == w) c = v;
        }
    }

    DecisionTree out = make_decision_tree(n, root, std::move(parent));
    if (!is_structured_decision_tree(rounded, out, true))
        throw std::logic_error("structuring transform left an unstructured component");
    return out;
}

}  // namespace treesearch
