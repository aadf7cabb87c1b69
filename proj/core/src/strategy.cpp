#include "treesearch/strategy.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <queue>

namespace treesearch {

std::vector<VertexId> DecisionTree::subtree_nodes(VertexId v) const {
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

DecisionTree make_decision_tree(int n, VertexId root, std::vector<VertexId> parent) {
    if (root < 1 || root > n) throw Error("decision tree root out of range");
    if (static_cast<int>(parent.size()) != n + 1) throw Error("parent map has wrong size");
    if (parent[root] != kNoVertex) throw Error("root must have no parent");
    DecisionTree d;
    d.root = root;
    d.parent = std::move(parent);
    d.children.assign(n + 1, {});
    for (VertexId v = 1; v <= n; ++v) {
        if (v == root) continue;
        VertexId p = d.parent[v];
        if (p < 1 || p > n) throw Error("vertex " + std::to_string(v) + " has invalid parent");
        d.children[p].push_back(v);
    }
    for (auto& c : d.children) std::sort(c.begin(), c.end());
    // every vertex must reach the root without cycles
    for (VertexId v = 1; v <= n; ++v) {
        VertexId x = v;
        int steps = 0;
        while (x != root) {
            x = d.parent[x];
            if (x == kNoVertex || ++steps > n) throw Error("parent map does not form a tree");
        }
    }
    return d;
}

namespace {

bool check_candidates(const WeightedTree& t, const DecisionTree& d, VertexId q,
                      const std::vector<VertexId>& candidates, std::string* why) {
    std::vector<char> member(t.size() + 1, 0);
    for (VertexId v : candidates) member[v] = 1;
    if (!member[q]) {
        if (why) *why = "node " + std::to_string(q) + " outside its candidate set";
        return false;
    }
    auto components = components_without(t, member, q);
    if (components.size() != d.children[q].size()) {
        if (why)
            *why = "node " + std::to_string(q) + " has " + std::to_string(d.children[q].size()) +
                   " children but leaves " + std::to_string(components.size()) + " components";
        return false;
    }
    for (const auto& comp : components) {
        // exactly one child of q must own this component
        VertexId owner = kNoVertex;
        for (VertexId c : d.children[q])
            if (std::binary_search(comp.begin(), comp.end(), c)) {
                if (owner != kNoVertex) {
                    if (why) *why = "two children of " + std::to_string(q) + " share a component";
                    return false;
                }
                owner = c;
            }
        if (owner == kNoVertex) {
            if (why) *why = "component under " + std::to_string(q) + " has no child query";
            return false;
        }
        if (d.subtree_nodes(owner) != comp) {
            if (why)
                *why = "subtree of " + std::to_string(owner) +
                       " does not match its component under " + std::to_string(q);
            return false;
        }
        if (!check_candidates(t, d, owner, comp, why)) return false;
    }
    return true;
}

}  // namespace

bool is_valid_decision_tree(const WeightedTree& t, const DecisionTree& d, std::string* why) {
    if (d.size() != t.size()) {
        if (why) *why = "node count mismatch";
        return false;
    }
    std::vector<VertexId> all(t.size());
    for (VertexId v = 1; v <= t.size(); ++v) all[v - 1] = v;
    if (d.subtree_nodes(d.root) != all) {
        if (why) *why = "decision tree does not span the vertex set";
        return false;
    }
    return check_candidates(t, d, d.root, all, why);
}

StrategyVerdict validate_strategy_function(const WeightedTree& t, const StrategyFunction& f) {
    for (VertexId v = 1; v <= t.size(); ++v)
        if (!f.count(v)) throw Error("strategy function undefined at vertex " + std::to_string(v));
    for (VertexId v = 1; v <= t.size(); ++v)
        if (f.at(v).length() < t.weight(v))
            return {false, v, v,
                    "slot of " + std::to_string(v) + " shorter than its weight"};
    for (VertexId v1 = 1; v1 <= t.size(); ++v1) {
        for (VertexId v2 = v1 + 1; v2 <= t.size(); ++v2) {
            Interval i1 = f.at(v1), i2 = f.at(v2);
            if (!intervals_intersect(i1, i2)) continue;
            std::int64_t sup = std::max(i1.b, i2.b);
            bool separated = false;
            for (VertexId x : path_between(t, v1, v2))
                if (x != v1 && x != v2 && f.at(x).a >= sup) {
                    separated = true;
                    break;
                }
            if (!separated)
                return {false, v1, v2,
                        "slots of " + std::to_string(v1) + " and " + std::to_string(v2) +
                            " intersect with no higher slot between them"};
        }
    }
    return {};
}

namespace {

// Shared extraction: repeatedly query the unique vertex with the maximal key
// in each connected candidate set.
template <typename Key>
DecisionTree extract_by_key(const WeightedTree& t, const Key& key, const char* what) {
    std::vector<VertexId> parent(t.size() + 1, kNoVertex);
    VertexId root = kNoVertex;

    std::function<VertexId(const std::vector<VertexId>&)> extract =
        [&](const std::vector<VertexId>& candidates) -> VertexId {
        VertexId best = candidates.front();
        int ties = 1;
        for (std::size_t i = 1; i < candidates.size(); ++i) {
            VertexId v = candidates[i];
            if (key(v) > key(best)) {
                best = v;
                ties = 1;
            } else if (key(v) == key(best)) {
                ++ties;
            }
        }
        if (ties != 1)
            throw std::logic_error(std::string(what) +
                                   ": duplicated maximum in a candidate set (invalid input)");
        std::vector<char> member(t.size() + 1, 0);
        for (VertexId v : candidates) member[v] = 1;
        for (const auto& comp : components_without(t, member, best)) {
            VertexId child = extract(comp);
            parent[child] = best;
        }
        return best;
    };

    std::vector<VertexId> all(t.size());
    for (VertexId v = 1; v <= t.size(); ++v) all[v - 1] = v;
    root = extract(all);
    return make_decision_tree(t.size(), root, std::move(parent));
}

}  // namespace

DecisionTree strategy_to_decision_tree(const WeightedTree& t, const StrategyFunction& f) {
    for (VertexId v = 1; v <= t.size(); ++v)
        if (!f.count(v)) throw Error("strategy function undefined at vertex " + std::to_string(v));
    return extract_by_key(
        t, [&](VertexId v) { return f.at(v).b; }, "strategy_to_decision_tree");
}

StrategyFunction decision_tree_to_strategy(const WeightedTree& t, const DecisionTree& d) {
    StrategyFunction f;
    // max slot endpoint in each decision subtree, computed bottom-up
    std::function<std::int64_t(VertexId)> place = [&](VertexId q) -> std::int64_t {
        std::int64_t below = 0;
        for (VertexId c : d.children[q]) below = std::max(below, place(c));
        f[q] = Interval{below, below + t.weight(q)};
        return f[q].b;
    };
    place(d.root);
    return f;
}

Weight decision_tree_cost(const DecisionTree& d, const std::vector<Weight>& w) {
    std::function<Weight(VertexId)> cost = [&](VertexId v) -> Weight {
        Weight deepest = 0;
        for (VertexId c : d.children[v]) deepest = std::max(deepest, cost(c));
        return w[v] + deepest;
    };
    return cost(d.root);
}

Weight decision_tree_cost(const DecisionTree& d, const WeightedTree& t) {
    return decision_tree_cost(d, t.weights());
}

DecisionTree restrict_decision_tree(const WeightedTree& t, const DecisionTree& d,
                                    const std::vector<VertexId>& sub) {
    std::vector<char> member(t.size() + 1, 0);
    for (VertexId v : sub) member[v] = 1;
    if (!is_connected_subset(t, member)) throw Error("restriction subset is not connected");

    // count of subset vertices inside each decision subtree
    std::vector<int> inside(t.size() + 1, 0);
    std::function<int(VertexId)> count = [&](VertexId v) -> int {
        int c = member[v] ? 1 : 0;
        for (VertexId w : d.children[v]) c += count(w);
        return inside[v] = c;
    };
    count(d.root);

    // descend to the first node that belongs to the subset
    VertexId top = d.root;
    while (!member[top]) {
        VertexId next = kNoVertex;
        for (VertexId c : d.children[top])
            if (inside[c] > 0) {
                assert(next == kNoVertex && "subset split across branches");
                next = c;
            }
        assert(next != kNoVertex);
        top = next;
    }

    // splice out non-members below `top`
    std::vector<VertexId> parent(t.size() + 1, kNoVertex);
    std::function<std::vector<VertexId>(VertexId)> build =
        [&](VertexId v) -> std::vector<VertexId> {
        std::vector<VertexId> kept;
        for (VertexId c : d.children[v])
            for (VertexId sub_root : build(c)) kept.push_back(sub_root);
        if (!member[v]) return kept;
        for (VertexId k : kept) parent[k] = v;
        return {v};
    };
    auto roots = build(top);
    assert(roots.size() == 1 && roots.front() == top);

    // remap to 1..|sub| so the result is a standalone decision tree
    InducedSubtree induced = induced_subtree(t, sub);
    std::vector<VertexId> new_parent(sub.size() + 1, kNoVertex);
    for (VertexId v : sub)
        if (v != top) new_parent[induced.to_new[v]] = induced.to_new[parent[v]];
    (void)roots;
    return make_decision_tree(static_cast<int>(sub.size()), induced.to_new[top],
                              std::move(new_parent));
}

SimulationTrace simulate(const WeightedTree& t, const DecisionTree& d, VertexId target) {
    if (target < 1 || target > t.size()) throw Error("simulation target out of range");
    SimulationTrace trace;
    trace.target = target;

    // the query sequence for `target` is the root-to-target path in d
    std::vector<VertexId> path;
    for (VertexId v = target; v != kNoVertex; v = d.parent[v]) path.push_back(v);
    std::reverse(path.begin(), path.end());
    if (path.front() != d.root) throw Error("decision tree does not reach the target");

    for (std::size_t i = 0; i < path.size(); ++i) {
        VertexId q = path[i];
        SimulationStep step;
        step.vertex = q;
        step.cost = t.weight(q);
        if (q == target) {
            step.found = true;
        } else {
            step.toward = neighbor_toward(t, q, target);
        }
        trace.total_cost += step.cost;
        trace.queries.push_back(step);
    }
    return trace;
}

std::vector<Interval> visibility_sequence(const RootedView& rv, const StrategyFunction& f,
                                          VertexId v) {
    for (VertexId u : rv.subtree(v))
        if (!f.count(u))
            throw Error("visibility_sequence: slot missing below vertex " + std::to_string(v));

    std::vector<Interval> visible{f.at(v)};
    // (vertex, max slot start on the path from v down to its parent)
    std::vector<std::pair<VertexId, std::int64_t>> stack;
    for (VertexId c : rv.children[v]) stack.emplace_back(c, f.at(v).a);
    while (!stack.empty()) {
        auto [u, blocking] = stack.back();
        stack.pop_back();
        Interval slot = f.at(u);
        if (slot.b > blocking) visible.push_back(slot);
        std::int64_t next_blocking = std::max(blocking, slot.a);
        for (VertexId c : rv.children[u]) stack.emplace_back(c, next_blocking);
    }
    std::sort(visible.begin(), visible.end(),
              [](Interval x, Interval y) { return x.a > y.a; });
    for (std::size_t i = 1; i < visible.size(); ++i)
        if (!interval_precedes(visible[i], visible[i - 1]))
            throw std::logic_error("visibility sequence is not strictly decreasing");
    return visible;
}

std::vector<VertexId> screening_neighborhood(const WeightedTree& t, const StrategyFunction& f,
                                             VertexId v) {
    for (VertexId u = 1; u <= t.size(); ++u)
        if (!f.count(u)) throw Error("screening_neighborhood: strategy function not total");

    Interval own = f.at(v);
    std::vector<VertexId> members{v};
    std::vector<Interval> screen_slots;
    std::queue<std::pair<VertexId, VertexId>> frontier;  // (vertex, predecessor)
    frontier.emplace(v, kNoVertex);
    while (!frontier.empty()) {
        auto [u, from] = frontier.front();
        frontier.pop();
        for (VertexId w : t.neighbors(u)) {
            if (w == from) continue;
            members.push_back(w);
            if (interval_precedes(own, f.at(w))) {
                screen_slots.push_back(f.at(w));  // screening vertex, stop here
            } else {
                frontier.emplace(w, u);
            }
        }
    }
    std::sort(members.begin(), members.end());

    for (VertexId u : members)
        if (u != v && intervals_intersect(own, f.at(u)))
            throw std::logic_error("screening neighborhood member overlaps the center slot");
    for (std::size_t i = 0; i < screen_slots.size(); ++i)
        for (std::size_t j = i + 1; j < screen_slots.size(); ++j)
            if (intervals_intersect(screen_slots[i], screen_slots[j]))
                throw std::logic_error("screening vertices with intersecting slots");
    return members;
}

}  // namespace treesearch
