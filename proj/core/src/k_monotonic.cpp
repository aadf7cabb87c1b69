#include "treesearch/k_monotonic.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "treesearch/down_monotonic.hpp"
#include "treesearch/up_monotonic.hpp"

namespace treesearch {

std::vector<std::pair<VertexId, VertexId>> exit_targets(const RootedView& rv,
                                                        const std::vector<VertexId>& t_prime) {
    std::vector<char> member(rv.tree.size() + 1, 0);
    for (VertexId v : t_prime) member[v] = 1;
    if (!member[rv.root]) throw Error("exit_targets: root subtree must contain the root");
    if (!is_connected_subset(rv.tree, member)) throw Error("exit_targets: subtree not connected");
    std::vector<std::pair<VertexId, VertexId>> exits;
    for (VertexId p : t_prime)
        for (VertexId c : rv.children[p])
            if (!member[c]) exits.emplace_back(p, c);
    std::sort(exits.begin(), exits.end());
    return exits;
}

StitchedStrategy solve_k_monotonic(const WeightedTree& t, const KPartition& part) {
    // re-validate the partition against the tree it claims to describe
    if (part.rooted.tree != t) throw Error("solve_k_monotonic: partition built for another tree");
    KPartition checked = partition_k_monotonic(t, part.rooted.root, part.label);

    std::map<int, Direction> direction;
    for (const auto& cls : checked.classes) direction[cls.label] = cls.direction;

    WeightedTree rounded = round_weights(t);
    RootedView rv = make_rooted(rounded, checked.rooted.root);

    StitchedStrategy out;
    out.level_of.assign(t.size() + 1, -1);
    std::vector<std::vector<VertexId>> plan_children(t.size() + 1);

    std::function<VertexId(VertexId, int)> solve_region = [&](VertexId region_root,
                                                              int depth) -> VertexId {
        out.max_depth = std::max(out.max_depth, depth);
        if (depth > checked.k)
            throw std::logic_error("recursion exceeded the partition's k");

        int label = checked.label[region_root];
        // root subtree: same-label vertices reachable downward from the region root
        std::vector<VertexId> t_prime;
        std::vector<VertexId> stack{region_root};
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            t_prime.push_back(v);
            for (VertexId c : rv.children[v])
                if (checked.label[c] == label) stack.push_back(c);
        }
        std::sort(t_prime.begin(), t_prime.end());

        InducedSubtree induced = induced_subtree(rounded, t_prime);
        DecisionTree sub_plan;
        Weight bound = 0;
        if (direction.at(label) == Direction::Up) {
            UpResult sub = solve_up_monotonic(induced.tree);
            sub_plan = sub.tree;
            bound = sub.bound;
        } else {
            DownResult sub = solve_down_monotonic(induced.tree);
            sub_plan = sub.tree;
            for (const auto& [v, slot] : sub.f) bound = std::max(bound, slot.b);
        }

        int level_index = static_cast<int>(out.levels.size());
        out.levels.push_back({label, depth, bound, t_prime});
        for (VertexId v : t_prime) out.level_of[v] = level_index;

        for (VertexId sub_v = 1; sub_v <= sub_plan.size(); ++sub_v) {
            VertexId old_v = induced.to_old[sub_v];
            for (VertexId sub_c : sub_plan.children[sub_v])
                plan_children[old_v].push_back(induced.to_old[sub_c]);
        }

        // hang the recursively solved subtrees at the boundary
        std::vector<char> member(rounded.size() + 1, 0);
        for (VertexId v : t_prime) member[v] = 1;
        for (VertexId p : t_prime)
            for (VertexId c : rv.children[p])
                if (!member[c]) plan_children[p].push_back(solve_region(c, depth + 1));
        return induced.to_old[sub_plan.root];
    };

    VertexId plan_root = solve_region(rv.root, 1);

    std::vector<VertexId> parent(t.size() + 1, kNoVertex);
    std::vector<VertexId> walk{plan_root};
    while (!walk.empty()) {
        VertexId v = walk.back();
        walk.pop_back();
        for (VertexId c : plan_children[v]) {
            parent[c] = v;
            walk.push_back(c);
        }
    }
    out.tree = make_decision_tree(t.size(), plan_root, std::move(parent));
    return out;
}

}  // namespace treesearch
