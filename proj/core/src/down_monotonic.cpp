#include "treesearch/down_monotonic.hpp"

#include <algorithm>

#include "treesearch/monotonic.hpp"

namespace treesearch {

std::vector<std::int64_t> expand_granularity(const std::vector<Interval>& sequence,
                                             std::int64_t d) {
    if (d < 1) throw Error("granularity must be positive");
    std::vector<std::int64_t> values;
    for (Interval iv : sequence) {
        if (iv.a % d != 0 || iv.b % d != 0)
            throw Error("granularity " + std::to_string(d) + " does not divide the endpoints of " +
                        to_string(iv));
        for (std::int64_t x = iv.a / d; x < iv.b / d; ++x) values.push_back(x);
    }
    std::sort(values.begin(), values.end(), std::greater<>());
    return values;
}

Interval greedy_interval(Weight w, const std::vector<std::vector<Interval>>& child_sequences) {
    if (!is_power_of_two(w)) throw Error("greedy_interval needs a rounded weight");
    if (child_sequences.empty()) return Interval{0, w};

    // conflicts: intervals of one child sequence intersecting another's
    Interval conflict_max{-1, 0};
    bool any_conflict = false;
    for (std::size_t i = 0; i < child_sequences.size(); ++i)
        for (Interval iv : child_sequences[i])
            for (std::size_t j = 0; j < child_sequences.size(); ++j) {
                if (i == j) continue;
                for (Interval other : child_sequences[j])
                    if (intervals_intersect(iv, other)) {
                        if (!any_conflict || iv.b > conflict_max.b) conflict_max = iv;
                        any_conflict = true;
                    }
            }

    std::vector<Interval> occupied;
    for (const auto& seq : child_sequences)
        for (Interval iv : seq) occupied.push_back(iv);

    for (std::int64_t k = ceil_div(std::max<std::int64_t>(conflict_max.b, 0), w);; ++k) {
        Interval slot{k * w, (k + 1) * w};
        bool clear = true;
        for (Interval iv : occupied)
            if (intervals_intersect(slot, iv)) {
                clear = false;
                break;
            }
        if (clear) return slot;
    }
}

DownResult solve_down_monotonic(const WeightedTree& t) {
    DownResult result;
    result.rounded = round_weights(t);
    Classification cls = classify_monotonic(result.rounded);
    if (!cls.down())
        throw Error("solve_down_monotonic: no vertex witnesses a down-monotonic cost function");
    result.root = cls.down_roots.front();

    RootedView rv = make_rooted(result.rounded, result.root);
    for (VertexId v : rv.postorder) {
        std::vector<std::vector<Interval>> child_sequences;
        for (VertexId c : rv.children[v]) child_sequences.push_back(result.sequence.at(c));
        Interval slot = greedy_interval(result.rounded.weight(v), child_sequences);
        result.f[v] = slot;

        // the new vertex blocks everything below its own slot
        std::vector<Interval> seq{slot};
        for (const auto& child_seq : child_sequences)
            for (Interval iv : child_seq)
                if (interval_precedes(slot, iv)) seq.push_back(iv);
        std::sort(seq.begin(), seq.end(), [](Interval x, Interval y) { return x.a > y.a; });
        result.sequence[v] = std::move(seq);
    }

    // alignment holds by construction; keep it as a hard check
    for (VertexId v = 1; v <= result.rounded.size(); ++v) {
        Interval slot = result.f.at(v);
        Weight w = result.rounded.weight(v);
        if (slot.length() != w || slot.a % w != 0)
            throw std::logic_error("greedy slot not aligned at vertex " + std::to_string(v));
    }
    result.tree = strategy_to_decision_tree(result.rounded, result.f);
    return result;
}

}  // namespace treesearch
