#include "treesearch/ranking.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace treesearch {

VertexExtension vertex_extension(const std::vector<std::vector<std::int64_t>>& child_sequences) {
    std::map<std::int64_t, int> occurrences;
    for (const auto& seq : child_sequences) {
        for (std::size_t i = 0; i < seq.size(); ++i) {
            if (seq[i] < 0) throw Error("vertex_extension: negative value in a child sequence");
            if (i > 0 && seq[i] >= seq[i - 1])
                throw Error("vertex_extension: child sequence not strictly decreasing");
            ++occurrences[seq[i]];
        }
    }
    std::int64_t duplicated_max = -1;
    for (auto [value, count] : occurrences)
        if (count >= 2) duplicated_max = std::max(duplicated_max, value);

    std::int64_t rank = duplicated_max + 1;
    while (occurrences.count(rank)) ++rank;

    VertexExtension out;
    out.rank = rank;
    out.sequence.push_back(rank);
    for (auto it = occurrences.rbegin(); it != occurrences.rend(); ++it)
        if (it->first > rank) out.sequence.push_back(it->first);
    std::sort(out.sequence.begin(), out.sequence.end(), std::greater<>());
    return out;
}

RankAssignment rank_tree(const RootedView& rv) {
    RankAssignment ra;
    ra.root = rv.root;
    ra.rank.assign(rv.tree.size() + 1, 0);
    ra.sequence.assign(rv.tree.size() + 1, {});
    for (VertexId v : rv.postorder) {
        std::vector<std::vector<std::int64_t>> child_sequences;
        for (VertexId c : rv.children[v]) child_sequences.push_back(ra.sequence[c]);
        VertexExtension ext = vertex_extension(child_sequences);
        ra.rank[v] = ext.rank;
        ra.sequence[v] = std::move(ext.sequence);
    }
    return ra;
}

DecisionTree ranks_to_decision_tree(const WeightedTree& t, const RankAssignment& ra) {
    // the strategy-function property guarantees a unique maximum in every
    // connected candidate set; reuse the interval extraction with unit slots
    StrategyFunction f;
    for (VertexId v = 1; v <= t.size(); ++v)
        f[v] = Interval{ra.rank[v], ra.rank[v] + 1};
    return strategy_to_decision_tree(t, f);
}

bool valid_rank_assignment(const WeightedTree& t, const std::vector<std::int64_t>& rank) {
    for (VertexId v1 = 1; v1 <= t.size(); ++v1)
        for (VertexId v2 = v1 + 1; v2 <= t.size(); ++v2) {
            if (rank[v1] != rank[v2]) continue;
            bool separated = false;
            for (VertexId x : path_between(t, v1, v2))
                if (rank[x] > rank[v1]) {
                    separated = true;
                    break;
                }
            if (!separated) return false;
        }
    return true;
}

}  // namespace treesearch
