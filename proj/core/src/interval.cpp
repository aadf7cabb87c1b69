#include "treesearch/interval.hpp"

#include <algorithm>

namespace treesearch {

std::string to_string(Interval iv) {
    return "[" + std::to_string(iv.a) + "," + std::to_string(iv.b) + ")";
}

namespace {

// Coverage of a sequence as maximal runs: sorted ascending, touching
// intervals merged.  Rejects overlapping input.
std::vector<Interval> coverage_runs(std::vector<Interval> s) {
    std::sort(s.begin(), s.end(), [](Interval x, Interval y) { return x.a < y.a; });
    std::vector<Interval> runs;
    for (Interval iv : s) {
        if (iv.a >= iv.b) throw Error("empty interval in sequence");
        if (!runs.empty() && iv.a < runs.back().b)
            throw Error("sequence intervals are not pairwise disjoint");
        if (!runs.empty() && iv.a == runs.back().b)
            runs.back().b = iv.b;
        else
            runs.push_back(iv);
    }
    return runs;
}

// First cell covered by exactly one of the two run lists.
// Returns false when the coverages are identical.
bool first_difference(const std::vector<Interval>& r1, const std::vector<Interval>& r2,
                      bool* covered_by_second) {
    std::size_t i = 0, j = 0;
    while (i < r1.size() && j < r2.size()) {
        if (r1[i] == r2[j]) {
            ++i;
            ++j;
            continue;
        }
        if (r1[i].a != r2[j].a) {
            *covered_by_second = r2[j].a < r1[i].a;
            return true;
        }
        // Same start, different end: the longer run covers the cell at the
        // shorter run's end (their coverage is equal up to that point only
        // if nothing of the shorter list resumes there, which disjointness
        // of runs guarantees).
        *covered_by_second = r2[j].b > r1[i].b;
        return true;
    }
    if (i < r1.size()) {
        *covered_by_second = false;
        return true;
    }
    if (j < r2.size()) {
        *covered_by_second = true;
        return true;
    }
    return false;
}

}  // namespace

bool lex_less(const std::vector<Interval>& s1, const std::vector<Interval>& s2) {
    bool covered_by_second = false;
    if (!first_difference(coverage_runs(s1), coverage_runs(s2), &covered_by_second)) return false;
    return covered_by_second;
}

bool lex_less(const std::vector<std::int64_t>& s1, const std::vector<std::int64_t>& s2) {
    auto as_intervals = [](const std::vector<std::int64_t>& values) {
        std::vector<Interval> out;
        out.reserve(values.size());
        for (std::int64_t v : values) out.push_back(Interval{v, v + 1});
        return out;
    };
    return lex_less(as_intervals(s1), as_intervals(s2));
}

}  // namespace treesearch
