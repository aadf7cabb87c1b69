#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "treesearch/common.hpp"

namespace treesearch {

// Half-open integer interval [a, b) with a < b.  Used as a query time slot.
struct Interval {
    std::int64_t a = 0;
    std::int64_t b = 1;

    std::int64_t length() const { return b - a; }
    bool operator==(const Interval&) const = default;
};

inline Interval make_interval(std::int64_t a, std::int64_t b) {
    if (a >= b) throw Error("interval [" + std::to_string(a) + "," + std::to_string(b) + ") is empty");
    return Interval{a, b};
}

// lhs < rhs in the precedence order: lhs ends at or before rhs starts.
// Overlapping or nested intervals are incomparable.
inline bool interval_precedes(Interval lhs, Interval rhs) { return lhs.b <= rhs.a; }

inline bool intervals_intersect(Interval lhs, Interval rhs) {
    return lhs.a < rhs.b && rhs.a < lhs.b;
}

inline Interval shift(Interval iv, std::int64_t c) { return Interval{iv.a + c, iv.b + c}; }

std::string to_string(Interval iv);

// Strict lexicographic order on interval sequences (each sequence must have
// pairwise disjoint intervals; order within the sequence does not matter).
// Scans unit cells [i, i+1) upward from 0: at the first cell where coverage
// differs, the uncovered side is the smaller sequence.  Equal coverage
// compares false both ways.
bool lex_less(const std::vector<Interval>& s1, const std::vector<Interval>& s2);

// Same order on plain integer sequences, value v standing for cell [v, v+1).
bool lex_less(const std::vector<std::int64_t>& s1, const std::vector<std::int64_t>& s2);

}  // namespace treesearch
