#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "treesearch/exact.hpp"
#include "treesearch/strategy.hpp"
#include "treesearch/tree.hpp"

namespace treesearch {

// TREEW v1: line-oriented, UTF-8, '#' starts a comment line, blanks ignored.
//   tree <n>
//   vertex <id> <weight>     exactly n lines, id in 1..n
//   edge <u> <v>             exactly n-1 lines
//   root <id>                optional, at most once
//   part <id> <label>        optional, one line per vertex when present
struct ParsedTree {
    WeightedTree tree;
    std::optional<VertexId> root;
    std::optional<std::vector<int>> part;  // 1-indexed labels when present
};

ParsedTree parse_tree(std::istream& in);
ParsedTree parse_tree(const std::string& text);

std::string serialize_tree(const WeightedTree& t,
                           std::optional<VertexId> root = std::nullopt,
                           const std::optional<std::vector<int>>& part = std::nullopt);

// Edge-weighted variant: header `etree <n>`, lines `vertex <id>` and
// `eweight <u> <v> <w>`.
EdgeWeightedTree parse_edge_tree(std::istream& in);
EdgeWeightedTree parse_edge_tree(const std::string& text);
std::string serialize_edge_tree(const EdgeWeightedTree& t);

// DTREE v1: header `dtree <n> <root-id>`, then n-1 lines `dnode <v> <parent>`
// in ascending v order (the root has no line).
DecisionTree parse_decision_tree(std::istream& in);
DecisionTree parse_decision_tree(const std::string& text);
std::string serialize_decision_tree(const DecisionTree& d);

// Trace text: one `query <v> <cost> <found|toward <nbr>>` line per step,
// then `total <c>`.
std::string format_trace(const SimulationTrace& trace);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace treesearch
