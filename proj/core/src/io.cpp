#include "treesearch/io.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

namespace treesearch {

namespace {

struct Line {
    int number = 0;
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::istream& in) {
    std::vector<Line> lines;
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        std::size_t first = raw.find_first_not_of(" \t");
        if (first == std::string::npos || raw[first] == '#') continue;
        Line line;
        line.number = number;
        std::istringstream ss(raw);
        std::string tok;
        while (ss >> tok) line.tokens.push_back(tok);
        lines.push_back(std::move(line));
    }
    return lines;
}

std::int64_t parse_int(const Line& line, std::size_t idx, const char* what) {
    if (idx >= line.tokens.size()) throw ParseError(line.number, std::string("missing ") + what);
    const std::string& tok = line.tokens[idx];
    std::size_t pos = 0;
    std::int64_t value = 0;
    try {
        value = std::stoll(tok, &pos);
    } catch (const std::exception&) {
        throw ParseError(line.number, std::string("malformed ") + what + " '" + tok + "'");
    }
    if (pos != tok.size())
        throw ParseError(line.number, std::string("malformed ") + what + " '" + tok + "'");
    return value;
}

void expect_arity(const Line& line, std::size_t count) {
    if (line.tokens.size() != count)
        throw ParseError(line.number, "malformed line: expected " + std::to_string(count - 1) +
                                          " fields after '" + line.tokens[0] + "'");
}

VertexId parse_vertex_id(const Line& line, std::size_t idx, int n, const char* what) {
    std::int64_t id = parse_int(line, idx, what);
    if (id < 1 || id > n)
        throw ParseError(line.number, "unknown vertex " + std::to_string(id));
    return static_cast<VertexId>(id);
}

// union-find used to pin cycle errors to the offending edge line
struct UnionFind {
    std::vector<int> up;
    explicit UnionFind(int n) : up(n + 1) {
        for (int i = 0; i <= n; ++i) up[i] = i;
    }
    int find(int x) { return up[x] == x ? x : up[x] = find(up[x]); }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        up[a] = b;
        return true;
    }
};

}  // namespace

ParsedTree parse_tree(std::istream& in) {
    auto lines = tokenize(in);
    if (lines.empty()) throw ParseError(0, "empty input");
    const Line& header = lines.front();
    if (header.tokens[0] != "tree")
        throw ParseError(header.number, "expected 'tree <n>' header");
    expect_arity(header, 2);
    std::int64_t n64 = parse_int(header, 1, "vertex count");
    if (n64 < 1 || n64 > 10'000'000) throw ParseError(header.number, "vertex count out of range");
    int n = static_cast<int>(n64);

    std::vector<Weight> weights(n + 1, 0);
    std::vector<char> have_weight(n + 1, 0);
    std::vector<std::pair<VertexId, VertexId>> edges;
    std::optional<VertexId> root;
    std::vector<int> part(n + 1, -1);
    int part_count = 0;
    UnionFind uf(n);

    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& line = lines[i];
        const std::string& kind = line.tokens[0];
        if (kind == "vertex") {
            expect_arity(line, 3);
            VertexId id = parse_vertex_id(line, 1, n, "vertex id");
            if (have_weight[id])
                throw ParseError(line.number, "duplicate vertex " + std::to_string(id));
            Weight w = parse_int(line, 2, "weight");
            if (w < 1) throw ParseError(line.number, "non-positive weight for vertex " +
                                                         std::to_string(id));
            weights[id] = w;
            have_weight[id] = 1;
        } else if (kind == "edge") {
            expect_arity(line, 3);
            VertexId u = parse_vertex_id(line, 1, n, "edge endpoint");
            VertexId v = parse_vertex_id(line, 2, n, "edge endpoint");
            if (u == v) throw ParseError(line.number, "self loop at vertex " + std::to_string(u));
            if (static_cast<int>(edges.size()) == n - 1)
                throw ParseError(line.number, "too many edges");
            if (!uf.unite(u, v))
                throw ParseError(line.number, "edge closes a cycle");
            edges.emplace_back(u, v);
        } else if (kind == "root") {
            expect_arity(line, 2);
            if (root) throw ParseError(line.number, "duplicate root line");
            root = parse_vertex_id(line, 1, n, "root id");
        } else if (kind == "part") {
            expect_arity(line, 3);
            VertexId id = parse_vertex_id(line, 1, n, "vertex id");
            if (part[id] != -1)
                throw ParseError(line.number, "duplicate part line for vertex " + std::to_string(id));
            std::int64_t label = parse_int(line, 2, "label");
            if (label < 0) throw ParseError(line.number, "negative part label");
            part[id] = static_cast<int>(label);
            ++part_count;
        } else {
            throw ParseError(line.number, "unknown directive '" + kind + "'");
        }
    }

    for (VertexId v = 1; v <= n; ++v)
        if (!have_weight[v])
            throw ParseError(0, "missing vertex line for vertex " + std::to_string(v));
    if (static_cast<int>(edges.size()) != n - 1)
        throw ParseError(0, "expected " + std::to_string(n - 1) + " edges, got " +
                                std::to_string(edges.size()));
    if (part_count != 0 && part_count != n)
        throw ParseError(0, "partition must label every vertex when present");

    ParsedTree out;
    out.tree = WeightedTree::create(n, std::move(weights), std::move(edges));
    out.root = root;
    if (part_count == n) out.part = std::move(part);
    return out;
}

ParsedTree parse_tree(const std::string& text) {
    std::istringstream in(text);
    return parse_tree(in);
}

std::string serialize_tree(const WeightedTree& t, std::optional<VertexId> root,
                           const std::optional<std::vector<int>>& part) {
    std::ostringstream out;
    out << "tree " << t.size() << "\n";
    for (VertexId v = 1; v <= t.size(); ++v)
        out << "vertex " << v << " " << t.weight(v) << "\n";
    for (auto [u, v] : t.edges()) out << "edge " << u << " " << v << "\n";
    if (root) out << "root " << *root << "\n";
    if (part)
        for (VertexId v = 1; v <= t.size(); ++v) out << "part " << v << " " << (*part)[v] << "\n";
    return out.str();
}

EdgeWeightedTree parse_edge_tree(std::istream& in) {
    auto lines = tokenize(in);
    if (lines.empty()) throw ParseError(0, "empty input");
    const Line& header = lines.front();
    if (header.tokens[0] != "etree")
        throw ParseError(header.number, "expected 'etree <n>' header");
    expect_arity(header, 2);
    std::int64_t n64 = parse_int(header, 1, "vertex count");
    if (n64 < 1 || n64 > 10'000'000) throw ParseError(header.number, "vertex count out of range");
    int n = static_cast<int>(n64);

    std::vector<char> have_vertex(n + 1, 0);
    std::vector<EdgeWeightedTree::Edge> edges;
    UnionFind uf(n);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& line = lines[i];
        const std::string& kind = line.tokens[0];
        if (kind == "vertex") {
            expect_arity(line, 2);
            VertexId id = parse_vertex_id(line, 1, n, "vertex id");
            if (have_vertex[id])
                throw ParseError(line.number, "duplicate vertex " + std::to_string(id));
            have_vertex[id] = 1;
        } else if (kind == "eweight") {
            expect_arity(line, 4);
            VertexId u = parse_vertex_id(line, 1, n, "edge endpoint");
            VertexId v = parse_vertex_id(line, 2, n, "edge endpoint");
            Weight w = parse_int(line, 3, "edge cost");
            if (u == v) throw ParseError(line.number, "self loop at vertex " + std::to_string(u));
            if (w < 1) throw ParseError(line.number, "non-positive edge cost");
            if (static_cast<int>(edges.size()) == n - 1)
                throw ParseError(line.number, "too many edges");
            if (!uf.unite(u, v)) throw ParseError(line.number, "edge closes a cycle");
            edges.push_back({std::min(u, v), std::max(u, v), w});
        } else {
            throw ParseError(line.number, "unknown directive '" + kind + "'");
        }
    }
    for (VertexId v = 1; v <= n; ++v)
        if (!have_vertex[v])
            throw ParseError(0, "missing vertex line for vertex " + std::to_string(v));
    return EdgeWeightedTree::create(n, std::move(edges));
}

EdgeWeightedTree parse_edge_tree(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_tree(in);
}

std::string serialize_edge_tree(const EdgeWeightedTree& t) {
    std::ostringstream out;
    out << "etree " << t.size() << "\n";
    for (VertexId v = 1; v <= t.size(); ++v) out << "vertex " << v << "\n";
    for (const auto& e : t.edges())
        out << "eweight " << e.u << " " << e.v << " " << e.cost << "\n";
    return out.str();
}

DecisionTree parse_decision_tree(std::istream& in) {
    auto lines = tokenize(in);
    if (lines.empty()) throw ParseError(0, "empty input");
    const Line& header = lines.front();
    if (header.tokens[0] != "dtree")
        throw ParseError(header.number, "expected 'dtree <n> <root>' header");
    expect_arity(header, 3);
    std::int64_t n64 = parse_int(header, 1, "node count");
    if (n64 < 1 || n64 > 10'000'000) throw ParseError(header.number, "node count out of range");
    int n = static_cast<int>(n64);
    VertexId root = parse_vertex_id(header, 2, n, "root id");

    std::vector<VertexId> parent(n + 1, kNoVertex);
    VertexId expected = 1;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& line = lines[i];
        if (line.tokens[0] != "dnode")
            throw ParseError(line.number, "unknown directive '" + line.tokens[0] + "'");
        expect_arity(line, 3);
        VertexId v = parse_vertex_id(line, 1, n, "node id");
        if (expected == root) ++expected;
        if (v != expected)
            throw ParseError(line.number, "dnode lines must appear in ascending order");
        ++expected;
        parent[v] = parse_vertex_id(line, 2, n, "parent id");
    }
    if (expected == root) ++expected;
    if (expected != n + 1) throw ParseError(0, "missing dnode lines");
    try {
        return make_decision_tree(n, root, std::move(parent));
    } catch (const Error& e) {
        throw ParseError(0, e.what());
    }
}

DecisionTree parse_decision_tree(const std::string& text) {
    std::istringstream in(text);
    return parse_decision_tree(in);
}

std::string serialize_decision_tree(const DecisionTree& d) {
    std::ostringstream out;
    out << "dtree " << d.size() << " " << d.root << "\n";
    for (VertexId v = 1; v <= d.size(); ++v)
        if (v != d.root) out << "dnode " << v << " " << d.parent[v] << "\n";
    return out.str();
}

std::string format_trace(const SimulationTrace& trace) {
    std::ostringstream out;
    for (const auto& step : trace.queries) {
        out << "query " << step.vertex << " " << step.cost << " ";
        if (step.found)
            out << "found";
        else
            out << "toward " << step.toward;
        out << "\n";
    }
    out << "total " << trace.total_cost << "\n";
    return out.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open " + path + " for writing");
    out << contents;
    if (!out) throw Error("failed writing " + path);
}

}  // namespace treesearch
