#include "treesearch/cli.hpp"

#include <algorithm>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "treesearch/campaign.hpp"
#include "treesearch/down_monotonic.hpp"
#include "treesearch/exact.hpp"
#include "treesearch/generate.hpp"
#include "treesearch/io.hpp"
#include "treesearch/k_monotonic.hpp"
#include "treesearch/monotonic.hpp"
#include "treesearch/ranking.hpp"
#include "treesearch/up_monotonic.hpp"

namespace treesearch {

namespace {

constexpr int kAutoExactCap = 14;

ParsedTree load_tree(const std::string& path) { return parse_tree(read_file(path)); }

DecisionTree load_plan(const std::string& path, const WeightedTree& t) {
    DecisionTree d = parse_decision_tree(read_file(path));
    std::string why;
    if (d.size() != t.size() || !is_valid_decision_tree(t, d, &why))
        throw Error("decision tree does not fit the instance: " + why);
    return d;
}

DecisionTree solve_with(const std::string& alg, const ParsedTree& parsed) {
    const WeightedTree& t = parsed.tree;
    if (alg == "exact") return opt_cost(t).tree;
    if (alg == "rank") {
        VertexId root = parsed.root.value_or(1);
        return ranks_to_decision_tree(t, rank_tree(make_rooted(t, root)));
    }
    if (alg == "down") return solve_down_monotonic(t).tree;
    if (alg == "up") return solve_up_monotonic(t).tree;
    if (alg == "kmono") {
        KPartition part = partition_k_monotonic(t, parsed.root, parsed.part);
        return solve_k_monotonic(t, part).tree;
    }
    // auto: strongest guarantee first at desk scale
    if (t.size() <= kAutoExactCap) return opt_cost(t).tree;
    Classification cls = classify_monotonic(t);
    if (cls.down()) return solve_down_monotonic(t).tree;
    if (cls.up()) return solve_up_monotonic(t).tree;
    KPartition part = partition_k_monotonic(t, parsed.root, parsed.part);
    return solve_k_monotonic(t, part).tree;
}

int cmd_simulate_interactive(const ParsedTree& parsed, const DecisionTree& d, std::istream& in,
                             std::ostream& out, std::ostream& err) {
    const WeightedTree& t = parsed.tree;
    std::vector<VertexId> candidates(t.size());
    for (VertexId v = 1; v <= t.size(); ++v) candidates[v - 1] = v;
    VertexId cur = d.root;
    Weight total = 0;

    while (true) {
        total += t.weight(cur);
        out << "query " << cur << " " << t.weight(cur) << std::endl;
        while (true) {
            std::string line;
            if (!std::getline(in, line)) {
                err << "error: oracle input ended before the target was found\n";
                return 1;
            }
            std::istringstream ss(line);
            std::string verb;
            ss >> verb;
            if (verb == "found") {
                out << "total " << total << std::endl;
                return 0;
            }
            if (verb != "toward") {
                err << "invalid answer, expected 'found' or 'toward <id>'\n";
                continue;
            }
            VertexId next = kNoVertex;
            if (!(ss >> next)) {
                err << "invalid answer: 'toward' needs a vertex id\n";
                continue;
            }
            if (!t.has_edge(cur, next)) {
                err << "invalid answer: " << next << " is not a neighbor of " << cur << "\n";
                continue;
            }
            std::vector<char> member(t.size() + 1, 0);
            for (VertexId v : candidates) member[v] = 1;
            if (!member[next]) {
                err << "invalid answer: direction contradicts earlier answers\n";
                continue;
            }
            // narrow to the component holding the indicated side
            const std::vector<std::vector<VertexId>> pieces = components_without(t, member, cur);
            const std::vector<VertexId>* side = nullptr;
            for (const auto& piece : pieces)
                if (std::binary_search(piece.begin(), piece.end(), next)) side = &piece;
            if (side == nullptr) {
                err << "invalid answer: direction contradicts earlier answers\n";
                continue;
            }
            VertexId descend = kNoVertex;
            for (VertexId c : d.children[cur])
                if (std::binary_search(side->begin(), side->end(), c)) descend = c;
            if (descend == kNoVertex) {
                err << "error: decision tree has no branch for this answer\n";
                return 1;
            }
            candidates = *side;
            cur = descend;
            break;
        }
    }
}

int cmd_classify(const ParsedTree& parsed, std::ostream& out) {
    const WeightedTree& t = parsed.tree;
    Classification cls = classify_monotonic(t);
    auto list = [](const std::vector<VertexId>& roots) {
        if (roots.empty()) return std::string("-");
        std::string s;
        for (std::size_t i = 0; i < roots.size(); ++i)
            s += (i ? " " : "") + std::to_string(roots[i]);
        return s;
    };
    out << "uniform " << (cls.uniform ? "yes" : "no") << "\n";
    out << "up-monotonic " << (cls.up() ? "yes" : "no") << " roots " << list(cls.up_roots) << "\n";
    out << "down-monotonic " << (cls.down() ? "yes" : "no") << " roots " << list(cls.down_roots)
        << "\n";
    KPartition part = partition_k_monotonic(t, parsed.root, parsed.part);
    out << "k-monotonic k " << part.k << " root " << part.rooted.root << "\n";
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"adaptive search strategies on node-weighted trees"};
    app.require_subcommand(1);

    std::string in_path, out_path, dtree_path, alg = "auto", kind;
    int target = 0, n = 8, k = 2, trials = 100, n_max = 12;
    std::int64_t max_weight = 8;
    std::uint64_t seed = 1;
    bool interactive = false;

    auto* solve = app.add_subcommand("solve", "compute a search plan and write it as DTREE v1");
    solve->add_option("--in", in_path, "TREEW v1 instance")->required();
    solve->add_option("--out", out_path, "output plan path")->required();
    solve->add_option("--alg", alg, "auto|up|down|kmono|rank|exact")
        ->check(CLI::IsMember({"auto", "up", "down", "kmono", "rank", "exact"}));

    auto* eval = app.add_subcommand("eval", "worst-case cost of a plan on an instance");
    eval->add_option("--in", in_path, "TREEW v1 instance")->required();
    eval->add_option("--dtree", dtree_path, "DTREE v1 plan")->required();

    auto* simulate_cmd = app.add_subcommand("simulate", "run a plan against the answer oracle");
    simulate_cmd->add_option("--in", in_path, "TREEW v1 instance")->required();
    simulate_cmd->add_option("--dtree", dtree_path, "DTREE v1 plan")->required();
    auto* target_opt = simulate_cmd->add_option("--target", target, "hidden target vertex");
    auto* inter_opt =
        simulate_cmd->add_flag("--interactive", interactive, "answers arrive on standard input");
    target_opt->excludes(inter_opt);

    auto* classify = app.add_subcommand("classify", "monotonicity kinds, witnesses, heuristic k");
    classify->add_option("--in", in_path, "TREEW v1 instance")->required();

    auto* gen = app.add_subcommand("gen", "generate a random instance");
    gen->add_option("--kind", kind, "uniform|up|down|kmono|spider|edge-spider")
        ->required()
        ->check(CLI::IsMember({"uniform", "up", "down", "kmono", "spider", "edge-spider"}));
    gen->add_option("--n", n, "vertex count")->required();
    gen->add_option("--maxw", max_weight, "maximum weight");
    gen->add_option("--seed", seed, "generator seed");
    gen->add_option("--k", k, "bands for kmono");
    gen->add_option("--out", out_path, "output path")->required();

    auto* verify = app.add_subcommand("verify", "randomized bound checks against the oracle");
    verify->add_option("--kind", kind, "uniform|down-rounded|down|up-rounded|up|kmono")
        ->required()
        ->check(CLI::IsMember({"uniform", "down-rounded", "down", "up-rounded", "up", "kmono"}));
    verify->add_option("--trials", trials, "number of trials");
    verify->add_option("--nmax", n_max, "largest instance size");
    verify->add_option("--seed", seed, "campaign seed");
    verify->add_option("--k", k, "bands for kmono");

    std::vector<const char*> argv{"treesearch"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        if (solve->parsed()) {
            ParsedTree parsed = load_tree(in_path);
            DecisionTree plan = solve_with(alg, parsed);
            write_file(out_path, serialize_decision_tree(plan));
            out << "cost " << decision_tree_cost(plan, parsed.tree) << "\n";
            return 0;
        }
        if (eval->parsed()) {
            ParsedTree parsed = load_tree(in_path);
            DecisionTree plan = load_plan(dtree_path, parsed.tree);
            out << "cost " << decision_tree_cost(plan, parsed.tree) << "\n";
            return 0;
        }
        if (simulate_cmd->parsed()) {
            ParsedTree parsed = load_tree(in_path);
            DecisionTree plan = load_plan(dtree_path, parsed.tree);
            if (interactive) return cmd_simulate_interactive(parsed, plan, in, out, err);
            if (target_opt->count() == 0) throw Error("simulate needs --target or --interactive");
            SimulationTrace trace = simulate(parsed.tree, plan, target);
            out << format_trace(trace);
            return 0;
        }
        if (classify->parsed()) return cmd_classify(load_tree(in_path), out);
        if (gen->parsed()) {
            GenSpec spec;
            spec.n = n;
            spec.max_weight = max_weight;
            spec.seed = seed;
            spec.k = k;
            if (kind == "uniform") spec.kind = GenKind::Uniform;
            else if (kind == "up") spec.kind = GenKind::Up;
            else if (kind == "down") spec.kind = GenKind::Down;
            else if (kind == "kmono") spec.kind = GenKind::KMono;
            else if (kind == "spider") spec.kind = GenKind::Spider;
            else spec.kind = GenKind::EdgeSpider;

            if (spec.kind == GenKind::EdgeSpider) {
                write_file(out_path, serialize_edge_tree(gen_edge(spec)));
            } else if (spec.kind == GenKind::KMono) {
                WeightedTree t = gen_weighted(spec);
                KPartition part = partition_k_monotonic(t, VertexId{1});
                std::vector<int> labels(part.label.begin(), part.label.end());
                write_file(out_path, serialize_tree(t, VertexId{1}, labels));
            } else {
                write_file(out_path, serialize_tree(gen_weighted(spec)));
            }
            out << "wrote " << out_path << "\n";
            return 0;
        }
        if (verify->parsed()) {
            CampaignSpec spec;
            spec.kind = campaign_kind_from_name(kind);
            spec.trials = trials;
            spec.n_max = n_max;
            spec.seed = seed;
            spec.k = k;
            CampaignReport report = run_campaign(spec);
            out << format_report(report);
            return report.passed() ? 0 : 1;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace treesearch
