#include <doctest.h>

#include "helpers.hpp"
#include "treesearch/down_monotonic.hpp"
#include "treesearch/exact.hpp"
#include "treesearch/generate.hpp"
#include "treesearch/k_monotonic.hpp"

using namespace treesearch;
using treesearch::testing::cost_by_simulation;
using treesearch::testing::make_path;

TEST_CASE("exit_targets") {
    WeightedTree t = make_path({1, 1, 1, 1});
    RootedView rv = make_rooted(t, 1);
    SUBCASE("whole tree has no exits") {
        CHECK(exit_targets(rv, {1, 2, 3, 4}).empty());
    }
    SUBCASE("star center exits toward every leaf") {
        WeightedTree star = treesearch::testing::make_star(1, {1, 1, 1});
        RootedView srv = make_rooted(star, 1);
        auto exits = exit_targets(srv, {1});
        REQUIRE(exits.size() == 3);
        CHECK(exits[0] == std::pair<VertexId, VertexId>{1, 2});
        CHECK(exits[2] == std::pair<VertexId, VertexId>{1, 4});
    }
    SUBCASE("path prefix has a single boundary edge") {
        auto exits = exit_targets(rv, {1, 2});
        REQUIRE(exits.size() == 1);
        CHECK(exits[0] == std::pair<VertexId, VertexId>{2, 3});
    }
    SUBCASE("subtree must contain the root") {
        CHECK_THROWS_AS(exit_targets(rv, {3, 4}), Error);
    }
}

TEST_CASE("k=1 instances match the plain monotone solver") {
    WeightedTree t = make_path({1, 2, 4});
    KPartition part = partition_k_monotonic(t, 1);
    REQUIRE(part.k == 1);
    StitchedStrategy stitched = solve_k_monotonic(t, part);
    CHECK(stitched.max_depth == 1);
    CHECK(stitched.tree == solve_down_monotonic(t).tree);
    CHECK(stitched.levels.size() == 1);
}

TEST_CASE("two-band path stitches at the boundary") {
    // weights 1,2,4 then 2,1: down band followed by an up band
    WeightedTree t = make_path({1, 2, 4, 2, 1});
    KPartition part = partition_k_monotonic(t, 1);
    REQUIRE(part.k == 2);
    StitchedStrategy stitched = solve_k_monotonic(t, part);
    CHECK(stitched.max_depth == 2);
    CHECK(is_valid_decision_tree(t, stitched.tree));

    // targets inside the root band never leave its region
    std::vector<char> in_root_band(t.size() + 1, 0);
    for (VertexId v : stitched.levels[0].vertices) in_root_band[v] = 1;
    for (VertexId target : stitched.levels[0].vertices) {
        SimulationTrace trace = simulate(t, stitched.tree, target);
        for (const auto& step : trace.queries) CHECK(in_root_band[step.vertex]);
    }

    // every simulated cost is covered by the bounds of the levels it crosses
    for (VertexId target = 1; target <= t.size(); ++target) {
        SimulationTrace trace = simulate(t, stitched.tree, target);
        std::vector<char> seen(stitched.levels.size(), 0);
        Weight allowance = 0;
        for (const auto& step : trace.queries) {
            int level = stitched.level_of[step.vertex];
            if (!seen[level]) {
                seen[level] = 1;
                allowance += stitched.levels[level].bound;
            }
        }
        CHECK(trace.total_cost <= allowance);
    }
}

TEST_CASE("stitched strategies on random banded instances") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        int k = 2 + static_cast<int>(seed % 2);
        GenSpec spec;
        spec.kind = GenKind::KMono;
        spec.n = 2 * k + 2 + static_cast<int>(seed % 7);
        spec.max_weight = 32;
        spec.k = k;
        spec.seed = seed * 509;
        WeightedTree t = gen_weighted(spec);
        KPartition part = partition_k_monotonic(t, 1);
        REQUIRE(part.k == k);
        StitchedStrategy stitched = solve_k_monotonic(t, part);

        CHECK(is_valid_decision_tree(t, stitched.tree));
        CHECK(stitched.max_depth <= k);
        CHECK(cost_by_simulation(t, stitched.tree) == decision_tree_cost(stitched.tree, t));
        CHECK(decision_tree_cost(stitched.tree, t) <=
              8 * static_cast<Weight>(k) * opt_cost(t).cost);

        // provenance covers every vertex exactly once
        std::vector<int> covered(t.size() + 1, 0);
        for (const auto& level : stitched.levels)
            for (VertexId v : level.vertices) ++covered[v];
        for (VertexId v = 1; v <= t.size(); ++v) {
            CHECK(covered[v] == 1);
            CHECK(stitched.level_of[v] >= 0);
        }

        // restriction of the plan to a level region matches that region
        for (const auto& level : stitched.levels) {
            DecisionTree region = restrict_decision_tree(t, stitched.tree, level.vertices);
            InducedSubtree ind = induced_subtree(t, level.vertices);
            CHECK(is_valid_decision_tree(ind.tree, region));
        }
    }
}

TEST_CASE("partition mismatch is rejected") {
    WeightedTree t = make_path({1, 2, 4});
    WeightedTree other = make_path({1, 2, 8});
    KPartition part = partition_k_monotonic(other, 1);
    CHECK_THROWS_AS(solve_k_monotonic(t, part), Error);
}
