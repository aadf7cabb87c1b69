#include <doctest.h>

#include "treesearch/campaign.hpp"
#include "treesearch/generate.hpp"
#include "treesearch/monotonic.hpp"

using namespace treesearch;

TEST_CASE("generated instances match their declared kind") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        GenSpec spec;
        spec.n = 10;
        spec.max_weight = 16;
        spec.seed = seed;

        spec.kind = GenKind::Uniform;
        CHECK(classify_monotonic(gen_weighted(spec)).uniform);

        spec.kind = GenKind::Up;
        Classification up = classify_monotonic(gen_weighted(spec));
        CHECK(std::binary_search(up.up_roots.begin(), up.up_roots.end(), VertexId{1}));

        spec.kind = GenKind::Down;
        Classification down = classify_monotonic(gen_weighted(spec));
        CHECK(std::binary_search(down.down_roots.begin(), down.down_roots.end(), VertexId{1}));

        spec.kind = GenKind::KMono;
        spec.k = 3;
        spec.max_weight = 32;
        WeightedTree banded = gen_weighted(spec);
        CHECK(partition_k_monotonic(banded, 1).k == 3);

        spec.kind = GenKind::Spider;
        WeightedTree spider = gen_weighted(spec);
        int high_degree = 0;
        for (VertexId v = 1; v <= spider.size(); ++v)
            if (spider.neighbors(v).size() > 2) ++high_degree;
        CHECK(high_degree <= 1);

        spec.kind = GenKind::EdgeSpider;
        EdgeWeightedTree espider = gen_edge(spec);
        CHECK(espider.edges().size() == 9);
    }
}

TEST_CASE("generation is deterministic in the spec") {
    GenSpec spec;
    spec.kind = GenKind::Down;
    spec.n = 12;
    spec.seed = 424242;
    CHECK(gen_weighted(spec) == gen_weighted(spec));
    spec.kind = GenKind::EdgeSpider;
    CHECK(gen_edge(spec) == gen_edge(spec));
}

TEST_CASE("infeasible specs are rejected") {
    GenSpec spec;
    spec.n = 0;
    CHECK_THROWS_AS(gen_instance(spec), Error);
    spec.n = 3;
    spec.kind = GenKind::KMono;
    spec.k = 4;  // needs a deeper backbone than three vertices allow
    CHECK_THROWS_AS(gen_instance(spec), Error);
}

TEST_CASE("campaigns pass their declared bounds") {
    CampaignSpec spec;
    spec.trials = 25;
    spec.n_max = 10;
    spec.seed = 7;

    for (CampaignKind kind : {CampaignKind::Uniform, CampaignKind::DownRounded,
                              CampaignKind::Down, CampaignKind::UpRounded, CampaignKind::Up}) {
        spec.kind = kind;
        CampaignReport report = run_campaign(spec);
        CHECK(report.passed());
        CHECK(report.trials.size() == 25);
    }
    spec.kind = CampaignKind::KMono;
    spec.k = 2;
    CHECK(run_campaign(spec).passed());
}

TEST_CASE("exactness campaigns report unit ratios") {
    CampaignSpec spec;
    spec.kind = CampaignKind::DownRounded;
    spec.trials = 30;
    spec.n_max = 11;
    spec.seed = 3;
    CampaignReport report = run_campaign(spec);
    CHECK(report.max_ratio == doctest::Approx(1.0));
}

TEST_CASE("reports reproduce byte for byte") {
    CampaignSpec spec;
    spec.kind = CampaignKind::Up;
    spec.trials = 12;
    spec.n_max = 9;
    spec.seed = 99;
    std::string once = format_report(run_campaign(spec));
    std::string twice = format_report(run_campaign(spec));
    CHECK(once == twice);
    CHECK(once.find("trial 0 ") != std::string::npos);
    CHECK(once.find("max-ratio") != std::string::npos);

    spec.seed = 100;  // a different seed changes the report
    CHECK(format_report(run_campaign(spec)) != once);
}

TEST_CASE("campaign rejects oversized instances") {
    CampaignSpec spec;
    spec.n_max = 30;
    CHECK_THROWS_AS(run_campaign(spec), Error);
}
