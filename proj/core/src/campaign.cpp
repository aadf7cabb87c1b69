#include "treesearch/campaign.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "treesearch/down_monotonic.hpp"
#include "treesearch/exact.hpp"
#include "treesearch/generate.hpp"
#include "treesearch/k_monotonic.hpp"
#include "treesearch/ranking.hpp"
#include "treesearch/up_monotonic.hpp"

namespace treesearch {

namespace {

struct TrialOutcome {
    int n = 0;
    Weight alg = 0;
    Weight opt = 0;
    bool violation = false;
};

TrialOutcome run_trial(const CampaignSpec& spec, std::uint64_t seed) {
    TrialOutcome out;
    std::uint64_t pick = split_seed(seed, 17);
    int n_min = spec.kind == CampaignKind::KMono ? 2 * spec.k : 2;
    out.n = n_min + static_cast<int>(pick % (spec.n_max - n_min + 1));

    GenSpec gen;
    gen.n = out.n;
    gen.seed = seed;
    gen.max_weight = 32;
    gen.k = spec.k;

    switch (spec.kind) {
        case CampaignKind::Uniform: {
            gen.kind = GenKind::Uniform;
            WeightedTree t = gen_weighted(gen);
            RankAssignment ra = rank_tree(make_rooted(t, 1));
            out.alg = decision_tree_cost(ranks_to_decision_tree(t, ra), t);
            out.opt = opt_cost(t).cost;
            out.violation = out.alg != out.opt;
            break;
        }
        case CampaignKind::DownRounded: {
            gen.kind = GenKind::Down;
            WeightedTree t = round_weights(gen_weighted(gen));
            DownResult res = solve_down_monotonic(t);
            out.alg = decision_tree_cost(res.tree, t);
            out.opt = opt_cost(t).cost;
            out.violation = out.alg != out.opt;
            break;
        }
        case CampaignKind::Down: {
            gen.kind = GenKind::Down;
            WeightedTree t = gen_weighted(gen);
            DownResult res = solve_down_monotonic(t);
            out.alg = decision_tree_cost(res.tree, t);  // original weights
            out.opt = opt_cost(t).cost;
            out.violation = out.alg > 2 * out.opt;
            break;
        }
        case CampaignKind::UpRounded: {
            gen.kind = GenKind::Up;
            WeightedTree t = round_weights(gen_weighted(gen));
            UpResult res = solve_up_monotonic(t);
            out.alg = decision_tree_cost(res.tree, t);
            out.opt = opt_cost(t).cost;
            out.violation = out.alg > 4 * out.opt;
            break;
        }
        case CampaignKind::Up: {
            gen.kind = GenKind::Up;
            WeightedTree t = gen_weighted(gen);
            UpResult res = solve_up_monotonic(t);
            out.alg = decision_tree_cost(res.tree, t);
            out.opt = opt_cost(t).cost;
            out.violation = out.alg > 8 * out.opt;
            break;
        }
        case CampaignKind::KMono: {
            gen.kind = GenKind::KMono;
            WeightedTree t = gen_weighted(gen);
            KPartition part = partition_k_monotonic(t, VertexId{1});
            StitchedStrategy stitched = solve_k_monotonic(t, part);
            out.alg = decision_tree_cost(stitched.tree, t);
            out.opt = opt_cost(t).cost;
            out.violation = out.alg > 8 * static_cast<Weight>(spec.k) * out.opt ||
                            stitched.max_depth > spec.k;
            break;
        }
    }
    return out;
}

}  // namespace

CampaignReport run_campaign(const CampaignSpec& spec) {
    if (spec.trials < 1) throw Error("run_campaign: need at least one trial");
    if (spec.n_max > kOracleVertexCap)
        throw Error("run_campaign: n_max exceeds the oracle cap");
    int n_min = spec.kind == CampaignKind::KMono ? 2 * spec.k : 2;
    if (spec.n_max < n_min) throw Error("run_campaign: n_max too small for this kind");

    CampaignReport report;
    report.spec = spec;
    switch (spec.kind) {
        case CampaignKind::Uniform:
        case CampaignKind::DownRounded: report.bound_text = "== 1"; break;
        case CampaignKind::Down: report.bound_text = "<= 2"; break;
        case CampaignKind::UpRounded: report.bound_text = "<= 4"; break;
        case CampaignKind::Up: report.bound_text = "<= 8"; break;
        case CampaignKind::KMono:
            report.bound_text = "<= " + std::to_string(8 * spec.k);
            break;
    }

    double ratio_sum = 0.0;
    for (int i = 0; i < spec.trials; ++i) {
        std::uint64_t trial_seed = split_seed(spec.seed, static_cast<std::uint64_t>(i));
        TrialOutcome outcome = run_trial(spec, trial_seed);
        TrialRecord rec;
        rec.index = i;
        rec.seed = trial_seed;
        rec.n = outcome.n;
        rec.alg_cost = outcome.alg;
        rec.opt_cost = outcome.opt;
        rec.violation = outcome.violation;
        if (rec.violation) report.violations.push_back(i);
        double ratio = static_cast<double>(outcome.alg) / static_cast<double>(outcome.opt);
        report.max_ratio = std::max(report.max_ratio, ratio);
        ratio_sum += ratio;
        report.trials.push_back(rec);
    }
    report.mean_ratio = ratio_sum / spec.trials;
    return report;
}

std::string format_report(const CampaignReport& report) {
    std::ostringstream out;
    char buf[160];
    out << "campaign " << campaign_kind_name(report.spec.kind) << " trials "
        << report.spec.trials << " nmax " << report.spec.n_max << " seed " << report.spec.seed;
    if (report.spec.kind == CampaignKind::KMono) out << " k " << report.spec.k;
    out << " bound " << report.bound_text << "\n";
    out << "  idx                 seed   n     alg     opt    ratio\n";
    for (const auto& rec : report.trials) {
        double ratio = static_cast<double>(rec.alg_cost) / static_cast<double>(rec.opt_cost);
        std::snprintf(buf, sizeof buf, "%5d %20llu %3d %7lld %7lld %8.6f%s", rec.index,
                      static_cast<unsigned long long>(rec.seed), rec.n,
                      static_cast<long long>(rec.alg_cost), static_cast<long long>(rec.opt_cost),
                      ratio, rec.violation ? "  VIOLATION" : "");
        out << buf << "\n";
    }
    for (const auto& rec : report.trials) {
        double ratio = static_cast<double>(rec.alg_cost) / static_cast<double>(rec.opt_cost);
        std::snprintf(buf, sizeof buf, "trial %d %llu %d %lld %lld %.6f", rec.index,
                      static_cast<unsigned long long>(rec.seed), rec.n,
                      static_cast<long long>(rec.alg_cost), static_cast<long long>(rec.opt_cost),
                      ratio);
        out << buf << "\n";
    }
    std::snprintf(buf, sizeof buf, "max-ratio %.6f mean-ratio %.6f violations %zu",
                  report.max_ratio, report.mean_ratio, report.violations.size());
    out << buf << "\n";
    return out.str();
}

CampaignKind campaign_kind_from_name(const std::string& name) {
    if (name == "uniform") return CampaignKind::Uniform;
    if (name == "down-rounded") return CampaignKind::DownRounded;
    if (name == "down") return CampaignKind::Down;
    if (name == "up-rounded") return CampaignKind::UpRounded;
    if (name == "up") return CampaignKind::Up;
    if (name == "kmono") return CampaignKind::KMono;
    throw Error("unknown campaign kind '" + name + "'");
}

std::string campaign_kind_name(CampaignKind kind) {
    switch (kind) {
        case CampaignKind::Uniform: return "uniform";
        case CampaignKind::DownRounded: return "down-rounded";
        case CampaignKind::Down: return "down";
        case CampaignKind::UpRounded: return "up-rounded";
        case CampaignKind::Up: return "up";
        case CampaignKind::KMono: return "kmono";
    }
    return "unknown";
}

}  // namespace treesearch
