#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "treesearch/common.hpp"

namespace treesearch {

// What a campaign checks per trial:
//   Uniform      ranking cost == exact optimum
//   DownRounded  greedy cost  == exact optimum on the rounding
//   Down         greedy cost  <= 2 * optimum
//   UpRounded    bottom-up cost <= 4 * optimum on the rounding
//   Up           bottom-up cost <= 8 * optimum
//   KMono        stitched cost <= 8k * optimum, recursion depth <= k
enum class CampaignKind { Uniform, DownRounded, Down, UpRounded, Up, KMono };

struct CampaignSpec {
    CampaignKind kind = CampaignKind::Uniform;
    int trials = 100;
    int n_max = 12;
    std::uint64_t seed = 1;
    int k = 2;  // KMono only
};

struct TrialRecord {
    int index = 0;
    std::uint64_t seed = 0;
    int n = 0;
    Weight alg_cost = 0;
    Weight opt_cost = 0;
    bool violation = false;
};

struct CampaignReport {
    CampaignSpec spec;
    std::string bound_text;  // "== 1", "<= 2", ...
    std::vector<TrialRecord> trials;
    std::vector<int> violations;  // indices of violating trials
    double max_ratio = 0.0;
    double mean_ratio = 0.0;

    bool passed() const { return violations.empty(); }
};

// Deterministic in the spec; the bound comparisons are exact integer
// arithmetic, the printed ratios are informational.
CampaignReport run_campaign(const CampaignSpec& spec);

// Aligned human-readable table followed by machine lines
// `trial <i> <seed> <n> <alg> <opt> <ratio>` and a summary.
std::string format_report(const CampaignReport& report);

CampaignKind campaign_kind_from_name(const std::string& name);
std::string campaign_kind_name(CampaignKind kind);

}  // namespace treesearch
