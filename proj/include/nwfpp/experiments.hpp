#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "nwfpp/theory.hpp"

namespace nwfpp {

struct experiment_config {
    std::string experiment;           // distance | hopcount | epidemic | collision
    std::vector<std::int64_t> n_list;
    double rho = 0.0;
    int reps = 1;
    int pairs_per_graph = 1;          // (U,V) pairs, or sources for epidemic
    std::uint64_t master_seed = 0;
    double bp_horizon = 0.0;          // limit-sample W horizon; 0 -> 15/lambda
    std::string output_dir;

    void validate() const; // throws std::invalid_argument

    // unknown keys rejected by name; parse errors carry position diagnostics
    static experiment_config from_json(const nlohmann::json& j);
    static experiment_config from_json_file(const std::string& path);

    double horizon(const model_constants& k) const {
        return bp_horizon > 0.0 ? bp_horizon : 15.0 / k.lambda;
    }
};

struct campaign_result {
    bool all_pass = false;
    nlohmann::json summary;
};

// Dispatches to the experiment runners, writes the CSV outputs and
// summary.json under config.output_dir. CSV bytes depend only on the config
// (not on the worker count); a failing rep is recorded in the summary and the
// campaign continues.
campaign_result run_campaign(const experiment_config& config, int workers = 1);
campaign_result run_campaign_file(const std::string& config_path, int workers = 1);

// shared low-level runner: per-(graph, pair) shortest-path samples
struct pair_sample {
    std::int64_t n;
    int rep;
    int pair;
    std::int32_t u, v;
    double weight;
    std::int64_t hops;
};
struct pair_sample_run {
    std::vector<pair_sample> samples;                   // successful reps only
    std::vector<std::pair<int, std::string>> failures;  // (rep, error)
};
pair_sample_run sample_pairs(std::int64_t n, double rho, int reps, int pairs_per_graph,
                             std::uint64_t master_seed, int workers);

} // namespace nwfpp
