#pragma once

#include <string>

#include "mergm/estimator.hpp"
#include "mergm/sampler.hpp"
#include "mergm/statistics.hpp"

namespace mergm {

// Model JSON:
//   {"stats":[{"id":"TriangleXAX"},{"id":"ASA","lambda":2.0},
//             {"id":"MatchA","attribute":"gender"}],
//    "free_levels":["A","B","X"]}
// Statistic ids accept catalog names and the English pattern labels.
ModelSpec parse_model_spec(const std::string& json_text);
ModelSpec load_model_spec(const std::string& path);

// Chain JSON fragment: {"burn_in":100000,"thinning":10,"sample_size":10000,
// "seed":1,"level_choice":{"A":1.0,...}}; every key optional.
ChainConfig parse_chain_config(const std::string& json_text);
ChainConfig load_chain_config(const std::string& path);

// Estimation JSON fragment mirroring EstimationSettings; every key optional.
EstimationSettings parse_estimation_settings(const std::string& json_text);
EstimationSettings load_estimation_settings(const std::string& path);

}  // namespace mergm
