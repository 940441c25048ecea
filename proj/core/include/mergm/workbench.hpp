#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "mergm/io.hpp"
#include "mergm/model_config.hpp"

namespace mergm {

enum class RunMode { Stats, Describe, Simulate, Estimate, Gof, Correlate };

std::optional<RunMode> parse_run_mode(const std::string& name);

struct RunConfig {
    RunMode mode = RunMode::Describe;
    std::string nodes_path;
    std::string edges_path;
    std::string nodes2_path;  // optional second wave; empty reuses nodes_path
    std::string edges2_path;
    std::string model_path;
    std::string chain_path;
    std::string estimation_path;
    std::string fit_path;        // fit CSV produced by an estimate run
    std::string covariance_path; // parameter covariance CSV (correlate)
    std::string out_dir;
    std::optional<std::uint64_t> seed;  // overrides the chain config seed
    int wave = 1;                       // which conformed wave to analyse
    bool lagged = false;                // wave-1 A fixed, wave-2 X/B free
    bool min_usage_filter = false;
    bool insignificant_only = false;    // correlate: restrict to starless estimates
};

// Exit statuses of run(); estimation that ran but did not converge is
// distinct so pipelines can branch on it.
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNotConverged = 3;

// Dispatches one mode, writes CSV/text artifacts under cfg.out_dir, and
// returns an exit status. Failures write <out_dir>/error.json and return
// nonzero instead of throwing.
int run(const RunConfig& cfg);

}  // namespace mergm
