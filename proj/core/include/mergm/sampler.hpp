#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "mergm/network.hpp"
#include "mergm/rng.hpp"
#include "mergm/statistics.hpp"

namespace mergm {

using Theta = std::vector<double>;

struct ChainConfig {
    long long burn_in = 100000;
    long long thinning = 10;
    int sample_size = 10000;
    std::uint64_t seed = 0;
    // Proposal weight per free level; empty means proportional to the
    // number of toggleable dyads per level.
    std::map<TieLevel, double> level_choice;
};

struct SampleSummary {
    std::vector<double> mean;          // per model statistic
    std::vector<double> sd;            // sample SD over retained draws
    std::vector<double> mc_se;         // batch-means Monte Carlo standard error
    std::vector<StatVector> retained;  // filled when keep_draws was requested
    MultilevelNetwork final_state;
    long long accepted_steps = 0;
    long long total_steps = 0;
    bool degeneracy_flag = false;          // some statistic path is monotone
    std::vector<int> degenerate_stats;     // indices of flagged statistics
};

// One Metropolis-Hastings tie-toggle chain over the free levels of the
// model. Fixed levels and cross-group dyads are never proposed.
class MarkovChain {
public:
    MarkovChain(MultilevelNetwork start, const ModelSpec& model, Theta theta, std::uint64_t seed);

    // Proposes one toggle and accepts with probability min(1, exp(θ·Δz)).
    // Returns true when the proposal was accepted.
    bool step();

    const MultilevelNetwork& state() const { return state_; }
    const StatVector& stats() const { return stats_; }
    const Theta& theta() const { return theta_; }
    void set_theta(Theta theta);

    long long free_dyad_count() const { return total_free_dyads_; }

    // Overrides the proposal weights (keyed by free level). Zero-weight
    // levels are never proposed.
    void set_level_weights(const std::map<TieLevel, double>& weights);

private:
    MultilevelNetwork state_;
    ModelSpec model_;
    Theta theta_;
    Rng rng_;
    std::vector<std::vector<DyadRef>> dyads_per_level_;
    std::vector<double> level_weights_;
    StatVector stats_;
    long long total_free_dyads_ = 0;
};

// Single MH update as a value-level operation; the class above is the
// efficient path for long runs.
MultilevelNetwork mh_step(const MultilevelNetwork& state, const Theta& theta,
                          const ModelSpec& model, Rng& rng);

using DrawCallback = std::function<void(const MultilevelNetwork&, const StatVector&)>;

// Runs burn-in, then retains cfg.sample_size draws spaced cfg.thinning steps
// apart. Deterministic for a fixed seed. The callback (when set) sees every
// retained draw and must not mutate anything the chain depends on.
SampleSummary simulate_sample(const MultilevelNetwork& start, const Theta& theta,
                              const ModelSpec& model, const ChainConfig& cfg,
                              bool keep_draws = false, const DrawCallback& on_draw = nullptr);

struct ExactDistribution {
    double log_z = 0.0;                       // log normalizing constant
    StatVector expectation;                   // E[z]
    std::vector<std::vector<double>> second_moment;  // E[z zᵀ]
    long long n_states = 0;

    std::vector<std::vector<double>> covariance() const;
};

// Exhaustive enumeration over all tie configurations of the free levels
// (fixed levels stay at the start state; structural zeros respected).
// Refuses state spaces above 2^25.
ExactDistribution exact_enumerate(const MultilevelNetwork& start, const ModelSpec& model,
                                  const Theta& theta);

}  // namespace mergm
