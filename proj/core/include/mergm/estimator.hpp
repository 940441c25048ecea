#pragma once

#include <string>
#include <vector>

#include "mergm/sampler.hpp"
#include "mergm/statistics.hpp"

namespace mergm {

struct EstimationSettings {
    int phase1_draws = 500;
    int subphase_count = 5;
    double initial_gain = 0.1;
    int phase3_draws = 2000;
    int max_restarts = 3;
    double convergence_threshold = 0.1;
    // Full (inverse-covariance) scaling instead of the diagonal default.
    bool full_matrix_scaling = false;
};

struct FitResult {
    std::vector<StatDescriptor> stats;   // model statistics, specification order
    Theta theta_hat;
    Theta theta0;                        // initialization (edge terms at logit density)
    std::vector<double> std_errors;
    std::vector<double> conv_t_ratios;
    std::vector<std::vector<double>> param_covariance;
    StatVector observed_stats;
    bool converged = false;
    int restarts_used = 0;
};

class EstimationError : public std::runtime_error {
public:
    explicit EstimationError(const std::string& what) : std::runtime_error(what) {}
};

// Method-of-moments MCMC maximum likelihood:
//   phase 1 estimates a scaling matrix from short-run statistic variances,
//   phase 2 runs Robbins-Monro subphases with halving gain,
//   phase 3 simulates long at θ̂ for convergence t-ratios and standard errors.
// Non-convergence after max_restarts returns converged=false rather than
// throwing; constant statistics and singular phase-3 covariances throw
// EstimationError.
FitResult estimate(const MultilevelNetwork& observed, const ModelSpec& model,
                   const EstimationSettings& settings, const ChainConfig& cfg);

// Parameter-estimate correlation matrix r_kl = cov_kl / sqrt(cov_kk cov_ll).
std::vector<std::vector<double>> estimate_correlations(const FitResult& fit);

// Lagged two-wave design: A taken from wave 1 and held fixed, X and B taken
// from wave 2 and free. Waves must already be conformed.
MultilevelNetwork make_lagged_network(const MultilevelNetwork& wave1,
                                      const MultilevelNetwork& wave2);

}  // namespace mergm
