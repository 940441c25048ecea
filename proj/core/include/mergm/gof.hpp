#pragma once

#include <string>
#include <vector>

#include "mergm/estimator.hpp"
#include "mergm/sampler.hpp"
#include "mergm/statistics.hpp"

namespace mergm {

struct GofRow {
    StatDescriptor stat;
    std::string name;
    double observed = 0.0;
    double sim_mean = 0.0;
    double sim_sd = 0.0;
    double t_ratio = 0.0;
    bool modeled = false;
    bool zero_variance = false;
    bool pass = false;
};

struct GofTable {
    std::vector<GofRow> rows;
    double modeled_threshold = 0.1;
    double auxiliary_threshold = 1.0;
};

// t = (observed - mean) / sd, 0 under zero variance.
double gof_t_ratio(double observed, double sim_mean, double sim_sd);

// Every defined catalog statistic (match and mismatch variants expanded over
// the network's declared attributes), minus the given modeled descriptors.
std::vector<StatDescriptor> default_auxiliary_set(const MultilevelNetwork& net,
                                                  const std::vector<StatDescriptor>& modeled,
                                                  double lambda = 2.0);

// Simulates at fit.theta_hat (chain restarted from the observed network) and
// tabulates t-ratios for modeled plus auxiliary statistics. The auxiliary
// evaluation is pure post-processing: it never touches the chain's RNG.
GofTable run_gof(const MultilevelNetwork& observed, const FitResult& fit, const ModelSpec& model,
                 const std::vector<StatDescriptor>& auxiliary, const ChainConfig& cfg);

}  // namespace mergm
