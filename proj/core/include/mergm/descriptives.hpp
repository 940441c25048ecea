#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mergm/network.hpp"

namespace mergm {

struct GroupDescriptives {
    std::string group;
    // double so the unweighted aggregate rows can carry fractional means
    double n_actors = 0;
    double n_objects = 0;
    double density_a = 0.0;
    double density_b = 0.0;
    double density_x = 0.0;
    // Freeman degree centralization; undefined below three nodes.
    std::optional<double> centralization_a;
    std::optional<double> centralization_b;
    double avg_degree_a = 0.0;
    double avg_degree_b = 0.0;
    double avg_x_degree_actor = 0.0;
    double avg_x_degree_object = 0.0;
    double share_female = 0.0;
    double share_artistic_education = 0.0;
    double genre_diversity = 0.0;  // normalized Blau: 0 homogeneous, 1 all distinct
};

struct DescriptiveReport {
    std::vector<GroupDescriptives> groups;
    GroupDescriptives average, minimum, maximum;  // unweighted over groups
    long long total_actors = 0;
    long long total_objects = 0;
};

struct DescriptiveOptions {
    std::string gender_attribute = "gender";
    std::string education_attribute = "education";
    std::string genre_attribute = "genre";
    bool raw_blau = false;  // report 1 - Σp² without the n/(n-1) normalization
};

double freeman_centralization(const std::vector<int>& degrees);

// Blau heterogeneity over category codes, normalized to [0,1] by default.
double blau_diversity(const std::vector<int>& codes, bool raw = false);

DescriptiveReport describe(const std::vector<MultilevelNetwork>& group_networks,
                           const DescriptiveOptions& options = {});

}  // namespace mergm
