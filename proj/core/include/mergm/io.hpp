#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mergm/network.hpp"

namespace mergm {

// Node CSV: id,level,group[,gender,education,genre...]; attribute columns
// are whatever follows the three fixed ones. Edge CSV: level,from,to,wave.
// UTF-8, header row required, no quoting.

struct EdgeWaveRow {
    EdgeTableRow edge;
    int wave = 1;
};

struct NodeTable {
    std::vector<NodeTableRow> rows;
    std::vector<std::string> attribute_names;
};

NodeTable read_nodes_csv(const std::string& path);
std::vector<EdgeWaveRow> read_edges_csv(const std::string& path);

struct IngestionSummary {
    long long n_actors = 0;
    long long n_objects = 0;
    long long edges_a = 0;
    long long edges_b = 0;
    long long edges_x = 0;
    long long duplicate_edges = 0;
    long long filtered_objects = 0;   // dropped by the min-usage rule
    long long edge_rows_ignored = 0;  // rows whose wave did not match
};

struct LoadOptions {
    int wave = 1;
    // Drop objects used by fewer than two actors (paper's inclusion rule);
    // off by default since already-filtered data is the common case.
    bool min_usage_filter = false;
};

struct LoadedWave {
    MultilevelNetwork network;  // aggregate over all groups, structural zeros implied
    IngestionSummary summary;
};

LoadedWave load_wave(const std::string& nodes_path, const std::string& edges_path,
                     const LoadOptions& options = {});

// Writes a network back to the two-file CSV form (every edge gets the given
// wave number). Reading the result reproduces the network exactly.
void write_network_csv(const MultilevelNetwork& net, const std::string& nodes_path,
                       const std::string& edges_path, int wave = 1);

}  // namespace mergm
