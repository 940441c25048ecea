#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mergm/network.hpp"
#include "mergm/types.hpp"

namespace mergm {

// Catalog of configuration statistics. Naming convention: A/B suffixes are
// the one-mode levels, X the bipartite usage network; alternating
// (geometrically damped) statistics take a lambda.
enum class StatId {
    // one-mode A
    EdgeA, Star2A, Star3A, Star4A, Star5A, TriangleA, Cycle4A, IsolatesA, IsolateEdgesA,
    ASA, ATA, A2PA, MatchA, MismatchA,
    // one-mode B
    EdgeB, Star2B, Star3B, Star4B, Star5B, TriangleB, Cycle4B, IsolatesB, IsolateEdgesB,
    ASB, ATB, A2PB,
    // bipartite X (X3PathNC drops 3-paths whose endpoints close a 4-cycle)
    XEdge, XStar2A, XStar2B, XStar3A, XStar3B, X3Path, X3PathNC, X4Cycle, XASA, XASB,
    Alt4CycleA, XMatchB, XMismatchB, X4CycleMatch, X4CycleMismatch, IsolatesXA, IsolatesXB,
    // cross-level
    Star2AX, StarAXAA, TriangleXAX, ATXAX, L3XAX, TXAXMatch, TXAXMismatch,
    TriangleXBX, ATXBX, L3XBX, L3AXB, C4AXB,
    // goodness-of-fit summaries (not usable as model statistics)
    StddevDegreeA, SkewDegreeA, StddevDegreeB, SkewDegreeB,
    StddevDegreeXA, SkewDegreeXA, StddevDegreeXB, SkewDegreeXB,
    ClusteringA, ClusteringB, ClusteringX,
};

enum class StatLevel { A, B, X, Cross };

struct StatInfo {
    StatId id;
    const char* name;          // stable catalog string
    StatLevel level;
    bool uses_lambda;
    bool uses_attribute;
    bool is_count;             // integer-valued on every network
    bool model_usable;         // has change statistics; GOF summaries do not
    bool touches_a, touches_b, touches_x;
};

const std::vector<StatInfo>& stat_catalog();
const StatInfo& stat_info(StatId id);
const char* stat_name(StatId id);

// Resolves a catalog id or an accepted English pattern label (case
// insensitive). Returns nothing for unknown names.
std::optional<StatId> find_stat(const std::string& name);

// Default English pattern label used in fit reports.
std::string stat_label(StatId id);

struct StatDescriptor {
    StatId id;
    double lambda = 2.0;       // alternating-statistic damping, > 1
    std::string attribute;     // bound actor attribute for match/mismatch statistics

    friend bool operator==(const StatDescriptor&, const StatDescriptor&) = default;
};

// Display name, Appendix-A style: attribute-bound statistics are prefixed,
// e.g. "Gender_MatchA".
std::string descriptor_name(const StatDescriptor& desc);

using StatVector = std::vector<double>;

class ModelSpec {
public:
    ModelSpec(std::vector<StatDescriptor> stats, std::set<TieLevel> free_levels);

    const std::vector<StatDescriptor>& stats() const { return stats_; }
    const std::set<TieLevel>& free_levels() const { return free_levels_; }
    int size() const { return static_cast<int>(stats_.size()); }
    bool is_free(TieLevel level) const { return free_levels_.count(level) > 0; }

private:
    std::vector<StatDescriptor> stats_;
    std::set<TieLevel> free_levels_;
};

// Whole-network value of one catalog statistic, summed over within-group
// configurations only (cross-group ties cannot exist).
double global_statistic(const MultilevelNetwork& net, const StatDescriptor& desc);

StatVector statistic_vector(const MultilevelNetwork& net, const ModelSpec& model);

// Change statistic of one dyad: z(dyad present) - z(dyad absent) with the
// rest of the network held fixed. Independent of the dyad's current state.
double change_statistic(const MultilevelNetwork& net, const DyadRef& dyad,
                        const StatDescriptor& desc);

StatVector change_statistics(const MultilevelNetwork& net, const DyadRef& dyad,
                             const ModelSpec& model);

}  // namespace mergm
