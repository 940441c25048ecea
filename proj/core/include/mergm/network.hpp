#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mergm/types.hpp"

namespace mergm {

// Categorical node attributes. Only actors carry attributes; every declared
// attribute must have a value for every actor.
class Attributes {
public:
    Attributes() = default;

    static Attributes build(std::vector<std::string> names,
                            const std::vector<std::vector<std::string>>& values_per_actor);

    int count() const { return static_cast<int>(names_.size()); }
    const std::vector<std::string>& names() const { return names_; }
    int find(const std::string& name) const;

    // Dense category code of an actor's value; codes are per attribute.
    int code(int attribute, int actor) const { return codes_[attribute][actor]; }
    const std::string& value(int attribute, int actor) const {
        return labels_[attribute][codes_[attribute][actor]];
    }
    int n_categories(int attribute) const {
        return static_cast<int>(labels_[attribute].size());
    }

    Attributes subset(const std::vector<int>& actor_indices) const;

    friend bool operator==(const Attributes&, const Attributes&) = default;

private:
    std::vector<std::string> names_;
    std::vector<std::vector<int>> codes_;                // [attribute][actor]
    std::vector<std::vector<std::string>> labels_;       // [attribute][code]
};

// Total partition of actors and objects into groups. A dyad is toggleable
// iff both endpoints share a group; everything across groups is a
// structural zero.
struct GroupPartition {
    std::vector<int> actor_group;
    std::vector<int> object_group;
    std::vector<std::string> group_names;

    int group_of(NodeId node) const {
        return node.level == NodeLevel::Actor ? actor_group[node.index]
                                              : object_group[node.index];
    }
    int n_groups() const { return static_cast<int>(group_names.size()); }

    friend bool operator==(const GroupPartition&, const GroupPartition&) = default;
};

struct NodeTableRow {
    std::string id;
    NodeLevel level;
    std::string group;
    std::vector<std::string> attr_values;  // aligned with the declared attribute names; actors only
};

struct EdgeTableRow {
    TieLevel level;
    std::string from;
    std::string to;
};

struct BuildReport {
    long long duplicate_edges = 0;
    long long edges_a = 0;
    long long edges_b = 0;
    long long edges_x = 0;
};

// Two-level network: undirected binary A (actors), B (objects) and bipartite
// X (actor-object), plus partition and actor attributes. A and B keep a zero
// diagonal; every present tie is within-group.
class MultilevelNetwork {
public:
    MultilevelNetwork() = default;

    // Single-group network without attributes; node labels are generated.
    MultilevelNetwork(int n_actors, int n_objects);

    MultilevelNetwork(int n_actors, int n_objects, GroupPartition partition,
                      Attributes attrs, std::vector<std::string> actor_labels,
                      std::vector<std::string> object_labels);

    int n_actors() const { return n_actors_; }
    int n_objects() const { return n_objects_; }

    bool tie_a(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_actors_ + j] != 0; }
    bool tie_b(int o, int p) const { return b_[static_cast<std::size_t>(o) * n_objects_ + p] != 0; }
    bool tie_x(int i, int o) const { return x_[static_cast<std::size_t>(i) * n_objects_ + o] != 0; }
    bool tie(const DyadRef& dyad) const;

    long long tie_count(TieLevel level) const;

    int degree_a(int i) const { return deg_a_[i]; }
    int degree_b(int o) const { return deg_b_[o]; }
    int degree_x_actor(int i) const { return deg_x_actor_[i]; }
    int degree_x_object(int o) const { return deg_x_object_[o]; }

    int shared_a_partners(int i, int j) const;  // |N_A(i) ∩ N_A(j)|
    int shared_b_partners(int o, int p) const;
    int shared_objects(int i, int j) const;     // SO_ij = |N_X(i) ∩ N_X(j)|
    int shared_actors(int o, int p) const;      // SA_op

    bool within_group(const DyadRef& dyad) const;

    // Flips the dyad's tie state. Throws on out-of-range endpoints, self-ties
    // and cross-group dyads.
    void toggle(const DyadRef& dyad);
    void set_tie(const DyadRef& dyad, bool present);

    std::vector<DyadRef> toggleable_dyads(TieLevel level) const;
    long long toggleable_dyad_count(TieLevel level) const;

    const GroupPartition& partition() const { return partition_; }
    const Attributes& attributes() const { return attrs_; }
    const std::vector<std::string>& actor_labels() const { return actor_labels_; }
    const std::vector<std::string>& object_labels() const { return object_labels_; }

    friend bool operator==(const MultilevelNetwork&, const MultilevelNetwork&) = default;

private:
    void validate_dyad(const DyadRef& dyad) const;

    int n_actors_ = 0;
    int n_objects_ = 0;
    std::vector<std::uint8_t> a_, b_, x_;
    std::vector<int> deg_a_, deg_b_, deg_x_actor_, deg_x_object_;
    long long edges_a_ = 0, edges_b_ = 0, edges_x_ = 0;
    GroupPartition partition_;
    Attributes attrs_;
    std::vector<std::string> actor_labels_, object_labels_;
};

// Validates and assembles a network from node/edge tables. Duplicate edges
// collapse to one tie; symmetry is implicit. Throws ValidationError on
// unknown ids, self-ties, level mismatches, cross-group ties and missing
// attribute values.
MultilevelNetwork build_network(const std::vector<NodeTableRow>& nodes,
                                const std::vector<EdgeTableRow>& edges,
                                const std::vector<std::string>& attribute_names,
                                BuildReport* report = nullptr);

// Restricts both networks to the nodes (matched by label) present in both.
// Retained nodes keep the first network's relative order; ties incident to
// dropped nodes disappear. Throws ValidationError when attribute schemas or
// group assignments of shared nodes disagree.
std::pair<MultilevelNetwork, MultilevelNetwork> conform_waves(
    const MultilevelNetwork& wave1, const MultilevelNetwork& wave2);

// One single-group network per group, in group-name order.
std::vector<MultilevelNetwork> split_groups(const MultilevelNetwork& net);

}  // namespace mergm
