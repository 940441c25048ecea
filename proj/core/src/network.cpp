#include "mergm/network.hpp"

#include <algorithm>
#include <unordered_map>

namespace mergm {

Attributes Attributes::build(std::vector<std::string> names,
                             const std::vector<std::vector<std::string>>& values_per_actor) {
    Attributes out;
    out.names_ = std::move(names);
    const int n_attrs = static_cast<int>(out.names_.size());
    const int n_actors = static_cast<int>(values_per_actor.size());
    out.codes_.assign(n_attrs, std::vector<int>(n_actors, -1));
    out.labels_.assign(n_attrs, {});
    for (int a = 0; a < n_attrs; ++a) {
        std::unordered_map<std::string, int> code_of;
        for (int i = 0; i < n_actors; ++i) {
            if (a >= static_cast<int>(values_per_actor[i].size()) || values_per_actor[i][a].empty())
                throw ValidationError("actor " + std::to_string(i) + " has no value for attribute '" +
                                      out.names_[a] + "'");
            const std::string& v = values_per_actor[i][a];
            auto [it, inserted] = code_of.emplace(v, static_cast<int>(out.labels_[a].size()));
            if (inserted) out.labels_[a].push_back(v);
            out.codes_[a][i] = it->second;
        }
    }
    return out;
}

int Attributes::find(const std::string& name) const {
    for (int a = 0; a < count(); ++a)
        if (names_[a] == name) return a;
    return -1;
}

Attributes Attributes::subset(const std::vector<int>& actor_indices) const {
    std::vector<std::vector<std::string>> values(actor_indices.size());
    for (std::size_t k = 0; k < actor_indices.size(); ++k) {
        values[k].reserve(names_.size());
        for (int a = 0; a < count(); ++a) values[k].push_back(value(a, actor_indices[k]));
    }
    return build(names_, values);
}

MultilevelNetwork::MultilevelNetwork(int n_actors, int n_objects)
    : MultilevelNetwork(n_actors, n_objects,
                        GroupPartition{std::vector<int>(n_actors, 0), std::vector<int>(n_objects, 0), {"g"}},
                        Attributes{}, {}, {}) {
    actor_labels_.resize(n_actors);
    object_labels_.resize(n_objects);
    for (int i = 0; i < n_actors; ++i) actor_labels_[i] = "a" + std::to_string(i);
    for (int o = 0; o < n_objects; ++o) object_labels_[o] = "o" + std::to_string(o);
}

MultilevelNetwork::MultilevelNetwork(int n_actors, int n_objects, GroupPartition partition,
                                     Attributes attrs, std::vector<std::string> actor_labels,
                                     std::vector<std::string> object_labels)
    : n_actors_(n_actors),
      n_objects_(n_objects),
      a_(static_cast<std::size_t>(n_actors) * n_actors, 0),
      b_(static_cast<std::size_t>(n_objects) * n_objects, 0),
      x_(static_cast<std::size_t>(n_actors) * n_objects, 0),
      deg_a_(n_actors, 0),
      deg_b_(n_objects, 0),
      deg_x_actor_(n_actors, 0),
      deg_x_object_(n_objects, 0),
      partition_(std::move(partition)),
      attrs_(std::move(attrs)),
      actor_labels_(std::move(actor_labels)),
      object_labels_(std::move(object_labels)) {
    if (static_cast<int>(partition_.actor_group.size()) != n_actors_ ||
        static_cast<int>(partition_.object_group.size()) != n_objects_)
        throw ValidationError("partition size does not match node counts");
}

bool MultilevelNetwork::tie(const DyadRef& dyad) const {
    switch (dyad.level) {
        case TieLevel::A: return tie_a(dyad.first, dyad.second);
        case TieLevel::B: return tie_b(dyad.first, dyad.second);
        case TieLevel::X: return tie_x(dyad.first, dyad.second);
    }
    return false;
}

long long MultilevelNetwork::tie_count(TieLevel level) const {
    switch (level) {
        case TieLevel::A: return edges_a_;
        case TieLevel::B: return edges_b_;
        case TieLevel::X: return edges_x_;
    }
    return 0;
}

int MultilevelNetwork::shared_a_partners(int i, int j) const {
    const std::uint8_t* ri = &a_[static_cast<std::size_t>(i) * n_actors_];
    const std::uint8_t* rj = &a_[static_cast<std::size_t>(j) * n_actors_];
    int count = 0;
    for (int k = 0; k < n_actors_; ++k) count += ri[k] & rj[k];
    return count;
}

int MultilevelNetwork::shared_b_partners(int o, int p) const {
    const std::uint8_t* ro = &b_[static_cast<std::size_t>(o) * n_objects_];
    const std::uint8_t* rp = &b_[static_cast<std::size_t>(p) * n_objects_];
    int count = 0;
    for (int k = 0; k < n_objects_; ++k) count += ro[k] & rp[k];
    return count;
}

int MultilevelNetwork::shared_objects(int i, int j) const {
    const std::uint8_t* ri = &x_[static_cast<std::size_t>(i) * n_objects_];
    const std::uint8_t* rj = &x_[static_cast<std::size_t>(j) * n_objects_];
    int count = 0;
    for (int o = 0; o < n_objects_; ++o) count += ri[o] & rj[o];
    return count;
}

int MultilevelNetwork::shared_actors(int o, int p) const {
    int count = 0;
    for (int i = 0; i < n_actors_; ++i)
        count += x_[static_cast<std::size_t>(i) * n_objects_ + o] &
                 x_[static_cast<std::size_t>(i) * n_objects_ + p];
    return count;
}

bool MultilevelNetwork::within_group(const DyadRef& dyad) const {
    switch (dyad.level) {
        case TieLevel::A:
            return partition_.actor_group[dyad.first] == partition_.actor_group[dyad.second];
        case TieLevel::B:
            return partition_.object_group[dyad.first] == partition_.object_group[dyad.second];
        case TieLevel::X:
            return partition_.actor_group[dyad.first] == partition_.object_group[dyad.second];
    }
    return false;
}

void MultilevelNetwork::validate_dyad(const DyadRef& dyad) const {
    const int n_first = dyad.level == TieLevel::B ? n_objects_ : n_actors_;
    const int n_second = dyad.level == TieLevel::A ? n_actors_ : n_objects_;
    if (dyad.first < 0 || dyad.first >= n_first || dyad.second < 0 || dyad.second >= n_second)
        throw ValidationError("dyad endpoint out of range");
    if (dyad.level != TieLevel::X && dyad.first == dyad.second)
        throw ValidationError("self-ties are not allowed");
    if (!within_group(dyad))
        throw ValidationError("dyad crosses groups (structural zero)");
}

void MultilevelNetwork::toggle(const DyadRef& dyad) {
    validate_dyad(dyad);
    const int u = dyad.first, v = dyad.second;
    switch (dyad.level) {
        case TieLevel::A: {
            const std::uint8_t now = a_[static_cast<std::size_t>(u) * n_actors_ + v] ^ 1;
            a_[static_cast<std::size_t>(u) * n_actors_ + v] = now;
            a_[static_cast<std::size_t>(v) * n_actors_ + u] = now;
            const int d = now ? 1 : -1;
            deg_a_[u] += d;
            deg_a_[v] += d;
            edges_a_ += d;
            break;
        }
        case TieLevel::B: {
            const std::uint8_t now = b_[static_cast<std::size_t>(u) * n_objects_ + v] ^ 1;
            b_[static_cast<std::size_t>(u) * n_objects_ + v] = now;
            b_[static_cast<std::size_t>(v) * n_objects_ + u] = now;
            const int d = now ? 1 : -1;
            deg_b_[u] += d;
            deg_b_[v] += d;
            edges_b_ += d;
            break;
        }
        case TieLevel::X: {
            const std::uint8_t now = x_[static_cast<std::size_t>(u) * n_objects_ + v] ^ 1;
            x_[static_cast<std::size_t>(u) * n_objects_ + v] = now;
            const int d = now ? 1 : -1;
            deg_x_actor_[u] += d;
            deg_x_object_[v] += d;
            edges_x_ += d;
            break;
        }
    }
}

void MultilevelNetwork::set_tie(const DyadRef& dyad, bool present) {
    DyadRef canon = make_dyad(dyad.level, dyad.first, dyad.second);
    validate_dyad(canon);
    if (tie(canon) != present) toggle(canon);
}

std::vector<DyadRef> MultilevelNetwork::toggleable_dyads(TieLevel level) const {
    std::vector<DyadRef> out;
    switch (level) {
        case TieLevel::A:
            for (int i = 0; i < n_actors_; ++i)
                for (int j = i + 1; j < n_actors_; ++j)
                    if (partition_.actor_group[i] == partition_.actor_group[j])
                        out.push_back(DyadRef{TieLevel::A, i, j});
            break;
        case TieLevel::B:
            for (int o = 0; o < n_objects_; ++o)
                for (int p = o + 1; p < n_objects_; ++p)
                    if (partition_.object_group[o] == partition_.object_group[p])
                        out.push_back(DyadRef{TieLevel::B, o, p});
            break;
        case TieLevel::X:
            for (int i = 0; i < n_actors_; ++i)
                for (int o = 0; o < n_objects_; ++o)
                    if (partition_.actor_group[i] == partition_.object_group[o])
                        out.push_back(DyadRef{TieLevel::X, i, o});
            break;
    }
    return out;
}

long long MultilevelNetwork::toggleable_dyad_count(TieLevel level) const {
    long long count = 0;
    switch (level) {
        case TieLevel::A:
            for (int i = 0; i < n_actors_; ++i)
                for (int j = i + 1; j < n_actors_; ++j)
                    count += partition_.actor_group[i] == partition_.actor_group[j];
            break;
        case TieLevel::B:
            for (int o = 0; o < n_objects_; ++o)
                for (int p = o + 1; p < n_objects_; ++p)
                    count += partition_.object_group[o] == partition_.object_group[p];
            break;
        case TieLevel::X:
            for (int i = 0; i < n_actors_; ++i)
                for (int o = 0; o < n_objects_; ++o)
                    count += partition_.actor_group[i] == partition_.object_group[o];
            break;
    }
    return count;
}

namespace {

NodeLevel level_of_endpoint(TieLevel level, bool is_from) {
    switch (level) {
        case TieLevel::A: return NodeLevel::Actor;
        case TieLevel::B: return NodeLevel::Object;
        case TieLevel::X: return is_from ? NodeLevel::Actor : NodeLevel::Object;
    }
    return NodeLevel::Actor;
}

}  // namespace

MultilevelNetwork build_network(const std::vector<NodeTableRow>& nodes,
                                const std::vector<EdgeTableRow>& edges,
                                const std::vector<std::string>& attribute_names,
                                BuildReport* report) {
    std::unordered_map<std::string, NodeId> node_of;
    std::vector<std::string> actor_labels, object_labels;
    std::vector<std::string> group_names;
    std::unordered_map<std::string, int> group_code;
    GroupPartition partition;
    std::vector<std::vector<std::string>> actor_attr_values;

    for (const NodeTableRow& row : nodes) {
        if (node_of.count(row.id))
            throw ValidationError("duplicate node id '" + row.id + "'");
        auto [git, inserted] = group_code.emplace(row.group, static_cast<int>(group_names.size()));
        if (inserted) group_names.push_back(row.group);
        if (row.level == NodeLevel::Actor) {
            node_of[row.id] = NodeId{NodeLevel::Actor, static_cast<int>(actor_labels.size())};
            actor_labels.push_back(row.id);
            partition.actor_group.push_back(git->second);
            if (row.attr_values.size() < attribute_names.size())
                throw ValidationError("actor '" + row.id + "' is missing attribute values");
            actor_attr_values.push_back(row.attr_values);
        } else {
            node_of[row.id] = NodeId{NodeLevel::Object, static_cast<int>(object_labels.size())};
            object_labels.push_back(row.id);
            partition.object_group.push_back(git->second);
        }
    }
    partition.group_names = group_names;

    Attributes attrs = Attributes::build(attribute_names, actor_attr_values);
    const int n_actors = static_cast<int>(actor_labels.size());
    const int n_objects = static_cast<int>(object_labels.size());
    MultilevelNetwork net(n_actors, n_objects, std::move(partition), std::move(attrs),
                          std::move(actor_labels), std::move(object_labels));

    BuildReport local;
    BuildReport& rep = report ? *report : local;
    for (const EdgeTableRow& edge : edges) {
        auto from_it = node_of.find(edge.from);
        auto to_it = node_of.find(edge.to);
        if (from_it == node_of.end())
            throw ValidationError("edge references unknown node id '" + edge.from + "'");
        if (to_it == node_of.end())
            throw ValidationError("edge references unknown node id '" + edge.to + "'");
        NodeId from = from_it->second, to = to_it->second;
        if (edge.level == TieLevel::X && from.level == NodeLevel::Object &&
            to.level == NodeLevel::Actor)
            std::swap(from, to);  // X edges accepted in either order
        if (from.level != level_of_endpoint(edge.level, true) ||
            to.level != level_of_endpoint(edge.level, false))
            throw ValidationError("edge level " + std::string(to_string(edge.level)) +
                                  " does not match endpoint levels for '" + edge.from + "'-'" +
                                  edge.to + "'");
        if (edge.level != TieLevel::X && from.index == to.index)
            throw ValidationError("self-tie on node '" + edge.from + "'");
        DyadRef dyad = make_dyad(edge.level, from.index, to.index);
        if (!net.within_group(dyad))
            throw ValidationError("tie '" + edge.from + "'-'" + edge.to +
                                  "' crosses groups (structural zero)");
        if (net.tie(dyad)) {
            ++rep.duplicate_edges;
        } else {
            net.toggle(dyad);
        }
    }
    rep.edges_a = net.tie_count(TieLevel::A);
    rep.edges_b = net.tie_count(TieLevel::B);
    rep.edges_x = net.tie_count(TieLevel::X);
    return net;
}

namespace {

// Indices of labels present in both networks, in first-network order.
std::pair<std::vector<int>, std::vector<int>> shared_indices(
    const std::vector<std::string>& first, const std::vector<std::string>& second) {
    std::unordered_map<std::string, int> pos;
    for (std::size_t k = 0; k < second.size(); ++k) pos.emplace(second[k], static_cast<int>(k));
    std::vector<int> keep_first, keep_second;
    for (std::size_t k = 0; k < first.size(); ++k) {
        auto it = pos.find(first[k]);
        if (it != pos.end()) {
            keep_first.push_back(static_cast<int>(k));
            keep_second.push_back(it->second);
        }
    }
    return {keep_first, keep_second};
}

MultilevelNetwork restrict_network(const MultilevelNetwork& net, const std::vector<int>& actors,
                                   const std::vector<int>& objects,
                                   const std::vector<std::string>& group_names) {
    GroupPartition partition;
    partition.group_names = group_names;
    std::vector<std::string> actor_labels, object_labels;
    for (int i : actors) {
        actor_labels.push_back(net.actor_labels()[i]);
        const std::string& g = net.partition().group_names[net.partition().actor_group[i]];
        partition.actor_group.push_back(static_cast<int>(
            std::find(group_names.begin(), group_names.end(), g) - group_names.begin()));
    }
    for (int o : objects) {
        object_labels.push_back(net.object_labels()[o]);
        const std::string& g = net.partition().group_names[net.partition().object_group[o]];
        partition.object_group.push_back(static_cast<int>(
            std::find(group_names.begin(), group_names.end(), g) - group_names.begin()));
    }
    MultilevelNetwork out(static_cast<int>(actors.size()), static_cast<int>(objects.size()),
                          std::move(partition), net.attributes().subset(actors),
                          std::move(actor_labels), std::move(object_labels));
    for (std::size_t i = 0; i < actors.size(); ++i) {
        for (std::size_t j = i + 1; j < actors.size(); ++j)
            if (net.tie_a(actors[i], actors[j]))
                out.toggle(DyadRef{TieLevel::A, static_cast<int>(i), static_cast<int>(j)});
        for (std::size_t o = 0; o < objects.size(); ++o)
            if (net.tie_x(actors[i], objects[o]))
                out.toggle(DyadRef{TieLevel::X, static_cast<int>(i), static_cast<int>(o)});
    }
    for (std::size_t o = 0; o < objects.size(); ++o)
        for (std::size_t p = o + 1; p < objects.size(); ++p)
            if (net.tie_b(objects[o], objects[p]))
                out.toggle(DyadRef{TieLevel::B, static_cast<int>(o), static_cast<int>(p)});
    return out;
}

}  // namespace

std::pair<MultilevelNetwork, MultilevelNetwork> conform_waves(const MultilevelNetwork& wave1,
                                                              const MultilevelNetwork& wave2) {
    if (wave1.attributes().names() != wave2.attributes().names())
        throw ValidationError("attribute schemas differ between waves");

    auto [actors1, actors2] = shared_indices(wave1.actor_labels(), wave2.actor_labels());
    auto [objects1, objects2] = shared_indices(wave1.object_labels(), wave2.object_labels());

    for (std::size_t k = 0; k < actors1.size(); ++k) {
        const std::string& g1 = wave1.partition().group_names[wave1.partition().actor_group[actors1[k]]];
        const std::string& g2 = wave2.partition().group_names[wave2.partition().actor_group[actors2[k]]];
        if (g1 != g2)
            throw ValidationError("actor '" + wave1.actor_labels()[actors1[k]] +
                                  "' changes group between waves");
    }
    for (std::size_t k = 0; k < objects1.size(); ++k) {
        const std::string& g1 = wave1.partition().group_names[wave1.partition().object_group[objects1[k]]];
        const std::string& g2 = wave2.partition().group_names[wave2.partition().object_group[objects2[k]]];
        if (g1 != g2)
            throw ValidationError("object '" + wave1.object_labels()[objects1[k]] +
                                  "' changes group between waves");
    }

    // Shared group-name table over retained nodes, first-appearance order.
    std::vector<std::string> group_names;
    auto note_group = [&group_names](const std::string& g) {
        if (std::find(group_names.begin(), group_names.end(), g) == group_names.end())
            group_names.push_back(g);
    };
    for (int i : actors1) note_group(wave1.partition().group_names[wave1.partition().actor_group[i]]);
    for (int o : objects1) note_group(wave1.partition().group_names[wave1.partition().object_group[o]]);

    return {restrict_network(wave1, actors1, objects1, group_names),
            restrict_network(wave2, actors2, objects2, group_names)};
}

std::vector<MultilevelNetwork> split_groups(const MultilevelNetwork& net) {
    std::vector<MultilevelNetwork> out;
    for (int g = 0; g < net.partition().n_groups(); ++g) {
        std::vector<int> actors, objects;
        for (int i = 0; i < net.n_actors(); ++i)
            if (net.partition().actor_group[i] == g) actors.push_back(i);
        for (int o = 0; o < net.n_objects(); ++o)
            if (net.partition().object_group[o] == g) objects.push_back(o);
        out.push_back(restrict_network(net, actors, objects, {net.partition().group_names[g]}));
    }
    return out;
}

}  // namespace mergm
