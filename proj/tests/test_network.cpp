#include <doctest.h>

#include <algorithm>

#include "mergm/network.hpp"
#include "mergm/rng.hpp"
#include "support/generators.hpp"

using namespace mergm;

namespace {

NodeTableRow actor(const std::string& id, const std::string& group,
                   std::vector<std::string> attrs = {}) {
    return NodeTableRow{id, NodeLevel::Actor, group, std::move(attrs)};
}

NodeTableRow object(const std::string& id, const std::string& group) {
    return NodeTableRow{id, NodeLevel::Object, group, {}};
}

}  // namespace

TEST_CASE("build_network: empty tables give an empty network") {
    MultilevelNetwork net = build_network({}, {}, {});
    CHECK(net.n_actors() == 0);
    CHECK(net.n_objects() == 0);
    CHECK(net.tie_count(TieLevel::A) == 0);
    CHECK(net.tie_count(TieLevel::B) == 0);
    CHECK(net.tie_count(TieLevel::X) == 0);
}

TEST_CASE("build_network: toggleable dyad counts for 3 actors + 2 objects, one group") {
    MultilevelNetwork net = build_network(
        {actor("a1", "g"), actor("a2", "g"), actor("a3", "g"), object("o1", "g"), object("o2", "g")},
        {}, {});
    CHECK(net.toggleable_dyad_count(TieLevel::A) == 3);
    CHECK(net.toggleable_dyad_count(TieLevel::B) == 1);
    CHECK(net.toggleable_dyad_count(TieLevel::X) == 6);
    CHECK(net.toggleable_dyads(TieLevel::X).size() == 6);
}

TEST_CASE("build_network: input validation") {
    const std::vector<NodeTableRow> nodes = {actor("a1", "g1"), actor("a2", "g2"),
                                             object("o1", "g1")};
    CHECK_THROWS_AS(build_network(nodes, {{TieLevel::A, "a1", "a1"}}, {}), ValidationError);
    CHECK_THROWS_AS(build_network(nodes, {{TieLevel::A, "a1", "zz"}}, {}), ValidationError);
    CHECK_THROWS_AS(build_network(nodes, {{TieLevel::A, "a1", "a2"}}, {}), ValidationError);  // cross-group
    CHECK_THROWS_AS(build_network(nodes, {{TieLevel::B, "a1", "o1"}}, {}), ValidationError);  // level mismatch
    CHECK_THROWS_AS(build_network({actor("a1", "g"), actor("a1", "g")}, {}, {}), ValidationError);
    // attribute declared but not provided
    CHECK_THROWS_AS(build_network({actor("a1", "g")}, {}, {"gender"}), ValidationError);
}

TEST_CASE("build_network: duplicate edges collapse and are reported") {
    BuildReport report;
    MultilevelNetwork net = build_network(
        {actor("a1", "g"), actor("a2", "g")},
        {{TieLevel::A, "a1", "a2"}, {TieLevel::A, "a2", "a1"}, {TieLevel::A, "a1", "a2"}}, {},
        &report);
    CHECK(net.tie_count(TieLevel::A) == 1);
    CHECK(report.duplicate_edges == 2);
}

TEST_CASE("build_network: X edges accepted in either endpoint order") {
    MultilevelNetwork net = build_network({actor("a1", "g"), object("o1", "g")},
                                          {{TieLevel::X, "o1", "a1"}}, {});
    CHECK(net.tie_x(0, 0));
}

TEST_CASE("apply_toggle: flip, involution, degree consistency") {
    MultilevelNetwork net(4, 2);
    const DyadRef dyad{TieLevel::A, 1, 3};
    CHECK_FALSE(net.tie(dyad));
    net.toggle(dyad);
    CHECK(net.tie(dyad));
    CHECK(net.tie_a(3, 1));  // symmetry
    CHECK(net.tie_count(TieLevel::A) == 1);
    CHECK(net.degree_a(1) == 1);
    CHECK(net.degree_a(3) == 1);
    net.toggle(dyad);
    CHECK_FALSE(net.tie(dyad));
    CHECK(net.degree_a(1) == 0);
    CHECK(net.tie_count(TieLevel::A) == 0);

    const DyadRef xdyad{TieLevel::X, 2, 0};
    net.toggle(xdyad);
    CHECK(net.degree_x_actor(2) == 1);
    CHECK(net.degree_x_object(0) == 1);
}

TEST_CASE("apply_toggle: cross-group and out-of-range dyads are rejected") {
    MultilevelNetwork net = build_network(
        {actor("a1", "g1"), actor("a2", "g2"), object("o1", "g1")}, {}, {});
    CHECK_THROWS_AS(net.toggle(DyadRef{TieLevel::A, 0, 1}), ValidationError);
    CHECK_THROWS_AS(net.toggle(DyadRef{TieLevel::X, 1, 0}), ValidationError);
    CHECK_THROWS_AS(net.toggle(DyadRef{TieLevel::A, 0, 7}), ValidationError);
    CHECK_THROWS_AS(net.toggle(DyadRef{TieLevel::A, 0, 0}), ValidationError);
}

TEST_CASE("toggles never create cross-group ties on random networks") {
    Rng rng(11);
    testgen::RandomNetOptions opt;
    opt.n_groups = 3;
    opt.n_actors = 9;
    opt.n_objects = 6;
    MultilevelNetwork net = testgen::random_network(rng, opt);
    for (int i = 0; i < net.n_actors(); ++i)
        for (int j = i + 1; j < net.n_actors(); ++j)
            if (net.tie_a(i, j))
                CHECK(net.partition().actor_group[i] == net.partition().actor_group[j]);
    for (int i = 0; i < net.n_actors(); ++i)
        for (int o = 0; o < net.n_objects(); ++o)
            if (net.tie_x(i, o))
                CHECK(net.partition().actor_group[i] == net.partition().object_group[o]);
}

TEST_CASE("shared partner queries match adjacency scans") {
    Rng rng(7);
    MultilevelNetwork net = testgen::random_network(rng);
    for (int i = 0; i < net.n_actors(); ++i)
        for (int j = i + 1; j < net.n_actors(); ++j) {
            int sp = 0, so = 0;
            for (int k = 0; k < net.n_actors(); ++k) sp += net.tie_a(i, k) && net.tie_a(j, k);
            for (int o = 0; o < net.n_objects(); ++o) so += net.tie_x(i, o) && net.tie_x(j, o);
            CHECK(net.shared_a_partners(i, j) == sp);
            CHECK(net.shared_objects(i, j) == so);
        }
}

TEST_CASE("conform_waves: identical node sets are the identity") {
    Rng rng(3);
    MultilevelNetwork net = testgen::random_network(rng);
    auto [w1, w2] = conform_waves(net, net);
    CHECK(w1 == net);
    CHECK(w2 == net);
}

TEST_CASE("conform_waves: intersection keeps shared nodes, drops incident ties") {
    MultilevelNetwork w1 = build_network(
        {actor("a", "g"), actor("b", "g"), actor("c", "g")},
        {{TieLevel::A, "a", "b"}, {TieLevel::A, "b", "c"}}, {});
    MultilevelNetwork w2 = build_network(
        {actor("b", "g"), actor("c", "g"), actor("d", "g")},
        {{TieLevel::A, "b", "c"}, {TieLevel::A, "c", "d"}}, {});
    auto [c1, c2] = conform_waves(w1, w2);
    CHECK(c1.n_actors() == 2);
    CHECK(c1.actor_labels() == std::vector<std::string>{"b", "c"});
    CHECK(c2.actor_labels() == std::vector<std::string>{"b", "c"});
    CHECK(c1.tie_a(0, 1));  // b-c survived in wave 1
    CHECK(c2.tie_a(0, 1));
    CHECK(c1.tie_count(TieLevel::A) == 1);  // a-b dropped with node a
    CHECK(c2.tie_count(TieLevel::A) == 1);  // c-d dropped with node d
}

TEST_CASE("conform_waves: disjoint node sets give empty networks") {
    MultilevelNetwork w1 = build_network({actor("a", "g")}, {}, {});
    MultilevelNetwork w2 = build_network({actor("b", "g")}, {}, {});
    auto [c1, c2] = conform_waves(w1, w2);
    CHECK(c1.n_actors() == 0);
    CHECK(c2.n_actors() == 0);
}

TEST_CASE("conform_waves: schema mismatches are rejected") {
    MultilevelNetwork w1 =
        build_network({actor("a", "g", {"female"})}, {}, {"gender"});
    MultilevelNetwork w2 = build_network({actor("a", "g")}, {}, {});
    CHECK_THROWS_AS(conform_waves(w1, w2), ValidationError);

    MultilevelNetwork g1 = build_network({actor("a", "g1"), actor("pad", "g2")}, {}, {});
    MultilevelNetwork g2 = build_network({actor("a", "g2"), actor("pad", "g1")}, {}, {});
    CHECK_THROWS_AS(conform_waves(g1, g2), ValidationError);
}

TEST_CASE("consistent relabeling preserves degree multisets") {
    Rng rng(19);
    MultilevelNetwork net = testgen::random_network(rng);

    // relabel by reversing both node orders
    std::vector<NodeTableRow> nodes;
    for (int i = net.n_actors() - 1; i >= 0; --i) {
        NodeTableRow row;
        row.id = net.actor_labels()[i];
        row.level = NodeLevel::Actor;
        row.group = net.partition().group_names[net.partition().actor_group[i]];
        for (int a = 0; a < net.attributes().count(); ++a)
            row.attr_values.push_back(net.attributes().value(a, i));
        nodes.push_back(row);
    }
    for (int o = net.n_objects() - 1; o >= 0; --o)
        nodes.push_back(NodeTableRow{net.object_labels()[o], NodeLevel::Object,
                                     net.partition().group_names[net.partition().object_group[o]],
                                     {}});
    std::vector<EdgeTableRow> edges;
    for (int i = 0; i < net.n_actors(); ++i) {
        for (int j = i + 1; j < net.n_actors(); ++j)
            if (net.tie_a(i, j))
                edges.push_back({TieLevel::A, net.actor_labels()[i], net.actor_labels()[j]});
        for (int o = 0; o < net.n_objects(); ++o)
            if (net.tie_x(i, o))
                edges.push_back({TieLevel::X, net.actor_labels()[i], net.object_labels()[o]});
    }
    for (int o = 0; o < net.n_objects(); ++o)
        for (int p = o + 1; p < net.n_objects(); ++p)
            if (net.tie_b(o, p))
                edges.push_back({TieLevel::B, net.object_labels()[o], net.object_labels()[p]});

    MultilevelNetwork relabeled = build_network(nodes, edges, net.attributes().names());

    auto degrees = [](const MultilevelNetwork& g) {
        std::vector<int> d;
        for (int i = 0; i < g.n_actors(); ++i) d.push_back(g.degree_a(i));
        for (int i = 0; i < g.n_actors(); ++i) d.push_back(g.degree_x_actor(i));
        for (int o = 0; o < g.n_objects(); ++o) d.push_back(g.degree_b(o));
        for (int o = 0; o < g.n_objects(); ++o) d.push_back(g.degree_x_object(o));
        std::sort(d.begin(), d.end());
        return d;
    };
    CHECK(degrees(net) == degrees(relabeled));
    CHECK(net.tie_count(TieLevel::A) == relabeled.tie_count(TieLevel::A));
    CHECK(net.tie_count(TieLevel::X) == relabeled.tie_count(TieLevel::X));
}

TEST_CASE("split_groups partitions nodes and keeps within-group ties") {
    Rng rng(23);
    testgen::RandomNetOptions opt;
    opt.n_groups = 2;
    opt.n_actors = 8;
    opt.n_objects = 4;
    MultilevelNetwork net = testgen::random_network(rng, opt);
    std::vector<MultilevelNetwork> parts = split_groups(net);
    REQUIRE(parts.size() == 2);
    int actors = 0, objects = 0;
    long long edges_a = 0;
    for (const MultilevelNetwork& part : parts) {
        actors += part.n_actors();
        objects += part.n_objects();
        edges_a += part.tie_count(TieLevel::A);
    }
    CHECK(actors == net.n_actors());
    CHECK(objects == net.n_objects());
    CHECK(edges_a == net.tie_count(TieLevel::A));  // all A ties are within-group
}
