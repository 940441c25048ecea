#include <doctest.h>

#include <cmath>

#include "mergm/statistics.hpp"
#include "support/generators.hpp"
#include "support/naive_stats.hpp"

using namespace mergm;

TEST_CASE("catalog lookups: ids, aliases, labels") {
    CHECK(find_stat("EdgeA") == StatId::EdgeA);
    CHECK(find_stat("ALT4CYC_A") == StatId::Alt4CycleA);
    CHECK(find_stat("X2StarMatch") == StatId::XMatchB);
    CHECK(find_stat("Pair of actors sharing an object") == StatId::XStar2B);
    CHECK(find_stat("pair of actors sharing multiple objects") == StatId::Alt4CycleA);
    CHECK(find_stat("Degree distribution (A)") == StatId::ASA);
    CHECK(find_stat("Influence of dyadic social ties on engagement with the same material context") ==
          StatId::C4AXB);
    CHECK_FALSE(find_stat("NotAStatistic").has_value());
    CHECK(descriptor_name(StatDescriptor{StatId::MatchA, 2.0, "gender"}) == "Gender_MatchA");
}

TEST_CASE("empty network: every statistic is zero") {
    MultilevelNetwork net(0, 0);
    for (const StatInfo& info : stat_catalog()) {
        if (info.uses_attribute) continue;  // attributes undeclared here
        CHECK(global_statistic(net, StatDescriptor{info.id}) == doctest::Approx(0.0));
    }
}

TEST_CASE("triangle fixtures: Star2A=3, TriangleA=1, ATA(2)=3, clusteringA=1") {
    MultilevelNetwork tri = testgen::triangle_network();
    CHECK(global_statistic(tri, {StatId::EdgeA}) == 3.0);
    CHECK(global_statistic(tri, {StatId::Star2A}) == 3.0);
    CHECK(global_statistic(tri, {StatId::TriangleA}) == 1.0);
    CHECK(global_statistic(tri, {StatId::ATA, 2.0}) == doctest::Approx(3.0));
    CHECK(global_statistic(tri, {StatId::ClusteringA}) == doctest::Approx(1.0));
    CHECK(global_statistic(tri, {StatId::IsolatesA}) == 0.0);
}

TEST_CASE("alternating star fixture: K_{1,3} has ASA(2) = 2.5") {
    MultilevelNetwork star = testgen::star_network(3);
    // oracle: truncated alternating sum S2 - S3/2 = 3 - 1/2
    std::vector<int> degrees = {3, 1, 1, 1};
    CHECK(naive::alt_star_series(degrees, 2.0, 3) == doctest::Approx(2.5));
    CHECK(global_statistic(star, {StatId::ASA, 2.0}) == doctest::Approx(2.5));
}

TEST_CASE("cross-level fixture: shared object on an A tie") {
    // two A-tied actors both using one object
    MultilevelNetwork net(2, 1);
    net.toggle({TieLevel::A, 0, 1});
    net.toggle({TieLevel::X, 0, 0});
    net.toggle({TieLevel::X, 1, 0});
    CHECK(global_statistic(net, {StatId::TriangleXAX}) == 1.0);
    CHECK(global_statistic(net, {StatId::C4AXB}) == 0.0);  // no B tie
    CHECK(global_statistic(net, {StatId::XStar2B}) == 1.0);
    CHECK(global_statistic(net, {StatId::L3XAX}) == 0.0);  // 1*1 - 1
}

TEST_CASE("clustering coefficients: zero denominators give zero") {
    MultilevelNetwork net(2, 2);
    net.toggle({TieLevel::A, 0, 1});  // one edge, no 2-stars
    CHECK(global_statistic(net, {StatId::ClusteringA}) == 0.0);
    CHECK(global_statistic(net, {StatId::ClusteringX}) == 0.0);
}

TEST_CASE("global statistics agree with the brute-force oracle on random networks") {
    Rng rng(101);
    for (int trial = 0; trial < 12; ++trial) {
        testgen::RandomNetOptions opt;
        opt.n_actors = 5 + rng.next_index(6);
        opt.n_objects = 3 + rng.next_index(5);
        opt.n_groups = 1 + rng.next_index(2);
        MultilevelNetwork net = testgen::random_network(rng, opt);
        for (const StatDescriptor& desc : testgen::full_model_stats()) {
            const double expected = naive::stat(net, desc);
            const double actual = global_statistic(net, desc);
            INFO("statistic ", descriptor_name(desc), " trial ", trial);
            CHECK(actual == doctest::Approx(expected).epsilon(1e-9));
        }
    }
}

TEST_CASE("alternating closed forms equal truncated alternating sums") {
    Rng rng(55);
    for (int trial = 0; trial < 20; ++trial) {
        testgen::RandomNetOptions opt;
        opt.n_actors = 4 + rng.next_index(9);
        opt.n_objects = 3 + rng.next_index(8);
        MultilevelNetwork net = testgen::random_network(rng, opt);
        const double lambda = 1.5 + rng.next_double() * 2.0;

        std::vector<int> deg_a(net.n_actors()), deg_xa(net.n_actors()), deg_xb(net.n_objects());
        for (int i = 0; i < net.n_actors(); ++i) deg_a[i] = net.degree_a(i);
        for (int i = 0; i < net.n_actors(); ++i) deg_xa[i] = net.degree_x_actor(i);
        for (int o = 0; o < net.n_objects(); ++o) deg_xb[o] = net.degree_x_object(o);

        CHECK(global_statistic(net, {StatId::ASA, lambda}) ==
              doctest::Approx(naive::alt_star_series(deg_a, lambda, net.n_actors() - 1))
                  .epsilon(1e-12));
        CHECK(global_statistic(net, {StatId::XASA, lambda}) ==
              doctest::Approx(naive::alt_star_series(deg_xa, lambda, net.n_objects()))
                  .epsilon(1e-12));
        CHECK(global_statistic(net, {StatId::XASB, lambda}) ==
              doctest::Approx(naive::alt_star_series(deg_xb, lambda, net.n_actors()))
                  .epsilon(1e-12));
    }
}

TEST_CASE("attribute decomposition: MatchA + MismatchA = EdgeA") {
    Rng rng(77);
    for (int trial = 0; trial < 10; ++trial) {
        MultilevelNetwork net = testgen::random_network(rng);
        for (const char* attr : {"gender", "education", "genre"}) {
            const double match = global_statistic(net, {StatId::MatchA, 2.0, attr});
            const double mismatch = global_statistic(net, {StatId::MismatchA, 2.0, attr});
            CHECK(match + mismatch == doctest::Approx(net.tie_count(TieLevel::A)));
        }
    }
}

TEST_CASE("monotone counts never decrease when a tie is added") {
    Rng rng(31);
    const StatId monotone[] = {StatId::EdgeA,       StatId::EdgeB,       StatId::XEdge,
                               StatId::Star2A,      StatId::Star3A,      StatId::Star2B,
                               StatId::TriangleXAX, StatId::TriangleXBX, StatId::C4AXB};
    for (int trial = 0; trial < 10; ++trial) {
        MultilevelNetwork net = testgen::random_network(rng);
        std::vector<DyadRef> dyads;
        for (TieLevel level : {TieLevel::A, TieLevel::B, TieLevel::X}) {
            auto d = net.toggleable_dyads(level);
            dyads.insert(dyads.end(), d.begin(), d.end());
        }
        const DyadRef dyad = dyads[rng.next_index(static_cast<int>(dyads.size()))];
        net.set_tie(dyad, false);
        std::vector<double> before;
        for (StatId id : monotone) before.push_back(global_statistic(net, {id}));
        net.toggle(dyad);
        for (std::size_t k = 0; k < before.size(); ++k)
            CHECK(global_statistic(net, {monotone[k]}) >= before[k]);
    }
}

TEST_CASE("catalog values are invariant under consistent relabeling") {
    Rng rng(41);
    testgen::RandomNetOptions opt;
    opt.n_actors = 7;
    opt.n_objects = 5;
    MultilevelNetwork net = testgen::random_network(rng, opt);

    // reversed node order, same graph
    std::vector<NodeTableRow> nodes;
    for (int i = opt.n_actors - 1; i >= 0; --i) {
        NodeTableRow row{net.actor_labels()[i], NodeLevel::Actor, "g", {}};
        for (int a = 0; a < net.attributes().count(); ++a)
            row.attr_values.push_back(net.attributes().value(a, i));
        nodes.push_back(row);
    }
    for (int o = opt.n_objects - 1; o >= 0; --o)
        nodes.push_back(NodeTableRow{net.object_labels()[o], NodeLevel::Object, "g", {}});
    std::vector<EdgeTableRow> edges;
    for (int i = 0; i < opt.n_actors; ++i) {
        for (int j = i + 1; j < opt.n_actors; ++j)
            if (net.tie_a(i, j))
                edges.push_back({TieLevel::A, net.actor_labels()[i], net.actor_labels()[j]});
        for (int o = 0; o < opt.n_objects; ++o)
            if (net.tie_x(i, o))
                edges.push_back({TieLevel::X, net.actor_labels()[i], net.object_labels()[o]});
    }
    for (int o = 0; o < opt.n_objects; ++o)
        for (int p = o + 1; p < opt.n_objects; ++p)
            if (net.tie_b(o, p))
                edges.push_back({TieLevel::B, net.object_labels()[o], net.object_labels()[p]});
    MultilevelNetwork relabeled = build_network(nodes, edges, net.attributes().names());

    for (const StatDescriptor& desc : testgen::full_model_stats())
        CHECK(global_statistic(net, desc) ==
              doctest::Approx(global_statistic(relabeled, desc)).epsilon(1e-12));
}

TEST_CASE("statistic_vector matches per-statistic calls element-wise") {
    Rng rng(61);
    MultilevelNetwork net = testgen::random_network(rng);
    ModelSpec model(testgen::full_model_stats(), {TieLevel::A, TieLevel::B, TieLevel::X});
    StatVector z = statistic_vector(net, model);
    REQUIRE(z.size() == model.stats().size());
    for (int k = 0; k < model.size(); ++k)
        CHECK(z[k] == doctest::Approx(global_statistic(net, model.stats()[k])));
}

TEST_CASE("ModelSpec validation") {
    const StatDescriptor edge{StatId::EdgeA};
    CHECK_THROWS_AS(ModelSpec({}, {TieLevel::A}), ValidationError);
    CHECK_THROWS_AS(ModelSpec({edge, edge}, {TieLevel::A}), ValidationError);
    CHECK_THROWS_AS(ModelSpec({{StatId::ClusteringA}}, {TieLevel::A}), ValidationError);
    CHECK_THROWS_AS(ModelSpec({{StatId::ASA, 1.0}}, {TieLevel::A}), ValidationError);
    CHECK_THROWS_AS(ModelSpec({{StatId::MatchA}}, {TieLevel::A}), ValidationError);     // needs attribute
    CHECK_THROWS_AS(ModelSpec({{StatId::EdgeA, 2.0, "gender"}}, {TieLevel::A}),
                    ValidationError);                                                    // takes none
    CHECK_THROWS_AS(ModelSpec({edge}, {TieLevel::A, TieLevel::B}), ValidationError);     // B untouched
    CHECK_NOTHROW(ModelSpec({edge, {StatId::MatchA, 2.0, "gender"}}, {TieLevel::A}));
    // two descriptors of the same id with different bindings are distinct
    CHECK_NOTHROW(ModelSpec({{StatId::MatchA, 2.0, "gender"}, {StatId::MatchA, 2.0, "genre"}},
                            {TieLevel::A}));
}

TEST_CASE("unknown attribute is reported") {
    MultilevelNetwork net(3, 0);
    CHECK_THROWS_AS(global_statistic(net, {StatId::MatchA, 2.0, "shoe_size"}), ValidationError);
}

TEST_CASE("degree stddev and skewness fixtures") {
    // star K_{1,4}: degrees 4,1,1,1,1 -> sample sd = sqrt(9/5 * ... ) computed by hand
    MultilevelNetwork star = testgen::star_network(4);
    // mean 8/5 = 1.6; deviations 2.4,-0.6x4; ss = 5.76 + 4*0.36 = 7.2; sd = sqrt(7.2/4)
    CHECK(global_statistic(star, {StatId::StddevDegreeA}) ==
          doctest::Approx(std::sqrt(7.2 / 4.0)));
    // constant degrees -> zero spread and zero skewness
    MultilevelNetwork tri = testgen::triangle_network();
    CHECK(global_statistic(tri, {StatId::StddevDegreeA}) == doctest::Approx(0.0));
    CHECK(global_statistic(tri, {StatId::SkewDegreeA}) == doctest::Approx(0.0));
}
