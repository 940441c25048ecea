#include <doctest.h>

#include "mergm/descriptives.hpp"
#include "support/generators.hpp"

using namespace mergm;

namespace {

MultilevelNetwork attributed_group(const std::vector<std::string>& genres,
                                   const std::vector<std::string>& genders = {}) {
    std::vector<NodeTableRow> nodes;
    for (std::size_t i = 0; i < genres.size(); ++i) {
        NodeTableRow row;
        row.id = "a" + std::to_string(i);
        row.level = NodeLevel::Actor;
        row.group = "g";
        row.attr_values = {genders.empty() ? "female" : genders[i], "yes", genres[i]};
        nodes.push_back(row);
    }
    return build_network(nodes, {}, {"gender", "education", "genre"});
}

}  // namespace

TEST_CASE("complete triangle: density 100%, average degree 2, centralization 0") {
    DescriptiveReport r = describe({testgen::triangle_network()});
    CHECK(r.groups[0].density_a == doctest::Approx(1.0));
    CHECK(r.groups[0].avg_degree_a == doctest::Approx(2.0));
    REQUIRE(r.groups[0].centralization_a.has_value());
    CHECK(*r.groups[0].centralization_a == doctest::Approx(0.0));
}

TEST_CASE("star K_{1,4} reaches Freeman centralization 1") {
    DescriptiveReport r = describe({testgen::star_network(4)});
    REQUIRE(r.groups[0].centralization_a.has_value());
    CHECK(*r.groups[0].centralization_a == doctest::Approx(1.0));
}

TEST_CASE("genre diversity: homogeneous 0, all distinct 1") {
    DescriptiveReport same = describe({attributed_group({"mosaic", "mosaic", "mosaic"})});
    CHECK(same.groups[0].genre_diversity == doctest::Approx(0.0));
    DescriptiveReport distinct = describe({attributed_group({"mosaic", "photo", "video"})});
    CHECK(distinct.groups[0].genre_diversity == doctest::Approx(1.0));
}

TEST_CASE("diversity is invariant under genre relabeling") {
    DescriptiveReport a = describe({attributed_group({"x", "x", "y", "z"})});
    DescriptiveReport b = describe({attributed_group({"z", "z", "x", "y"})});
    CHECK(a.groups[0].genre_diversity == doctest::Approx(b.groups[0].genre_diversity));
}

TEST_CASE("raw Blau option skips the n/(n-1) normalization") {
    std::vector<int> codes = {0, 1, 2};
    CHECK(blau_diversity(codes, true) == doctest::Approx(2.0 / 3.0));
    CHECK(blau_diversity(codes, false) == doctest::Approx(1.0));
    CHECK(blau_diversity({0}, false) == 0.0);  // single member: defined as 0
}

TEST_CASE("attribute shares") {
    DescriptiveReport r =
        describe({attributed_group({"a", "b", "c", "d"}, {"female", "male", "female", "male"})});
    CHECK(r.groups[0].share_female == doctest::Approx(0.5));
    CHECK(r.groups[0].share_artistic_education == doctest::Approx(1.0));
}

TEST_CASE("bipartite density is XEdge over n_actors * n_objects") {
    MultilevelNetwork net(2, 3);
    net.toggle({TieLevel::X, 0, 0});
    net.toggle({TieLevel::X, 1, 2});
    net.toggle({TieLevel::X, 0, 1});
    DescriptiveReport r = describe({net});
    CHECK(r.groups[0].density_x == doctest::Approx(3.0 / 6.0));
    CHECK(r.groups[0].avg_x_degree_actor == doctest::Approx(1.5));
    CHECK(r.groups[0].avg_x_degree_object == doctest::Approx(1.0));
}

TEST_CASE("groups below three nodes report centralization as undefined") {
    MultilevelNetwork net(2, 1);
    DescriptiveReport r = describe({net});
    CHECK_FALSE(r.groups[0].centralization_a.has_value());
    CHECK_FALSE(r.groups[0].centralization_b.has_value());
}

TEST_CASE("aggregates: min <= average <= max for every metric, totals sum") {
    Rng rng(12);
    testgen::RandomNetOptions opt;
    opt.n_groups = 3;
    opt.n_actors = 11;
    opt.n_objects = 7;
    MultilevelNetwork net = testgen::random_network(rng, opt);
    DescriptiveReport r = describe(split_groups(net));
    REQUIRE(r.groups.size() == 3);
    auto ordered = [&](auto member) {
        CHECK(r.minimum.*member <= r.average.*member + 1e-12);
        CHECK(r.average.*member <= r.maximum.*member + 1e-12);
    };
    ordered(&GroupDescriptives::n_actors);
    ordered(&GroupDescriptives::density_a);
    ordered(&GroupDescriptives::density_b);
    ordered(&GroupDescriptives::density_x);
    ordered(&GroupDescriptives::avg_degree_a);
    ordered(&GroupDescriptives::avg_x_degree_actor);
    ordered(&GroupDescriptives::share_female);
    ordered(&GroupDescriptives::genre_diversity);
    CHECK(r.total_actors == net.n_actors());
    CHECK(r.total_objects == net.n_objects());
}

TEST_CASE("adding a tie never decreases density or average degree") {
    Rng rng(14);
    MultilevelNetwork net = testgen::random_network(rng);
    DescriptiveReport before = describe({net});
    std::vector<DyadRef> dyads = net.toggleable_dyads(TieLevel::A);
    for (const DyadRef& dyad : dyads)
        if (!net.tie(dyad)) {
            net.toggle(dyad);
            break;
        }
    DescriptiveReport after = describe({net});
    CHECK(after.groups[0].density_a >= before.groups[0].density_a);
    CHECK(after.groups[0].avg_degree_a >= before.groups[0].avg_degree_a);
}

TEST_CASE("describe rejects an empty group list") {
    CHECK_THROWS_AS(describe({}), ValidationError);
}
