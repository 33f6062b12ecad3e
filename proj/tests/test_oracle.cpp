#include <doctest.h>

#include <cmath>
#include <sstream>

#include "cdc/oracle.hpp"
#include "test_util.hpp"

using namespace cdc;

namespace {

TripleNetwork parse(const std::string& text) {
    std::istringstream in(text);
    return load_triple_network(in, "<test>");
}

// complete cross edges between sides of size 3, each side a path
const char* kComplete33 =
    "trinet 3 3\n#A\n0 1\n1 2\n#B\n0 1\n1 2\n#C\n"
    "0 0\n0 1\n0 2\n1 0\n1 1\n1 2\n2 0\n2 1\n2 2\n";

// one hub, five satellites, no B-side edges
const char* kStar15 = "trinet 1 5\n#C\n0 0\n0 1\n0 2\n0 3\n0 4\n";

}  // namespace

TEST_CASE("densest pair on complete cross graph takes everything") {
    TripleNetwork net = parse(kComplete33);
    auto best = brute_force_densest_bipartite(net);
    CHECK(best.density == 3.0);
    CHECK(best.nodes.a == std::vector<std::uint32_t>{0, 1, 2});
    CHECK(best.nodes.b == std::vector<std::uint32_t>{0, 1, 2});
    auto cdc = brute_force_cdc(net);
    REQUIRE(cdc.has_value());
    CHECK(cdc->density == 3.0);
    CHECK(cdc->connected_a);
    CHECK(cdc->connected_b);
}

TEST_CASE("star network separates the three pattern notions") {
    TripleNetwork net = parse(kStar15);
    auto best = brute_force_densest_bipartite(net);
    CHECK(best.density == doctest::Approx(std::sqrt(5.0)).epsilon(1e-12));

    // satellites share no B edges, so connected B sets are singletons
    auto cdc = brute_force_cdc(net);
    REQUIRE(cdc.has_value());
    CHECK(cdc->density == 1.0);
    CHECK(cdc->nodes.a == std::vector<std::uint32_t>{0});
    CHECK(cdc->nodes.b == std::vector<std::uint32_t>{0});

    auto ocd = brute_force_ocd(net);
    REQUIRE(ocd.has_value());
    CHECK(ocd->density == doctest::Approx(std::sqrt(5.0)).epsilon(1e-12));
    CHECK(ocd->connected_a);
    CHECK_FALSE(ocd->connected_b);
}

TEST_CASE("no cross edges means no connected pattern") {
    TripleNetwork net = parse("trinet 3 3\n#A\n0 1\n#B\n0 1\n");
    CHECK_FALSE(brute_force_cdc(net).has_value());
    CHECK_FALSE(brute_force_ocd(net).has_value());
    auto best = brute_force_densest_bipartite(net);
    CHECK(best.density == 0.0);
    CHECK(best.nodes.a == std::vector<std::uint32_t>{0});
    CHECK(best.nodes.b == std::vector<std::uint32_t>{0});
}

TEST_CASE("single cross edge admits no one-side-connected pattern") {
    TripleNetwork net = parse("trinet 1 1\n#C\n0 0\n");
    CHECK_FALSE(brute_force_ocd(net).has_value());
    auto cdc = brute_force_cdc(net);
    REQUIRE(cdc.has_value());
    CHECK(cdc->density == 1.0);
}

TEST_CASE("ties resolve to the lexicographically smallest pair") {
    // two mirror-image dense blocks
    TripleNetwork net = parse(
        "trinet 4 4\n#A\n0 1\n2 3\n#B\n0 1\n2 3\n#C\n"
        "0 0\n0 1\n1 0\n1 1\n2 2\n2 3\n3 2\n3 3\n");
    auto cdc = brute_force_cdc(net);
    REQUIRE(cdc.has_value());
    CHECK(cdc->density == 2.0);
    CHECK(cdc->nodes.a == std::vector<std::uint32_t>{0, 1});
    CHECK(cdc->nodes.b == std::vector<std::uint32_t>{0, 1});
}

TEST_CASE("unconstrained optimum dominates constrained ones") {
    for (std::uint64_t seed = 1; seed <= 120; ++seed) {
        TripleNetwork net = testutil::random_triple_network(seed, 2 + seed % 5, 2 + (seed / 2) % 5);
        auto best = brute_force_densest_bipartite(net);
        if (auto cdc = brute_force_cdc(net)) {
            REQUIRE(compare_density(*cdc, best) <= 0);
            REQUIRE(cdc->connected_a);
            REQUIRE(cdc->connected_b);
            REQUIRE(cdc->edges >= 1);
        }
        if (auto ocd = brute_force_ocd(net)) {
            REQUIRE(compare_density(*ocd, best) <= 0);
            REQUIRE(ocd->connected_a != ocd->connected_b);
            REQUIRE(ocd->edges >= 1);
        }
    }
}

TEST_CASE("seeded search honours containment and connectivity rules") {
    TripleNetwork net = parse(kComplete33);
    auto both = brute_force_seeded(net, {2}, {0});
    REQUIRE(both.has_value());
    CHECK(both->density == 3.0);

    TripleNetwork star = parse(kStar15);
    auto hub = brute_force_seeded(star, {0}, {});
    REQUIRE(hub.has_value());
    CHECK(hub->density == doctest::Approx(std::sqrt(5.0)).epsilon(1e-12));

    // seeding a satellite forces it into the pair
    auto sat = brute_force_seeded(star, {}, {3});
    REQUIRE(sat.has_value());
    REQUIRE(std::binary_search(sat->nodes.b.begin(), sat->nodes.b.end(), 3u));
    // lone B seed must form a connected set, so it stays a singleton
    CHECK(sat->nodes.b == std::vector<std::uint32_t>{3});
    CHECK(sat->density == 1.0);

    CHECK_THROWS_AS(brute_force_seeded(star, {}, {}), std::invalid_argument);
    CHECK_THROWS_AS(brute_force_seeded(star, {5}, {}), std::out_of_range);
}

TEST_CASE("seeded results never beat the matching unseeded search") {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        TripleNetwork net = testutil::random_triple_network(700 + seed, 3 + seed % 4, 3 + seed % 3);
        std::mt19937_64 rng(seed);
        const std::uint32_t sa = rng() % net.n_a();
        const std::uint32_t sb = rng() % net.n_b();
        auto seeded = brute_force_seeded(net, {sa}, {sb});
        auto cdc = brute_force_cdc(net);
        if (seeded) {
            REQUIRE(cdc.has_value());
            REQUIRE(compare_density(*seeded, *cdc) <= 0);
            REQUIRE(std::binary_search(seeded->nodes.a.begin(), seeded->nodes.a.end(), sa));
            REQUIRE(std::binary_search(seeded->nodes.b.begin(), seeded->nodes.b.end(), sb));
        }
    }
}

TEST_CASE("size guard rejects oversized inputs") {
    TripleNetwork big = testutil::random_triple_network(1, 9, 8);
    CHECK_THROWS_AS(brute_force_densest_bipartite(big), std::invalid_argument);
    CHECK_THROWS_AS(brute_force_cdc(big), std::invalid_argument);
    CHECK_NOTHROW(brute_force_cdc(big, 17));
}
