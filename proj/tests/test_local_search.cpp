#include <doctest.h>

#include <cmath>
#include <sstream>

#include "cdc/local_search.hpp"
#include "cdc/oracle.hpp"
#include "test_util.hpp"

using namespace cdc;

namespace {

TripleNetwork parse(const std::string& text) {
    std::istringstream in(text);
    return load_triple_network(in, "<test>");
}

// replays the whole run and checks every invariant the result promises
void check_search_invariants(const TripleNetwork& net, const NodeSetPair& seeds,
                             const LocalSearchResult& r) {
    REQUIRE(r.additions.size() <= std::size_t(net.n_a()) + net.n_b());

    NodeSetPair state = r.initial;
    auto contains = [](const std::vector<std::uint32_t>& sorted, std::uint32_t v) {
        return std::binary_search(sorted.begin(), sorted.end(), v);
    };
    for (std::uint32_t v : seeds.a) REQUIRE(contains(state.a, v));
    for (std::uint32_t v : seeds.b) REQUIRE(contains(state.b, v));
    if (!seeds.a.empty()) REQUIRE(is_connected(net, Side::A, state.a));
    if (!seeds.b.empty()) REQUIRE(is_connected(net, Side::B, state.b));

    double best_seen = density(net, state);
    std::size_t best_at = 0;
    for (std::size_t k = 0; k < r.additions.size(); ++k) {
        const NodeRef add = r.additions[k];
        auto& side_vec = add.side == Side::A ? state.a : state.b;
        REQUIRE_FALSE(contains(side_vec, add.index));
        side_vec.insert(std::lower_bound(side_vec.begin(), side_vec.end(), add.index),
                        add.index);
        // a seeded side must stay connected through every step
        if (!seeds.a.empty()) REQUIRE(is_connected(net, Side::A, state.a));
        if (!seeds.b.empty()) REQUIRE(is_connected(net, Side::B, state.b));
        const double d = density(net, state);
        if (d > best_seen) {
            best_seen = d;
            best_at = k + 1;
        }
    }
    REQUIRE(state == r.final_state.nodes);
    REQUIRE(r.best_step == best_at);
    REQUIRE(r.best_state.density == doctest::Approx(best_seen).epsilon(1e-12));
    REQUIRE(r.best_state.density >= r.final_state.density - 1e-12);
    REQUIRE(r.final_state.edges == bipartite_edge_count(net, r.final_state.nodes));
    REQUIRE(r.best_state.edges == bipartite_edge_count(net, r.best_state.nodes));
    const bool both = !seeds.a.empty() && !seeds.b.empty();
    REQUIRE(r.kind == (both ? PatternKind::CDC_Seeds : PatternKind::OCD_Seed));
}

}  // namespace

TEST_CASE("spanning tree joins seeds along shortest paths") {
    TripleNetwork path = parse("trinet 5 1\n#A\n0 1\n1 2\n2 3\n3 4\n");
    CHECK(seed_spanning_tree(path, Side::A, {0, 4}) ==
          std::vector<std::uint32_t>{0, 1, 2, 3, 4});
    CHECK(seed_spanning_tree(path, Side::A, {2}) == std::vector<std::uint32_t>{2});
    CHECK(seed_spanning_tree(path, Side::A, {3, 1}) == std::vector<std::uint32_t>{1, 2, 3});

    TripleNetwork shortcut = parse("trinet 3 1\n#A\n0 1\n1 2\n0 2\n");
    CHECK(seed_spanning_tree(shortcut, Side::A, {0, 2}) == std::vector<std::uint32_t>{0, 2});

    // two equal-length routes: predecessor choice prefers the smaller index
    TripleNetwork diamond = parse("trinet 4 1\n#A\n0 1\n0 2\n1 3\n2 3\n");
    CHECK(seed_spanning_tree(diamond, Side::A, {0, 3}) ==
          std::vector<std::uint32_t>{0, 1, 3});
}

TEST_CASE("unconnectable seeds are rejected") {
    TripleNetwork net = parse("trinet 4 2\n#A\n0 1\n2 3\n#C\n0 0\n");
    CHECK_THROWS_AS(seed_spanning_tree(net, Side::A, {0, 3}), NoCandidateError);
    CHECK_THROWS_AS(local_search(net, {{0, 3}, {}}), NoCandidateError);
    CHECK_THROWS_AS(seed_spanning_tree(net, Side::A, {9}), std::out_of_range);
    CHECK_THROWS_AS(local_search(net, {{}, {}}), std::invalid_argument);
}

TEST_CASE("seeding the hub grows the whole star") {
    TripleNetwork net = parse("trinet 1 5\n#C\n0 0\n0 1\n0 2\n0 3\n0 4\n");
    auto r = local_search(net, {{0}, {}});
    CHECK(r.kind == PatternKind::OCD_Seed);
    CHECK(r.best_state.density == doctest::Approx(std::sqrt(5.0)).epsilon(1e-12));
    CHECK(r.best_state.nodes.b.size() == 5);
    CHECK(r.final_state.nodes == r.best_state.nodes);
    check_search_invariants(net, {{0}, {}}, r);
}

TEST_CASE("the final state can overshoot the best state") {
    // complete 3x3 core plus a3, which brings a single cross edge and stays
    // the lowest-gain candidate until everything else is absorbed
    TripleNetwork net = parse(
        "trinet 4 3\n#A\n0 1\n1 2\n2 3\n#B\n0 1\n1 2\n#C\n"
        "0 0\n0 1\n0 2\n1 0\n1 1\n1 2\n2 0\n2 1\n2 2\n3 0\n");
    auto r = local_search(net, {{0}, {0}});
    CHECK(r.best_state.density == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(r.best_state.nodes.a == std::vector<std::uint32_t>{0, 1, 2});
    CHECK(r.final_state.nodes.a == std::vector<std::uint32_t>{0, 1, 2, 3});
    CHECK(r.final_state.density == doctest::Approx(10.0 / std::sqrt(12.0)).epsilon(1e-12));
    CHECK(r.final_state.density < r.best_state.density);
    CHECK(r.additions.back() == NodeRef{Side::A, 3});
    check_search_invariants(net, {{0}, {0}}, r);
}

TEST_CASE("two-sided seeds keep both sides connected throughout") {
    TripleNetwork net = parse(
        "trinet 3 3\n#A\n0 1\n1 2\n#B\n0 1\n1 2\n#C\n"
        "0 0\n0 1\n1 1\n1 2\n2 0\n2 2\n");
    auto r = local_search(net, {{0}, {2}});
    CHECK(r.kind == PatternKind::CDC_Seeds);
    check_search_invariants(net, {{0}, {2}}, r);
    CHECK(r.best_state.edges >= 1);
}

TEST_CASE("random seeded runs obey every invariant") {
    std::mt19937_64 rng(12345);
    int two_sided = 0, one_sided = 0;
    for (int trial = 0; trial < 100; ++trial) {
        TripleNetwork net = testutil::random_triple_network(8000 + trial, 4 + trial % 9,
                                                            4 + (trial / 2) % 9, 0.35, 0.35, 0.3);
        NodeSetPair seeds;
        const int mode = trial % 3;
        if (mode != 1) seeds.a.push_back(rng() % net.n_a());
        if (mode != 0) seeds.b.push_back(rng() % net.n_b());
        if (mode == 2 && net.n_a() > 1) seeds.a.push_back(rng() % net.n_a());
        seeds.normalize();
        try {
            auto r = local_search(net, seeds);
            check_search_invariants(net, seeds, r);
            (seeds.a.empty() || seeds.b.empty() ? one_sided : two_sided)++;
        } catch (const NoCandidateError&) {
            // seeds in different side components; nothing to check
        }
    }
    CHECK(two_sided > 10);
    CHECK(one_sided > 10);
}

TEST_CASE("seeded search result never beats the seeded exhaustive optimum") {
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        TripleNetwork net = testutil::random_triple_network(seed * 13, 4 + seed % 4,
                                                            4 + seed % 3, 0.4, 0.4, 0.35);
        std::mt19937_64 rng(seed);
        NodeSetPair seeds;
        seeds.a.push_back(rng() % net.n_a());
        seeds.b.push_back(rng() % net.n_b());
        auto reference = brute_force_seeded(net, seeds.a, seeds.b);
        LocalSearchResult r;
        try {
            r = local_search(net, seeds);
        } catch (const NoCandidateError&) {
            continue;
        }
        if (reference && r.best_state.edges >= 1 && r.best_state.connected_a &&
            r.best_state.connected_b) {
            REQUIRE(compare_density(r.best_state, *reference) <= 0);
        }
    }
}

TEST_CASE("search is deterministic") {
    TripleNetwork net = testutil::random_triple_network(4242, 10, 10, 0.3, 0.3, 0.3);
    auto a = local_search(net, {{3}, {5}});
    auto b = local_search(net, {{3}, {5}});
    CHECK(a.additions.size() == b.additions.size());
    for (std::size_t k = 0; k < a.additions.size(); ++k) CHECK(a.additions[k] == b.additions[k]);
    CHECK(a.best_state.nodes == b.best_state.nodes);
}
