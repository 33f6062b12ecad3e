#include <doctest.h>

#include <random>
#include <tuple>

#include "cdc/flow.hpp"

using namespace cdc;

TEST_CASE("series arcs bottleneck at the smallest capacity") {
    FlowNetwork net(3);
    net.add_edge(0, 1, 3.0);
    net.add_edge(1, 2, 2.0);
    auto cut = net.min_cut(0, 2);
    CHECK(cut.value == doctest::Approx(2.0));
    CHECK(cut.source_side == std::vector<std::uint32_t>{0, 1});
}

TEST_CASE("disconnected sink yields zero flow") {
    FlowNetwork net(4);
    net.add_edge(0, 1, 5.0);
    auto cut = net.min_cut(0, 3);
    CHECK(cut.value == doctest::Approx(0.0));
    CHECK(cut.source_side == std::vector<std::uint32_t>{0, 1});
}

TEST_CASE("diamond routes through both branches") {
    FlowNetwork net(4);
    net.add_edge(0, 1, 1.0);
    net.add_edge(0, 2, 1.0);
    net.add_edge(1, 3, 1.0);
    net.add_edge(2, 3, 1.0);
    net.add_edge(1, 2, 1.0);
    auto cut = net.min_cut(0, 3);
    CHECK(cut.value == doctest::Approx(2.0));
    CHECK(cut.source_side == std::vector<std::uint32_t>{0});
}

TEST_CASE("max flow equals the exhaustively smallest cut") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 150; ++trial) {
        const std::uint32_t n = 4 + rng() % 7;  // includes source 0 and sink n-1
        FlowNetwork net(n);
        std::vector<std::tuple<std::uint32_t, std::uint32_t, double>> arcs;
        const std::uint32_t arc_count = 4 + rng() % 14;
        for (std::uint32_t k = 0; k < arc_count; ++k) {
            std::uint32_t u = rng() % n, v = rng() % n;
            if (u == v || u == n - 1 || v == 0) continue;
            const double cap = 1.0 + double(rng() % 9);
            net.add_edge(u, v, cap);
            arcs.emplace_back(u, v, cap);
        }
        auto cut = net.min_cut(0, n - 1);

        double smallest = 1e300;
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            if (!(mask & 1u) || (mask >> (n - 1)) & 1u) continue;
            double value = 0.0;
            for (const auto& [u, v, cap] : arcs) {
                if (((mask >> u) & 1u) && !((mask >> v) & 1u)) value += cap;
            }
            smallest = std::min(smallest, value);
        }
        REQUIRE(cut.value == doctest::Approx(smallest).epsilon(1e-9));

        // the reported side must itself realize the minimum cut
        double witness_value = 0.0;
        std::vector<std::uint8_t> in_side(n, 0);
        for (std::uint32_t v : cut.source_side) in_side[v] = 1;
        REQUIRE(in_side[0]);
        REQUIRE_FALSE(in_side[n - 1]);
        for (const auto& [u, v, cap] : arcs) {
            if (in_side[u] && !in_side[v]) witness_value += cap;
        }
        REQUIRE(witness_value == doctest::Approx(smallest).epsilon(1e-9));
    }
}

TEST_CASE("identical construction gives identical cuts") {
    auto build = [] {
        FlowNetwork net(6);
        net.add_edge(0, 1, 2.5);
        net.add_edge(0, 2, 1.5);
        net.add_edge(1, 3, 1.0);
        net.add_edge(2, 3, 2.0);
        net.add_edge(1, 4, 0.75);
        net.add_edge(4, 5, 3.0);
        net.add_edge(3, 5, 1.25);
        return net;
    };
    auto first = build().min_cut(0, 5);
    auto second = build().min_cut(0, 5);
    CHECK(first.value == second.value);
    CHECK(first.source_side == second.source_side);
}
