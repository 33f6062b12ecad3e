#include "cdc/generate.hpp"

#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

#include "doctest.h"

using namespace cdc;

namespace {

std::string serialize(const TripleNetwork& net) {
    std::ostringstream out;
    write_trinet(net, out);
    return out.str();
}

/// Verifies exact edge counts, no self loops, no duplicates.
void check_counts(const GenSpec& spec, const TripleNetwork& net) {
    CHECK(net.n_a() == spec.n_a);
    CHECK(net.n_b() == spec.n_b);
    CHECK(net.m_a() == spec.m_a);
    CHECK(net.m_b() == spec.m_b);
    CHECK(net.m_c() == spec.m_c);
    for (Side s : {Side::A, Side::B}) {
        for (std::uint32_t u = 0; u < net.side_count(s); ++u) {
            const auto& nb = net.neighbors(s, u);
            std::set<std::uint32_t> uniq(nb.begin(), nb.end());
            CHECK(uniq.size() == nb.size());
            CHECK(uniq.count(u) == 0);
            const auto& cnb = net.c_neighbors(s, u);
            std::set<std::uint32_t> cuniq(cnb.begin(), cnb.end());
            CHECK(cuniq.size() == cnb.size());
        }
    }
}

double degree_cv(const TripleNetwork& net, Side side) {
    const std::uint32_t n = net.side_count(side);
    double mean = 0.0;
    for (std::uint32_t u = 0; u < n; ++u) mean += double(net.neighbors(side, u).size());
    mean /= n;
    double var = 0.0;
    for (std::uint32_t u = 0; u < n; ++u) {
        const double d = double(net.neighbors(side, u).size()) - mean;
        var += d * d;
    }
    return std::sqrt(var / n) / mean;
}

}  // namespace

TEST_CASE("same spec reproduces bytes, different seed does not") {
    GenSpec spec;
    spec.n_a = 40;
    spec.n_b = 30;
    spec.m_a = 90;
    spec.m_b = 70;
    spec.m_c = 120;
    spec.seed = 7;
    const std::string first = serialize(generate(spec));
    const std::string second = serialize(generate(spec));
    CHECK(first == second);
    spec.seed = 8;
    CHECK(serialize(generate(spec)) != first);

    GenSpec rmat = spec;
    rmat.kind = GenKind::RMat;
    rmat.n_a = 32;
    rmat.n_b = 64;
    const std::string r1 = serialize(generate(rmat));
    const std::string r2 = serialize(generate(rmat));
    CHECK(r1 == r2);
}

TEST_CASE("requested edge counts are exact") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        GenSpec spec;
        spec.n_a = 10 + std::uint32_t(seed);
        spec.n_b = 5 + std::uint32_t(seed % 7);
        spec.m_a = (seed * 3) % 20;
        spec.m_b = (seed * 5) % 9;
        spec.m_c = (seed * 11) % 30;
        spec.seed = seed;
        check_counts(spec, generate(spec));
    }
}

TEST_CASE("saturated and near-saturated requests") {
    SUBCASE("two nodes, one edge") {
        GenSpec spec;
        spec.n_a = 2;
        spec.n_b = 2;
        spec.m_a = 1;
        spec.m_b = 1;
        spec.m_c = 4;
        check_counts(spec, generate(spec));
    }
    SUBCASE("complete sides and complete cross") {
        GenSpec spec;
        spec.n_a = 7;
        spec.n_b = 5;
        spec.m_a = 21;
        spec.m_b = 10;
        spec.m_c = 35;
        spec.seed = 3;
        const TripleNetwork net = generate(spec);
        check_counts(spec, net);
        // complete means every pair is present
        for (std::uint32_t u = 0; u < 7; ++u) CHECK(net.neighbors_a(u).size() == 6);
        for (std::uint32_t u = 0; u < 7; ++u) CHECK(net.c_neighbors_of_a(u).size() == 5);
    }
    SUBCASE("dense branch still uniform-ish and exact") {
        // 14 of 15 possible edges forces the enumerate-and-shuffle path
        GenSpec spec;
        spec.n_a = 6;
        spec.n_b = 6;
        spec.m_a = 14;
        spec.m_b = 14;
        spec.m_c = 30;
        for (std::uint64_t seed = 1; seed <= 10; ++seed) {
            spec.seed = seed;
            check_counts(spec, generate(spec));
        }
    }
    SUBCASE("empty graphs") {
        GenSpec spec;
        spec.n_a = 4;
        spec.n_b = 3;
        check_counts(spec, generate(spec));
        CHECK(generate(spec).m_c() == 0);
    }
}

TEST_CASE("impossible specs are rejected") {
    GenSpec spec;
    spec.n_a = 4;
    spec.n_b = 4;
    SUBCASE("too many side edges") {
        spec.m_a = 7;
        CHECK_THROWS_AS(generate(spec), std::invalid_argument);
    }
    SUBCASE("too many cross edges") {
        spec.m_c = 17;
        CHECK_THROWS_AS(generate(spec), std::invalid_argument);
    }
    SUBCASE("rmat side not a power of two") {
        spec.kind = GenKind::RMat;
        spec.n_a = 12;
        CHECK_THROWS_AS(generate(spec), std::invalid_argument);
    }
    SUBCASE("rmat probabilities must sum to one") {
        spec.kind = GenKind::RMat;
        spec.rmat_probs = {0.5, 0.5, 0.5, 0.5};
        CHECK_THROWS_AS(generate(spec), std::invalid_argument);
    }
    SUBCASE("rmat probabilities must be non-negative") {
        spec.kind = GenKind::RMat;
        spec.rmat_probs = {1.2, -0.2, 0.0, 0.0};
        CHECK_THROWS_AS(generate(spec), std::invalid_argument);
    }
}

TEST_CASE("benchmark-shaped network round-trips with exact counts") {
    GenSpec spec;
    spec.n_a = spec.n_b = 1u << 13;
    spec.m_a = spec.m_b = 78125;
    spec.m_c = 156250;
    spec.seed = 64;
    const TripleNetwork net = generate(spec);
    CHECK(net.m_a() == spec.m_a);
    CHECK(net.m_c() == spec.m_c);
    std::stringstream buffer;
    write_trinet(net, buffer);
    const TripleNetwork back = load_triple_network(buffer, "<roundtrip>");
    CHECK(back.n_a() == spec.n_a);
    CHECK(back.n_b() == spec.n_b);
    CHECK(back.m_a() == spec.m_a);
    CHECK(back.m_b() == spec.m_b);
    CHECK(back.m_c() == spec.m_c);
}

TEST_CASE("rmat degrees are more skewed than uniform") {
    double rmat_cv = 0.0;
    double uniform_cv = 0.0;
    const int kSeeds = 10;
    for (std::uint64_t seed = 1; seed <= kSeeds; ++seed) {
        GenSpec spec;
        spec.n_a = 256;
        spec.n_b = 256;
        spec.m_a = 1024;
        spec.m_b = 1024;
        spec.m_c = 512;
        spec.seed = seed;
        spec.kind = GenKind::RMat;
        const TripleNetwork skewed = generate(spec);
        check_counts(spec, skewed);
        rmat_cv += degree_cv(skewed, Side::A) + degree_cv(skewed, Side::B);
        spec.kind = GenKind::Random;
        uniform_cv += degree_cv(generate(spec), Side::A) + degree_cv(generate(spec), Side::B);
    }
    MESSAGE("mean degree cv: rmat ", rmat_cv / (2 * kSeeds), " uniform ",
            uniform_cv / (2 * kSeeds));
    CHECK(rmat_cv > uniform_cv * 1.3);
}

TEST_CASE("degree histograms recount nodes and edges") {
    GenSpec spec;
    spec.n_a = 60;
    spec.n_b = 45;
    spec.m_a = 140;
    spec.m_b = 80;
    spec.m_c = 200;
    spec.seed = 12;
    const TripleNetwork net = generate(spec);
    for (Side s : {Side::A, Side::B}) {
        const auto side_hist = side_degree_histogram(net, s);
        std::uint64_t nodes = 0, stubs = 0;
        for (std::size_t d = 0; d < side_hist.size(); ++d) {
            nodes += side_hist[d];
            stubs += d * side_hist[d];
        }
        CHECK(nodes == net.side_count(s));
        CHECK(stubs == 2 * (s == Side::A ? net.m_a() : net.m_b()));

        const auto cross_hist = cross_degree_histogram(net, s);
        std::uint64_t cnodes = 0, cstubs = 0;
        for (std::size_t d = 0; d < cross_hist.size(); ++d) {
            cnodes += cross_hist[d];
            cstubs += d * cross_hist[d];
        }
        CHECK(cnodes == net.side_count(s));
        CHECK(cstubs == net.m_c());
    }
}
