#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "cdc/triple_network.hpp"

namespace cdc::testutil {

// Bernoulli-edge triple network, deterministic per seed
inline TripleNetwork random_triple_network(std::uint64_t seed, std::uint32_t n_a,
                                           std::uint32_t n_b, double p_a = 0.4, double p_b = 0.4,
                                           double p_c = 0.3) {
    std::mt19937_64 rng(seed);
    auto coin = [&](double p) { return double((rng() >> 11) * 0x1.0p-53) < p; };
    EdgeList ea, eb, ec;
    for (std::uint32_t u = 0; u < n_a; ++u)
        for (std::uint32_t v = u + 1; v < n_a; ++v)
            if (coin(p_a)) ea.emplace_back(u, v);
    for (std::uint32_t u = 0; u < n_b; ++u)
        for (std::uint32_t v = u + 1; v < n_b; ++v)
            if (coin(p_b)) eb.emplace_back(u, v);
    for (std::uint32_t u = 0; u < n_a; ++u)
        for (std::uint32_t v = 0; v < n_b; ++v)
            if (coin(p_c)) ec.emplace_back(u, v);
    return TripleNetwork::from_edges(n_a, n_b, ea, eb, ec);
}

inline std::vector<std::uint32_t> random_subset(std::mt19937_64& rng, std::uint32_t n,
                                                double keep = 0.5) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t v = 0; v < n; ++v)
        if (double((rng() >> 11) * 0x1.0p-53) < keep) out.push_back(v);
    return out;
}

}  // namespace cdc::testutil
