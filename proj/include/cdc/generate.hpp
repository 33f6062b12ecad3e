#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "cdc/triple_network.hpp"

namespace cdc {

// Synthetic triple networks with exact edge counts. Identical specs always
// produce byte-identical networks, independent of platform.

enum class GenKind : std::uint8_t {
    Random,  // side edges uniform over distinct pairs
    RMat,    // side edges by recursive quadrant descent (power-law degrees)
};

struct GenSpec {
    std::uint32_t n_a = 0;
    std::uint32_t n_b = 0;
    std::uint64_t m_a = 0;
    std::uint64_t m_b = 0;
    std::uint64_t m_c = 0;
    GenKind kind = GenKind::Random;
    // quadrant probabilities for RMat, top-left to bottom-right
    std::array<double, 4> rmat_probs{0.57, 0.19, 0.19, 0.05};
    std::uint64_t seed = 1;
};

// Cross edges are always uniform, whatever the side-edge kind. Throws
// std::invalid_argument for impossible counts, non-power-of-two RMat sides,
// or malformed probabilities.
TripleNetwork generate(const GenSpec& spec);

// hist[d] = number of nodes on `side` with side-graph degree d.
std::vector<std::uint64_t> side_degree_histogram(const TripleNetwork& net, Side side);

// hist[d] = number of nodes on `side` with cross-edge degree d.
std::vector<std::uint64_t> cross_degree_histogram(const TripleNetwork& net, Side side);

}  // namespace cdc
