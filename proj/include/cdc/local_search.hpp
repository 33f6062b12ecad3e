#pragma once

#include <cstdint>
#include <vector>

#include "cdc/patterns.hpp"
#include "cdc/triple_network.hpp"

namespace cdc {

// Seed-driven growth. Starting from the seeds (joined into one connected set
// per seeded side), it greedily adds the boundary node bringing the most
// cross edges, and keeps going while the density stays at or above the best
// seen. A side with seeds only grows along side edges, so it stays connected;
// a side without seeds is unconstrained and grows by cross-edge contact.

// Connected superset of the seeds in the side graph: nearest unconnected
// seed first, linked by a shortest path (smallest-index tie breaks). Throws
// NoCandidateError when the seeds span several side components.
std::vector<std::uint32_t> seed_spanning_tree(const TripleNetwork& net, Side side,
                                              const std::vector<std::uint32_t>& seeds);

struct LocalSearchResult {
    // state when the loop stopped (last addition included even if it hurt)
    ScoredSubgraph final_state;
    // densest state visited
    ScoredSubgraph best_state;
    std::size_t best_step = 0;  // number of additions leading to best_state
    PatternKind kind = PatternKind::CDC_Seeds;
    // replay data: starting sets and the exact addition order
    NodeSetPair initial;
    std::vector<NodeRef> additions;
};

// seeds.a / seeds.b may each be empty, but not both. Node ids must be in
// range (std::out_of_range otherwise).
LocalSearchResult local_search(const TripleNetwork& net, const NodeSetPair& seeds);

}  // namespace cdc
