#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "cdc/triple_network.hpp"

namespace cdc {

// Exact densest bipartite pair via parametric minimum cuts. Exponential in
// neither side but quadratic in the ratio grid, so it is meant for moderate
// networks; callers should gate size before invoking.

// All reduced fractions i/j with i <= max_a and j <= max_b, ascending by
// value. These are the candidate |S_a|/|S_b| shapes a densest pair can take.
std::vector<std::pair<std::uint32_t, std::uint32_t>> enumerate_ratios(std::uint32_t max_a,
                                                                      std::uint32_t max_b);

struct GuessOutcome {
    double cut_value = 0.0;
    // cut value of the trivial empty selection; a cheaper cut certifies that
    // some pair beats the guessed density
    double baseline = 0.0;
    // selected pair in global node ids, empty when the guess is infeasible
    NodeSetPair witness;
};

// Tests the density guess g against one cross-edge component, assuming the
// optimum has |S_a|/|S_b| near i/j. Sound for any ratio; exact when the ratio
// matches the optimum exactly.
GuessOutcome probe_density_guess(const TripleNetwork& net, const BipartiteComponent& component,
                                 std::uint32_t i, std::uint32_t j, double g);

struct MdsStats {
    std::uint64_t components_searched = 0;
    std::uint64_t ratios_tried = 0;
    std::uint64_t flow_calls = 0;
    // times a witness beat the current bracket top and the bracket was clamped
    std::uint64_t witness_clamps = 0;
};

struct MdsResult {
    // best pair over the whole network, no connectivity requirement; empty
    // when there are no cross edges
    std::optional<ScoredSubgraph> best;
    MdsStats stats;
};

MdsResult mds_densest_bipartite(const TripleNetwork& net);

}  // namespace cdc
