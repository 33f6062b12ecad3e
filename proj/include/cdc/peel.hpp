#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "cdc/triple_network.hpp"

namespace cdc {

// Peeling heuristics. All of them delete nodes one at a time, watch the
// cross-edge density of what remains, and report the best state seen.
// Only cross edges drive the deletion choices; side edges are ignored here.

enum class PeelCriterion : std::uint8_t {
    Degree,  // delete the globally smallest cross degree
    Rank,    // delete the globally smallest degree/opposite-side-size ratio
};

enum class RankDenominator : std::uint8_t {
    Original,  // ranks use the initial side sizes throughout
    Live,      // ranks follow the shrinking side sizes
};

struct PeelOptions {
    RankDenominator denominator = RankDenominator::Live;
};

struct PeelStep {
    NodeRef removed;
    // state after this removal
    std::uint64_t live_edges = 0;
    std::uint32_t live_a = 0;
    std::uint32_t live_b = 0;
};

struct PeelResult {
    // deletion order; state k means "after the first k removals", so state 0
    // is the untouched network and states run up to steps.size()
    std::vector<PeelStep> steps;
    // states that strictly improved on everything before them, ascending;
    // always starts with state 0, and densities increase along it
    std::vector<std::size_t> improvements;
    std::size_t best_step = 0;
    ScoredSubgraph best;
    // threshold passes executed (rank-threshold peeling only)
    std::uint64_t passes = 0;
};

// One node per iteration, smallest criterion first. Ties prefer side A, then
// the smaller index. Stops once either side is exhausted.
PeelResult greedy_peel(const TripleNetwork& net, PeelCriterion criterion,
                       const PeelOptions& options = {});

// Batch variant: each pass deletes every node whose rank falls below
// (1 + epsilon) times the mean rank. A pass that selects nobody falls back to
// deleting the single smallest-rank node so the loop always advances.
PeelResult rank_threshold_peel(const TripleNetwork& net, double epsilon,
                               const PeelOptions& options = {});

// Live node pair after the first `step` removals of a finished run.
NodeSetPair peel_state_at(const TripleNetwork& net, const PeelResult& run, std::size_t step);

}  // namespace cdc
