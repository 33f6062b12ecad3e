#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cdc/peel.hpp"
#include "cdc/triple_network.hpp"

namespace cdc {

enum class PatternKind : std::uint8_t { CDC, OCD, CDC_Seeds, OCD_Seed };

const char* pattern_name(PatternKind kind);

enum class MineAlgo : std::uint8_t { Mds, Gnd, Grd, Frd };

const char* algo_name(MineAlgo algo);

struct MineOptions {
    MineAlgo algo = MineAlgo::Grd;
    // rank-threshold slack, only read when algo == Frd
    double epsilon = 0.0;
    RankDenominator denominator = RankDenominator::Live;
    // trajectory states examined per candidate: the initial state plus the
    // latest strict improvements
    std::uint32_t snapshots = 8;
    std::uint32_t workers = 1;
    // number of distinct results to keep, best first
    std::uint32_t top_k = 1;
};

struct PatternResult {
    ScoredSubgraph subgraph;
    PatternKind kind = PatternKind::CDC;
    // index into the candidate list that produced the result
    std::uint32_t candidate = 0;
    // threshold passes of the producing run, when the algorithm has them
    std::uint64_t passes = 0;
};

// One candidate search space: a connected piece of each side graph joined by
// at least one cross edge. Any pair with both sides connected lives inside
// exactly one of these.
struct CandidatePair {
    std::uint32_t comp_a = 0;
    std::uint32_t comp_b = 0;
    std::uint64_t cross_edges = 0;
    std::uint32_t size_a = 0;
    std::uint32_t size_b = 0;
    double density() const;
};

struct CandidateAnalysis {
    // connected components of each side graph, ordered by smallest member
    std::vector<std::vector<std::uint32_t>> comps_a;
    std::vector<std::vector<std::uint32_t>> comps_b;
    // component pairs sharing cross edges, densest first
    std::vector<CandidatePair> pairs;
};

CandidateAnalysis cdc_candidates(const TripleNetwork& net);

// Mines pairs with both sides connected. Runs the configured dense-subgraph
// algorithm inside each candidate pair, splits the surviving states into
// connected pieces, and keeps the densest combinations. Throws
// NoCandidateError when the network has no candidate pairs.
std::vector<PatternResult> mine_cdc(const TripleNetwork& net, const MineOptions& options = {});

// Mines pairs with exactly one side connected: dense states are computed on
// the whole network, then each connected piece of one side is paired with the
// full opposite selection when that selection is disconnected. Throws
// NoCandidateError when nothing qualifies.
std::vector<PatternResult> mine_ocd(const TripleNetwork& net, const MineOptions& options = {});

}  // namespace cdc
