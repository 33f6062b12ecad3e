#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cdc/triple_network.hpp"

namespace cdc {

// Exhaustive searches over all subset pairs. Exponential; guarded by max_nodes
// on n_a + n_b (std::invalid_argument beyond it). Ties break toward the
// lexicographically smallest pair, so results are deterministic.
inline constexpr std::uint32_t kOracleDefaultMaxNodes = 16;

// Densest pair with no connectivity requirement. Empty network gives an empty
// result; otherwise both sets are nonempty.
ScoredSubgraph brute_force_densest_bipartite(const TripleNetwork& net,
                                             std::uint32_t max_nodes = kOracleDefaultMaxNodes);

// Densest pair with both sides connected and at least one cross edge.
std::optional<ScoredSubgraph> brute_force_cdc(const TripleNetwork& net,
                                              std::uint32_t max_nodes = kOracleDefaultMaxNodes);

// Densest pair with exactly one side connected and at least one cross edge.
std::optional<ScoredSubgraph> brute_force_ocd(const TripleNetwork& net,
                                              std::uint32_t max_nodes = kOracleDefaultMaxNodes);

// Densest pair containing the given seeds. A side with seeds must be
// connected; a side without seeds is unconstrained. At least one seed
// required overall, and at least one cross edge in the result.
std::optional<ScoredSubgraph> brute_force_seeded(const TripleNetwork& net,
                                                 const std::vector<std::uint32_t>& seeds_a,
                                                 const std::vector<std::uint32_t>& seeds_b,
                                                 std::uint32_t max_nodes = kOracleDefaultMaxNodes);

}  // namespace cdc
