#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "cdc/types.hpp"

namespace cdc {

using EdgeList = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

struct LoadStats {
    std::uint64_t duplicate_edges_dropped = 0;
    std::uint64_t self_loops_dropped = 0;
};

/// A Triple Network: two undirected graphs G_a(V_a,E_a), G_b(V_b,E_b) and
/// the bipartite interaction graph G_c(V_a,V_b,E_c) between them. Immutable
/// after construction and safe to share across threads. Adjacency lists are
/// sorted; the bipartite graph is stored in both directions.
class TripleNetwork {
  public:
    /// Empty network with no nodes on either side.
    TripleNetwork() = default;

    /// Builds from raw edge lists. Self-loops and duplicates are dropped
    /// (counted in `stats` when given); out-of-range endpoints throw.
    static TripleNetwork from_edges(std::uint32_t n_a, std::uint32_t n_b,
                                    const EdgeList& edges_a, const EdgeList& edges_b,
                                    const EdgeList& edges_c, LoadStats* stats = nullptr);

    std::uint32_t n_a() const { return n_a_; }
    std::uint32_t n_b() const { return n_b_; }
    std::uint64_t m_a() const { return m_a_; }
    std::uint64_t m_b() const { return m_b_; }
    std::uint64_t m_c() const { return m_c_; }

    std::uint32_t side_count(Side s) const { return s == Side::A ? n_a_ : n_b_; }

    const std::vector<std::uint32_t>& neighbors_a(std::uint32_t u) const { return adj_a_[u]; }
    const std::vector<std::uint32_t>& neighbors_b(std::uint32_t v) const { return adj_b_[v]; }
    const std::vector<std::uint32_t>& neighbors(Side s, std::uint32_t u) const {
        return s == Side::A ? adj_a_[u] : adj_b_[u];
    }
    /// B-side bipartite neighbors of an A-node.
    const std::vector<std::uint32_t>& c_neighbors_of_a(std::uint32_t u) const { return adj_c_ab_[u]; }
    /// A-side bipartite neighbors of a B-node.
    const std::vector<std::uint32_t>& c_neighbors_of_b(std::uint32_t v) const { return adj_c_ba_[v]; }
    const std::vector<std::uint32_t>& c_neighbors(Side s, std::uint32_t u) const {
        return s == Side::A ? adj_c_ab_[u] : adj_c_ba_[u];
    }

    std::uint64_t c_degree(Side s, std::uint32_t u) const { return c_neighbors(s, u).size(); }

    /// Original labels, empty when the source carried none.
    const std::vector<std::string>& labels_a() const { return labels_a_; }
    const std::vector<std::string>& labels_b() const { return labels_b_; }
    void set_labels(std::vector<std::string> la, std::vector<std::string> lb);

  private:
    std::uint32_t n_a_ = 0, n_b_ = 0;
    std::uint64_t m_a_ = 0, m_b_ = 0, m_c_ = 0;
    std::vector<std::vector<std::uint32_t>> adj_a_, adj_b_, adj_c_ab_, adj_c_ba_;
    std::vector<std::string> labels_a_, labels_b_;
};

/// Parses the trinet text format:
///
///   trinet <n_a> <n_b>
///   #A
///   <u> <v>          (A-side edge, 0-based ids)
///   #B
///   <u> <v>
///   #C
///   <a> <b>          (A-id then B-id)
///   #LABELS-A
///   <id> <utf8 label>
///   #LABELS-B
///   <id> <utf8 label>
///
/// Blank lines and lines starting with '%' are ignored. Sections may appear
/// in any order but at most once each. Errors carry `source_name:line`.
TripleNetwork load_triple_network(std::istream& in,
                                  const std::string& source_name = "<stream>",
                                  LoadStats* stats = nullptr);

/// Canonical serialization: sections in #A/#B/#C order, edges sorted, so
/// load-then-write is byte-stable.
void write_trinet(const TripleNetwork& net, std::ostream& out);

std::uint64_t bipartite_edge_count(const TripleNetwork& net, const NodeSetPair& nodes);
double density(const TripleNetwork& net, const NodeSetPair& nodes);

/// BFS connectivity of the induced subgraph on `s` within one side's graph.
/// Singleton sets are connected, the empty set is not. `s` must be a set
/// (no duplicates) of in-range indices.
bool is_connected(const TripleNetwork& net, Side side, const std::vector<std::uint32_t>& s);

/// Partition of `s` into maximal connected induced subsets, each sorted,
/// ordered by smallest member.
std::vector<std::vector<std::uint32_t>> connected_components(const TripleNetwork& net, Side side,
                                                             const std::vector<std::uint32_t>& s);

/// Fills in edges/density/connectivity for a node-set pair.
ScoredSubgraph score_subgraph(const TripleNetwork& net, NodeSetPair nodes);

struct BipartiteComponent {
    NodeSetPair nodes;
    std::uint64_t edges = 0;
};

struct BipartiteDecomposition {
    /// Connected components of G_c alone, descending by edge count
    /// (ties by smallest A member). Nodes with zero bipartite degree are
    /// excluded and listed separately.
    std::vector<BipartiteComponent> components;
    std::vector<std::uint32_t> isolated_a;
    std::vector<std::uint32_t> isolated_b;
};

BipartiteDecomposition bipartite_components(const TripleNetwork& net);

struct InducedSubnetwork {
    TripleNetwork net;
    /// local id -> original id, ascending
    std::vector<std::uint32_t> to_global_a;
    std::vector<std::uint32_t> to_global_b;
};

/// Subnetwork induced by the pair: side edges within each set, cross edges
/// between them, nodes renumbered densely per side.
InducedSubnetwork induced_subnetwork(const TripleNetwork& net, const NodeSetPair& nodes);

}  // namespace cdc
