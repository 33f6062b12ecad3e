#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cdc {

enum class Side : std::uint8_t { A, B };

inline const char* side_name(Side s) { return s == Side::A ? "A" : "B"; }

struct NodeRef {
    Side side;
    std::uint32_t index;

    friend bool operator==(const NodeRef&, const NodeRef&) = default;
};

/// A pair (S_a, S_b) of node subsets, one per side. Both vectors are kept
/// sorted and duplicate-free; use normalize() after building one by hand.
struct NodeSetPair {
    std::vector<std::uint32_t> a;
    std::vector<std::uint32_t> b;

    void normalize();
    bool empty_either() const { return a.empty() || b.empty(); }

    friend bool operator==(const NodeSetPair&, const NodeSetPair&) = default;
};

// (s_a, s_b) lexicographic; the deterministic tie-break everywhere.
bool pair_lex_less(const NodeSetPair& x, const NodeSetPair& y);

/// A node-set pair with its bipartite edge count, density and per-side
/// connectivity. `density` is edges / sqrt(|a|*|b|), 0 when either side
/// is empty. An empty side counts as NOT connected; a singleton does.
struct ScoredSubgraph {
    NodeSetPair nodes;
    std::uint64_t edges = 0;
    double density = 0.0;
    bool connected_a = false;
    bool connected_b = false;
};

/// Three-way compare of e1/sqrt(a1*b1) vs e2/sqrt(a2*b2) without ever
/// leaving integer arithmetic: the sign of e1^2*a2*b2 - e2^2*a1*b1 decides.
/// Degenerate pairs (empty side or zero edges) compare as density 0. This
/// subsumes the floating comparison wherever the gap exceeds 1e-12 and
/// stays exact inside it, so every argmax in the library is deterministic.
int compare_density(std::uint64_t e1, std::uint64_t a1, std::uint64_t b1,
                    std::uint64_t e2, std::uint64_t a2, std::uint64_t b2);

int compare_density(const ScoredSubgraph& x, const ScoredSubgraph& y);

/// Strictly denser, with pair_lex_less breaking exact density ties.
bool denser_or_earlier(const ScoredSubgraph& x, const ScoredSubgraph& y);

class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& source, std::size_t line, const std::string& what)
        : std::runtime_error(source + ":" + std::to_string(line) + ": " + what),
          line_(line) {}
    std::size_t line() const { return line_; }

  private:
    std::size_t line_;
};

/// Raised when a miner has no candidate of the requested kind (CLI exit 2).
class NoCandidateError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace cdc
