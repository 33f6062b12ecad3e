#include "cdc/oracle.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace cdc {

namespace {

void check_limit(const TripleNetwork& net, std::uint32_t max_nodes) {
    const std::uint64_t total = std::uint64_t(net.n_a()) + net.n_b();
    if (total > max_nodes) {
        throw std::invalid_argument("brute force limited to " + std::to_string(max_nodes) +
                                    " nodes, got " + std::to_string(total));
    }
}

std::vector<std::uint32_t> mask_to_nodes(std::uint32_t mask) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t m = mask; m; m &= m - 1) out.push_back(std::countr_zero(m));
    return out;
}

// conn[mask] = 1 iff mask induces a connected subgraph of the side graph
std::vector<std::uint8_t> connectivity_table(const TripleNetwork& net, Side side) {
    const std::uint32_t n = net.side_count(side);
    std::vector<std::uint32_t> nb_mask(n, 0);
    for (std::uint32_t u = 0; u < n; ++u)
        for (std::uint32_t v : net.neighbors(side, u)) nb_mask[u] |= 1u << v;
    std::vector<std::uint8_t> conn(std::size_t(1) << n, 0);
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::uint32_t frontier = mask & (~mask + 1);  // lowest bit
        std::uint32_t reached = frontier;
        while (frontier) {
            std::uint32_t next = 0;
            for (std::uint32_t m = frontier; m; m &= m - 1)
                next |= nb_mask[std::countr_zero(m)];
            frontier = next & mask & ~reached;
            reached |= frontier;
        }
        conn[mask] = reached == mask;
    }
    return conn;
}

struct Best {
    bool found = false;
    std::uint64_t edges = 0;
    std::uint32_t mask_a = 0, mask_b = 0;

    void offer(std::uint64_t e, std::uint32_t ma, std::uint32_t mb) {
        if (!found) {
            found = true;
            edges = e;
            mask_a = ma;
            mask_b = mb;
            return;
        }
        const int c = compare_density(e, std::popcount(ma), std::popcount(mb), edges,
                                      std::popcount(mask_a), std::popcount(mask_b));
        if (c > 0) {
            edges = e;
            mask_a = ma;
            mask_b = mb;
        } else if (c == 0) {
            NodeSetPair mine{mask_to_nodes(ma), mask_to_nodes(mb)};
            NodeSetPair held{mask_to_nodes(mask_a), mask_to_nodes(mask_b)};
            if (pair_lex_less(mine, held)) {
                edges = e;
                mask_a = ma;
                mask_b = mb;
            }
        }
    }
};

enum class SideRule { Any, Connected, Disconnected };

bool side_ok(SideRule rule, bool connected) {
    switch (rule) {
    case SideRule::Any: return true;
    case SideRule::Connected: return connected;
    case SideRule::Disconnected: return !connected;
    }
    return false;
}

// shared enumeration core; xor_rule demands exactly one connected side
std::optional<ScoredSubgraph> search(const TripleNetwork& net, SideRule rule_a, SideRule rule_b,
                                     bool xor_rule, std::uint32_t require_a,
                                     std::uint32_t require_b, std::uint64_t min_edges) {
    if (net.n_a() == 0 || net.n_b() == 0) return std::nullopt;
    std::vector<std::uint32_t> cnb(net.n_a(), 0);
    for (std::uint32_t u = 0; u < net.n_a(); ++u)
        for (std::uint32_t v : net.c_neighbors_of_a(u)) cnb[u] |= 1u << v;
    const auto conn_a = connectivity_table(net, Side::A);
    const auto conn_b = connectivity_table(net, Side::B);

    Best best;
    for (std::uint32_t ma = 1; ma < (1u << net.n_a()); ++ma) {
        if ((ma & require_a) != require_a) continue;
        if (!xor_rule && !side_ok(rule_a, conn_a[ma])) continue;
        for (std::uint32_t mb = 1; mb < (1u << net.n_b()); ++mb) {
            if ((mb & require_b) != require_b) continue;
            if (xor_rule) {
                if (conn_a[ma] == conn_b[mb]) continue;
            } else if (!side_ok(rule_b, conn_b[mb])) {
                continue;
            }
            std::uint64_t e = 0;
            for (std::uint32_t m = ma; m; m &= m - 1)
                e += std::popcount(cnb[std::countr_zero(m)] & mb);
            if (e < min_edges) continue;
            best.offer(e, ma, mb);
        }
    }
    if (!best.found) return std::nullopt;
    return score_subgraph(net, {mask_to_nodes(best.mask_a), mask_to_nodes(best.mask_b)});
}

}  // namespace

ScoredSubgraph brute_force_densest_bipartite(const TripleNetwork& net, std::uint32_t max_nodes) {
    check_limit(net, max_nodes);
    auto found = search(net, SideRule::Any, SideRule::Any, false, 0, 0, 0);
    return found ? *found : ScoredSubgraph{};
}

std::optional<ScoredSubgraph> brute_force_cdc(const TripleNetwork& net, std::uint32_t max_nodes) {
    check_limit(net, max_nodes);
    return search(net, SideRule::Connected, SideRule::Connected, false, 0, 0, 1);
}

std::optional<ScoredSubgraph> brute_force_ocd(const TripleNetwork& net, std::uint32_t max_nodes) {
    check_limit(net, max_nodes);
    return search(net, SideRule::Any, SideRule::Any, true, 0, 0, 1);
}

std::optional<ScoredSubgraph> brute_force_seeded(const TripleNetwork& net,
                                                 const std::vector<std::uint32_t>& seeds_a,
                                                 const std::vector<std::uint32_t>& seeds_b,
                                                 std::uint32_t max_nodes) {
    check_limit(net, max_nodes);
    if (seeds_a.empty() && seeds_b.empty()) {
        throw std::invalid_argument("seeded brute force needs at least one seed");
    }
    std::uint32_t ra = 0, rb = 0;
    for (std::uint32_t v : seeds_a) {
        if (v >= net.n_a()) throw std::out_of_range("A seed out of range");
        ra |= 1u << v;
    }
    for (std::uint32_t v : seeds_b) {
        if (v >= net.n_b()) throw std::out_of_range("B seed out of range");
        rb |= 1u << v;
    }
    const SideRule rule_a = seeds_a.empty() ? SideRule::Any : SideRule::Connected;
    const SideRule rule_b = seeds_b.empty() ? SideRule::Any : SideRule::Connected;
    return search(net, rule_a, rule_b, false, ra, rb, 1);
}

}  // namespace cdc
