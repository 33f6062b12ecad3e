#include "cdc/local_search.hpp"

#include <algorithm>
#include <cassert>
#include <queue>
#include <stdexcept>

namespace cdc {

std::vector<std::uint32_t> seed_spanning_tree(const TripleNetwork& net, Side side,
                                              const std::vector<std::uint32_t>& seeds) {
    const std::uint32_t n = net.side_count(side);
    std::vector<std::uint32_t> sorted = seeds;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (std::uint32_t v : sorted)
        if (v >= n) throw std::out_of_range("seed node out of range");
    if (sorted.empty()) return {};

    std::vector<std::uint8_t> in_tree(n, 0), is_seed(n, 0);
    for (std::uint32_t v : sorted) is_seed[v] = 1;
    in_tree[sorted.front()] = 1;
    std::uint32_t pending = static_cast<std::uint32_t>(sorted.size()) - 1;

    std::vector<std::uint32_t> dist(n);
    std::vector<std::uint32_t> frontier, next;
    while (pending > 0) {
        // multi-source BFS from the current tree to the nearest loose seed
        std::fill(dist.begin(), dist.end(), UINT32_MAX);
        frontier.clear();
        for (std::uint32_t v = 0; v < n; ++v)
            if (in_tree[v]) {
                dist[v] = 0;
                frontier.push_back(v);
            }
        std::uint32_t target = UINT32_MAX, depth = 0;
        while (target == UINT32_MAX && !frontier.empty()) {
            ++depth;
            next.clear();
            for (std::uint32_t u : frontier)
                for (std::uint32_t w : net.neighbors(side, u))
                    if (dist[w] == UINT32_MAX) {
                        dist[w] = depth;
                        next.push_back(w);
                        if (is_seed[w] && !in_tree[w]) target = std::min(target, w);
                    }
            frontier.swap(next);
        }
        if (target == UINT32_MAX)
            throw NoCandidateError("seeds are not connectable within one side component");
        // walk back along smallest-index predecessors
        std::uint32_t cur = target;
        while (dist[cur] != 0) {
            in_tree[cur] = 1;
            std::uint32_t parent = UINT32_MAX;
            for (std::uint32_t w : net.neighbors(side, cur))
                if (dist[w] == dist[cur] - 1) {
                    parent = std::min(parent, w);
                }
            assert(parent != UINT32_MAX);
            cur = parent;
        }
        pending = 0;
        for (std::uint32_t v : sorted)
            if (!in_tree[v]) ++pending;
    }

    std::vector<std::uint32_t> out;
    for (std::uint32_t v = 0; v < n; ++v)
        if (in_tree[v]) out.push_back(v);
    return out;
}

namespace {

struct Candidate {
    std::uint64_t gain;
    Side side;
    std::uint32_t index;
};

// max gain first, then side A, then the smaller index
struct CandidateLess {
    bool operator()(const Candidate& x, const Candidate& y) const {
        if (x.gain != y.gain) return x.gain < y.gain;
        if (x.side != y.side) return x.side == Side::B;
        return x.index > y.index;
    }
};

}  // namespace

LocalSearchResult local_search(const TripleNetwork& net, const NodeSetPair& seeds) {
    NodeSetPair norm = seeds;
    norm.normalize();
    if (norm.a.empty() && norm.b.empty())
        throw std::invalid_argument("at least one seed required");
    for (std::uint32_t v : norm.a)
        if (v >= net.n_a()) throw std::out_of_range("A seed out of range");
    for (std::uint32_t v : norm.b)
        if (v >= net.n_b()) throw std::out_of_range("B seed out of range");

    LocalSearchResult out;
    out.kind = !norm.a.empty() && !norm.b.empty() ? PatternKind::CDC_Seeds
                                                  : PatternKind::OCD_Seed;
    const bool seeded[2] = {!norm.a.empty(), !norm.b.empty()};

    out.initial.a = seeded[0] ? seed_spanning_tree(net, Side::A, norm.a) : std::vector<std::uint32_t>{};
    out.initial.b = seeded[1] ? seed_spanning_tree(net, Side::B, norm.b) : std::vector<std::uint32_t>{};

    std::vector<std::uint8_t> included[2] = {std::vector<std::uint8_t>(net.n_a(), 0),
                                             std::vector<std::uint8_t>(net.n_b(), 0)};
    std::vector<std::uint64_t> gain[2] = {std::vector<std::uint64_t>(net.n_a(), 0),
                                          std::vector<std::uint64_t>(net.n_b(), 0)};
    std::vector<std::uint8_t> on_rim[2] = {std::vector<std::uint8_t>(net.n_a(), 0),
                                           std::vector<std::uint8_t>(net.n_b(), 0)};
    std::priority_queue<Candidate, std::vector<Candidate>, CandidateLess> heap;
    std::uint64_t edges = 0;
    std::uint32_t live[2] = {0, 0};

    auto side_of = [](int si) { return si == 0 ? Side::A : Side::B; };

    // eligible to join: seeded sides need side-graph contact, unseeded sides
    // need at least one cross edge into the current selection
    auto eligible = [&](int si, std::uint32_t v) {
        if (included[si][v]) return false;
        return seeded[si] ? on_rim[si][v] != 0 : gain[si][v] > 0;
    };

    auto add_node = [&](int si, std::uint32_t v) {
        assert(!included[si][v]);
        const Side s = side_of(si);
        const int oi = 1 - si;
        included[si][v] = 1;
        ++live[si];
        edges += gain[si][v];
        for (std::uint32_t w : net.c_neighbors(s, v)) {
            if (included[oi][w]) continue;
            ++gain[oi][w];
            if (eligible(oi, w)) heap.push({gain[oi][w], side_of(oi), w});
        }
        if (seeded[si]) {
            for (std::uint32_t w : net.neighbors(s, v)) {
                if (included[si][w] || on_rim[si][w]) continue;
                on_rim[si][w] = 1;
                heap.push({gain[si][w], s, w});
            }
        }
    };

    for (std::uint32_t v : out.initial.a) add_node(0, v);
    for (std::uint32_t v : out.initial.b) add_node(1, v);

    // exact densities as (edges, |A|, |B|) triples
    std::uint64_t best_e = edges;
    std::uint32_t best_a = live[0], best_b = live[1];
    out.best_step = 0;

    for (;;) {
        Candidate top{};
        bool found = false;
        while (!heap.empty()) {
            const Candidate c = heap.top();
            const int si = c.side == Side::A ? 0 : 1;
            if (!eligible(si, c.index) || gain[si][c.index] != c.gain) {
                heap.pop();
                continue;
            }
            top = c;
            found = true;
            break;
        }
        if (!found) break;
        heap.pop();
        const int si = top.side == Side::A ? 0 : 1;
        add_node(si, top.index);
        out.additions.push_back({top.side, top.index});

        const int cmp = compare_density(edges, live[0], live[1], best_e, best_a, best_b);
        if (cmp > 0) {
            best_e = edges;
            best_a = live[0];
            best_b = live[1];
            out.best_step = out.additions.size();
        } else if (cmp < 0) {
            break;
        }
    }

    NodeSetPair final_nodes;
    for (std::uint32_t v = 0; v < net.n_a(); ++v)
        if (included[0][v]) final_nodes.a.push_back(v);
    for (std::uint32_t v = 0; v < net.n_b(); ++v)
        if (included[1][v]) final_nodes.b.push_back(v);
    out.final_state = score_subgraph(net, final_nodes);
    assert(out.final_state.edges == edges);

    // rebuild the best state from the replay log
    NodeSetPair best_nodes = out.initial;
    for (std::size_t k = 0; k < out.best_step; ++k) {
        const NodeRef r = out.additions[k];
        (r.side == Side::A ? best_nodes.a : best_nodes.b).push_back(r.index);
    }
    best_nodes.normalize();
    out.best_state = score_subgraph(net, best_nodes);
    assert(out.best_state.edges == best_e);
    assert(out.best_state.nodes.a.size() == best_a);
    assert(out.best_state.nodes.b.size() == best_b);
    return out;
}

}  // namespace cdc
