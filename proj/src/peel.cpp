#include "cdc/peel.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <queue>

namespace cdc {

namespace {

constexpr int side_index(Side s) { return s == Side::A ? 0 : 1; }
constexpr Side index_side(int i) { return i == 0 ? Side::A : Side::B; }

// live cross degrees, death flags, incremental density bookkeeping
struct PeelState {
    const TripleNetwork& net;
    std::vector<std::uint32_t> deg[2];
    std::vector<std::uint8_t> dead[2];
    std::uint32_t live[2];
    std::uint64_t live_edges;
    PeelResult res;
    std::uint64_t best_edges = 0;
    std::uint32_t best_live[2] = {0, 0};
    bool has_best = false;

    explicit PeelState(const TripleNetwork& n) : net(n) {
        for (int si = 0; si < 2; ++si) {
            const Side s = index_side(si);
            deg[si].resize(net.side_count(s));
            for (std::uint32_t v = 0; v < net.side_count(s); ++v)
                deg[si][v] = static_cast<std::uint32_t>(net.c_degree(s, v));
            dead[si].assign(net.side_count(s), 0);
            live[si] = net.side_count(s);
        }
        live_edges = net.m_c();
        consider(0);
    }

    void consider(std::size_t step) {
        if (!has_best || compare_density(live_edges, live[0], live[1], best_edges, best_live[0],
                                         best_live[1]) > 0) {
            has_best = true;
            best_edges = live_edges;
            best_live[0] = live[0];
            best_live[1] = live[1];
            res.best_step = step;
            res.improvements.push_back(step);
        }
    }

    bool exhausted() const { return live[0] == 0 || live[1] == 0; }

    template <class Touched>
    void remove(int si, std::uint32_t v, Touched&& touched) {
        assert(!dead[si][v]);
        dead[si][v] = 1;
        --live[si];
        const int oi = 1 - si;
        for (std::uint32_t w : net.c_neighbors(index_side(si), v)) {
            if (!dead[oi][w]) {
                --deg[oi][w];
                --live_edges;
                touched(w);
            }
        }
        res.steps.push_back({{index_side(si), v}, live_edges, live[0], live[1]});
        consider(res.steps.size());
    }

    void finalize() {
        res.best = score_subgraph(net, peel_state_at(net, res, res.best_step));
        assert(res.best.edges == best_edges);
        assert(res.best.nodes.a.size() == best_live[0]);
        assert(res.best.nodes.b.size() == best_live[1]);
        assert(exhausted() ? live_edges == 0 : true);
    }
};

}  // namespace

PeelResult greedy_peel(const TripleNetwork& net, PeelCriterion criterion,
                       const PeelOptions& options) {
    PeelState st(net);
    using Entry = std::pair<std::uint32_t, std::uint32_t>;  // (degree, index)
    using Heap = std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>>;
    // every decrement pushes a fresh entry, so the backing stores reach
    // side size + cross edges; reserving avoids repeated large reallocations
    Heap heap[2];
    for (int si = 0; si < 2; ++si) {
        std::vector<Entry> storage;
        storage.reserve(st.deg[si].size() + net.m_c());
        heap[si] = Heap(std::greater<Entry>(), std::move(storage));
        for (std::uint32_t v = 0; v < st.deg[si].size(); ++v) heap[si].push({st.deg[si][v], v});
    }

    // discard entries whose key went stale; every live node keeps a current
    // entry because each decrement pushes a fresh one
    auto fresh_top = [&](int si) -> Entry {
        for (;;) {
            const Entry e = heap[si].top();
            if (!st.dead[si][e.second] && st.deg[si][e.second] == e.first) return e;
            heap[si].pop();
        }
    };

    while (!st.exhausted()) {
        const Entry ta = fresh_top(0);
        const Entry tb = fresh_top(1);
        bool pick_a;
        if (criterion == PeelCriterion::Degree) {
            pick_a = ta.first <= tb.first;
        } else {
            std::uint64_t ra, rb;
            if (options.denominator == RankDenominator::Live) {
                ra = std::uint64_t(ta.first) * st.live[0];
                rb = std::uint64_t(tb.first) * st.live[1];
            } else {
                ra = std::uint64_t(ta.first) * net.n_a();
                rb = std::uint64_t(tb.first) * net.n_b();
            }
            pick_a = ra <= rb;
        }
        const int si = pick_a ? 0 : 1;
        heap[si].pop();
        st.remove(si, pick_a ? ta.second : tb.second,
                  [&](std::uint32_t w) { heap[1 - si].push({st.deg[1 - si][w], w}); });
    }
    st.finalize();
    return st.res;
}

PeelResult rank_threshold_peel(const TripleNetwork& net, double epsilon,
                               const PeelOptions& options) {
    PeelState st(net);
    std::vector<std::uint32_t> live_nodes[2];
    for (int si = 0; si < 2; ++si) {
        live_nodes[si].resize(st.deg[si].size());
        for (std::uint32_t v = 0; v < live_nodes[si].size(); ++v) live_nodes[si][v] = v;
    }
    const double na0 = net.n_a(), nb0 = net.n_b();
    std::vector<std::uint32_t> victims[2];
    auto noop = [](std::uint32_t) {};

    while (!st.exhausted()) {
        st.res.passes++;
        // per-side degree cutoffs equivalent to rank < (1+eps) * mean rank,
        // evaluated against the state at the start of the pass
        double cutoff[2];
        if (options.denominator == RankDenominator::Live) {
            const double thr = (1.0 + epsilon) * static_cast<double>(st.live_edges);
            cutoff[0] = thr / st.live[0];
            cutoff[1] = thr / st.live[1];
        } else {
            const double thr = (1.0 + epsilon) * static_cast<double>(st.live_edges) * (na0 + nb0) /
                               (st.live[0] + st.live[1]);
            cutoff[0] = thr / na0;
            cutoff[1] = thr / nb0;
        }
        victims[0].clear();
        victims[1].clear();
        for (int si = 0; si < 2; ++si)
            for (std::uint32_t v : live_nodes[si])
                if (static_cast<double>(st.deg[si][v]) < cutoff[si]) victims[si].push_back(v);

        if (victims[0].empty() && victims[1].empty()) {
            // nobody under the threshold; drop the single smallest rank so
            // the pass still makes progress
            std::uint32_t arg[2] = {0, 0};
            std::uint32_t degmin[2] = {0, 0};
            bool have[2] = {false, false};
            for (int si = 0; si < 2; ++si)
                for (std::uint32_t v : live_nodes[si])
                    if (!have[si] || st.deg[si][v] < degmin[si]) {
                        have[si] = true;
                        degmin[si] = st.deg[si][v];
                        arg[si] = v;
                    }
            std::uint64_t ra, rb;
            if (options.denominator == RankDenominator::Live) {
                ra = std::uint64_t(degmin[0]) * st.live[0];
                rb = std::uint64_t(degmin[1]) * st.live[1];
            } else {
                ra = std::uint64_t(degmin[0]) * net.n_a();
                rb = std::uint64_t(degmin[1]) * net.n_b();
            }
            const int si = ra <= rb ? 0 : 1;
            st.remove(si, arg[si], noop);
        } else {
            for (int si = 0; si < 2 && !st.exhausted(); ++si)
                for (std::uint32_t v : victims[si]) {
                    st.remove(si, v, noop);
                    if (st.exhausted()) break;
                }
        }
        for (int si = 0; si < 2; ++si) {
            auto& list = live_nodes[si];
            list.erase(std::remove_if(list.begin(), list.end(),
                                      [&](std::uint32_t v) { return st.dead[si][v]; }),
                       list.end());
        }
    }
    st.finalize();
    return st.res;
}

NodeSetPair peel_state_at(const TripleNetwork& net, const PeelResult& run, std::size_t step) {
    assert(step <= run.steps.size());
    std::vector<std::uint8_t> gone_a(net.n_a(), 0), gone_b(net.n_b(), 0);
    for (std::size_t k = 0; k < step; ++k) {
        const NodeRef r = run.steps[k].removed;
        (r.side == Side::A ? gone_a : gone_b)[r.index] = 1;
    }
    NodeSetPair out;
    for (std::uint32_t v = 0; v < net.n_a(); ++v)
        if (!gone_a[v]) out.a.push_back(v);
    for (std::uint32_t v = 0; v < net.n_b(); ++v)
        if (!gone_b[v]) out.b.push_back(v);
    return out;
}

}  // namespace cdc
