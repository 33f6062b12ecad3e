#include "cdc/patterns.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <exception>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "cdc/mds.hpp"

namespace cdc {

const char* pattern_name(PatternKind kind) {
    switch (kind) {
    case PatternKind::CDC: return "cdc";
    case PatternKind::OCD: return "ocd";
    case PatternKind::CDC_Seeds: return "cdc_seeds";
    case PatternKind::OCD_Seed: return "ocd_seed";
    }
    return "?";
}

const char* algo_name(MineAlgo algo) {
    switch (algo) {
    case MineAlgo::Mds: return "mds";
    case MineAlgo::Gnd: return "gnd";
    case MineAlgo::Grd: return "grd";
    case MineAlgo::Frd: return "frd";
    }
    return "?";
}

double CandidatePair::density() const {
    if (size_a == 0 || size_b == 0) return 0.0;
    return static_cast<double>(cross_edges) /
           std::sqrt(static_cast<double>(size_a) * static_cast<double>(size_b));
}

namespace {

std::vector<std::uint32_t> all_nodes(std::uint32_t n) {
    std::vector<std::uint32_t> out(n);
    std::iota(out.begin(), out.end(), 0);
    return out;
}

void check_options(const MineOptions& opt) {
    if (opt.top_k == 0) throw std::invalid_argument("top_k must be at least 1");
    if (opt.snapshots == 0) throw std::invalid_argument("snapshots must be at least 1");
    if (opt.workers == 0) throw std::invalid_argument("workers must be at least 1");
    if (opt.algo == MineAlgo::Frd && !(opt.epsilon > -1.0))
        throw std::invalid_argument("epsilon must be greater than -1");
}

// denser first, then lexicographically smaller node sets
bool result_before(const PatternResult& x, const PatternResult& y) {
    const int c = compare_density(x.subgraph, y.subgraph);
    if (c != 0) return c > 0;
    return pair_lex_less(x.subgraph.nodes, y.subgraph.nodes);
}

// bounded best-k list with node-set dedup
class TopK {
  public:
    explicit TopK(std::uint32_t k) : k_(k) {}

    void offer(PatternResult r) {
        auto pos = std::lower_bound(items_.begin(), items_.end(), r, result_before);
        if (pos != items_.end() && pos->subgraph.nodes == r.subgraph.nodes) return;
        if (items_.size() == k_ && pos == items_.end()) return;
        items_.insert(pos, std::move(r));
        if (items_.size() > k_) items_.pop_back();
    }

    // true when nothing with squared density <= bound_edges can still enter
    bool saturated_above(std::uint64_t bound_edges) const {
        if (items_.size() < k_) return false;
        const ScoredSubgraph& w = items_.back().subgraph;
        return compare_density(w.edges, w.nodes.a.size(), w.nodes.b.size(), bound_edges, 1,
                               bound_edges) > 0;
    }

    void merge_into(TopK& target) {
        for (auto& r : items_) target.offer(std::move(r));
    }

    std::vector<PatternResult> take() { return std::move(items_); }
    bool empty() const { return items_.empty(); }

  private:
    std::uint32_t k_;
    std::vector<PatternResult> items_;  // kept sorted by result_before
};

// initial state plus the latest strict improvements, capped at `limit`
std::vector<std::size_t> snapshot_steps(const PeelResult& run, std::uint32_t limit) {
    if (run.improvements.size() <= limit) return run.improvements;
    std::vector<std::size_t> out{0};
    out.insert(out.end(), run.improvements.end() - (limit - 1), run.improvements.end());
    return out;
}

// states of the configured dense algorithm on `net`, plus its pass count
std::vector<NodeSetPair> dense_states(const TripleNetwork& net, const MineOptions& opt,
                                      std::uint64_t& passes) {
    std::vector<NodeSetPair> states;
    passes = 0;
    switch (opt.algo) {
    case MineAlgo::Mds: {
        states.push_back({all_nodes(net.n_a()), all_nodes(net.n_b())});
        auto found = mds_densest_bipartite(net);
        if (found.best) states.push_back(std::move(found.best->nodes));
        break;
    }
    case MineAlgo::Gnd:
    case MineAlgo::Grd: {
        auto run = greedy_peel(net,
                               opt.algo == MineAlgo::Gnd ? PeelCriterion::Degree
                                                         : PeelCriterion::Rank,
                               {opt.denominator});
        for (std::size_t step : snapshot_steps(run, opt.snapshots))
            states.push_back(peel_state_at(net, run, step));
        break;
    }
    case MineAlgo::Frd: {
        auto run = rank_threshold_peel(net, opt.epsilon, {opt.denominator});
        passes = run.passes;
        for (std::size_t step : snapshot_steps(run, opt.snapshots))
            states.push_back(peel_state_at(net, run, step));
        break;
    }
    }
    return states;
}

ScoredSubgraph make_scored(NodeSetPair nodes, std::uint64_t edges, bool conn_a, bool conn_b) {
    ScoredSubgraph out;
    out.edges = edges;
    out.density = static_cast<double>(edges) /
                  std::sqrt(static_cast<double>(nodes.a.size()) *
                            static_cast<double>(nodes.b.size()));
    out.connected_a = conn_a;
    out.connected_b = conn_b;
    out.nodes = std::move(nodes);
    return out;
}

std::uint64_t pair_key(std::uint32_t x, std::uint32_t y) {
    return (std::uint64_t(x) << 32) | y;
}

template <class Fn>
void parallel_over(std::uint32_t count, std::uint32_t workers, Fn&& fn) {
    const std::uint32_t spawn = std::min(workers, count);
    if (spawn <= 1) {
        for (std::uint32_t idx = 0; idx < count; ++idx) fn(idx, 0);
        return;
    }
    std::vector<std::thread> threads;
    std::vector<std::exception_ptr> errors(spawn);
    for (std::uint32_t w = 0; w < spawn; ++w) {
        threads.emplace_back([&, w] {
            try {
                for (std::uint32_t idx = w; idx < count; idx += spawn) fn(idx, w);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : threads) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

void eval_cdc_candidate(const TripleNetwork& net, const CandidateAnalysis& analysis,
                        std::uint32_t idx, const MineOptions& opt, TopK& acc) {
    const CandidatePair& cand = analysis.pairs[idx];
    if (acc.saturated_above(cand.cross_edges)) return;
    auto sub = induced_subnetwork(
        net, {analysis.comps_a[cand.comp_a], analysis.comps_b[cand.comp_b]});

    std::uint64_t passes = 0;
    for (const NodeSetPair& state : dense_states(sub.net, opt, passes)) {
        if (state.empty_either()) continue;
        const auto pieces_a = connected_components(sub.net, Side::A, state.a);
        const auto pieces_b = connected_components(sub.net, Side::B, state.b);
        std::vector<std::uint32_t> piece_of_a(sub.net.n_a()), piece_of_b(sub.net.n_b());
        for (std::uint32_t p = 0; p < pieces_a.size(); ++p)
            for (std::uint32_t v : pieces_a[p]) piece_of_a[v] = p;
        for (std::uint32_t p = 0; p < pieces_b.size(); ++p)
            for (std::uint32_t v : pieces_b[p]) piece_of_b[v] = p;
        std::vector<std::uint8_t> in_b(sub.net.n_b(), 0);
        for (std::uint32_t v : state.b) in_b[v] = 1;

        // cross edges grouped by the piece pair they join
        std::unordered_map<std::uint64_t, std::uint64_t> joined;
        for (std::uint32_t u : state.a)
            for (std::uint32_t v : sub.net.c_neighbors_of_a(u))
                if (in_b[v]) joined[pair_key(piece_of_a[u], piece_of_b[v])]++;

        for (const auto& [key, edges] : joined) {
            const auto& pa = pieces_a[key >> 32];
            const auto& pb = pieces_b[key & 0xffffffffu];
            NodeSetPair global;
            global.a.reserve(pa.size());
            global.b.reserve(pb.size());
            for (std::uint32_t v : pa) global.a.push_back(sub.to_global_a[v]);
            for (std::uint32_t v : pb) global.b.push_back(sub.to_global_b[v]);
            PatternResult r;
            r.subgraph = make_scored(std::move(global), edges, true, true);
            r.kind = PatternKind::CDC;
            r.candidate = idx;
            r.passes = passes;
            assert(r.subgraph.edges == bipartite_edge_count(net, r.subgraph.nodes));
            assert(is_connected(net, Side::A, r.subgraph.nodes.a));
            assert(is_connected(net, Side::B, r.subgraph.nodes.b));
            acc.offer(std::move(r));
        }
    }
}

}  // namespace

CandidateAnalysis cdc_candidates(const TripleNetwork& net) {
    CandidateAnalysis out;
    out.comps_a = connected_components(net, Side::A, all_nodes(net.n_a()));
    out.comps_b = connected_components(net, Side::B, all_nodes(net.n_b()));
    std::vector<std::uint32_t> cid_a(net.n_a()), cid_b(net.n_b());
    for (std::uint32_t c = 0; c < out.comps_a.size(); ++c)
        for (std::uint32_t v : out.comps_a[c]) cid_a[v] = c;
    for (std::uint32_t c = 0; c < out.comps_b.size(); ++c)
        for (std::uint32_t v : out.comps_b[c]) cid_b[v] = c;

    std::unordered_map<std::uint64_t, std::uint64_t> counts;
    for (std::uint32_t u = 0; u < net.n_a(); ++u)
        for (std::uint32_t v : net.c_neighbors_of_a(u)) counts[pair_key(cid_a[u], cid_b[v])]++;

    out.pairs.reserve(counts.size());
    for (const auto& [key, edges] : counts) {
        CandidatePair p;
        p.comp_a = static_cast<std::uint32_t>(key >> 32);
        p.comp_b = static_cast<std::uint32_t>(key & 0xffffffffu);
        p.cross_edges = edges;
        p.size_a = static_cast<std::uint32_t>(out.comps_a[p.comp_a].size());
        p.size_b = static_cast<std::uint32_t>(out.comps_b[p.comp_b].size());
        out.pairs.push_back(p);
    }
    std::sort(out.pairs.begin(), out.pairs.end(), [](const CandidatePair& x, const CandidatePair& y) {
        const int c = compare_density(x.cross_edges, x.size_a, x.size_b, y.cross_edges, y.size_a,
                                      y.size_b);
        if (c != 0) return c > 0;
        if (x.comp_a != y.comp_a) return x.comp_a < y.comp_a;
        return x.comp_b < y.comp_b;
    });
    return out;
}

std::vector<PatternResult> mine_cdc(const TripleNetwork& net, const MineOptions& options) {
    check_options(options);
    const CandidateAnalysis analysis = cdc_candidates(net);
    if (analysis.pairs.empty())
        throw NoCandidateError("no side-component pair shares a cross edge");

    const std::uint32_t count = static_cast<std::uint32_t>(analysis.pairs.size());
    const std::uint32_t spawn = std::min(options.workers, count);
    std::vector<TopK> local(std::max(spawn, 1u), TopK(options.top_k));
    parallel_over(count, options.workers, [&](std::uint32_t idx, std::uint32_t worker) {
        eval_cdc_candidate(net, analysis, idx, options, local[worker]);
    });
    TopK merged(options.top_k);
    for (auto& acc : local) acc.merge_into(merged);
    auto results = merged.take();
    if (results.empty()) throw NoCandidateError("no connected pair with cross edges found");
    return results;
}

std::vector<PatternResult> mine_ocd(const TripleNetwork& net, const MineOptions& options) {
    check_options(options);
    TopK acc(options.top_k);
    std::uint64_t passes = 0;
    for (const NodeSetPair& state : dense_states(net, options, passes)) {
        if (state.empty_either()) continue;
        const bool conn_a = is_connected(net, Side::A, state.a);
        const bool conn_b = is_connected(net, Side::B, state.b);

        if (!conn_b) {
            // connected A pieces against the full (disconnected) B selection
            const auto pieces = connected_components(net, Side::A, state.a);
            std::vector<std::uint32_t> piece_of(net.n_a());
            for (std::uint32_t p = 0; p < pieces.size(); ++p)
                for (std::uint32_t v : pieces[p]) piece_of[v] = p;
            std::vector<std::uint8_t> in_b(net.n_b(), 0);
            for (std::uint32_t v : state.b) in_b[v] = 1;
            std::vector<std::uint64_t> edges(pieces.size(), 0);
            for (std::uint32_t u : state.a)
                for (std::uint32_t v : net.c_neighbors_of_a(u))
                    if (in_b[v]) edges[piece_of[u]]++;
            for (std::uint32_t p = 0; p < pieces.size(); ++p) {
                if (edges[p] == 0) continue;
                PatternResult r;
                r.subgraph = make_scored({pieces[p], state.b}, edges[p], true, false);
                r.kind = PatternKind::OCD;
                r.passes = passes;
                acc.offer(std::move(r));
            }
        }
        if (!conn_a) {
            const auto pieces = connected_components(net, Side::B, state.b);
            std::vector<std::uint32_t> piece_of(net.n_b());
            for (std::uint32_t p = 0; p < pieces.size(); ++p)
                for (std::uint32_t v : pieces[p]) piece_of[v] = p;
            std::vector<std::uint8_t> in_a(net.n_a(), 0);
            for (std::uint32_t v : state.a) in_a[v] = 1;
            std::vector<std::uint64_t> edges(pieces.size(), 0);
            for (std::uint32_t v : state.b)
                for (std::uint32_t u : net.c_neighbors_of_b(v))
                    if (in_a[u]) edges[piece_of[v]]++;
            for (std::uint32_t p = 0; p < pieces.size(); ++p) {
                if (edges[p] == 0) continue;
                PatternResult r;
                r.subgraph = make_scored({state.a, pieces[p]}, edges[p], false, true);
                r.kind = PatternKind::OCD;
                r.passes = passes;
                acc.offer(std::move(r));
            }
        }
    }
    if (acc.empty())
        throw NoCandidateError("no dense state has exactly one connected side");
    return acc.take();
}

}  // namespace cdc
