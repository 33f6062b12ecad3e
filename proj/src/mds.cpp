#include "cdc/mds.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "cdc/flow.hpp"

namespace cdc {

std::vector<std::pair<std::uint32_t, std::uint32_t>> enumerate_ratios(std::uint32_t max_a,
                                                                      std::uint32_t max_b) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
    for (std::uint32_t i = 1; i <= max_a; ++i) {
        for (std::uint32_t j = 1; j <= max_b; ++j) {
            if (std::gcd(i, j) == 1) out.emplace_back(i, j);
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        return std::uint64_t(x.first) * y.second < std::uint64_t(y.first) * x.second;
    });
    return out;
}

GuessOutcome probe_density_guess(const TripleNetwork& net, const BipartiteComponent& component,
                                 std::uint32_t i, std::uint32_t j, double g) {
    const auto& an = component.nodes.a;
    const auto& bn = component.nodes.b;
    const std::uint32_t na = static_cast<std::uint32_t>(an.size());
    const std::uint32_t nb = static_cast<std::uint32_t>(bn.size());
    const double big = static_cast<double>(component.edges);
    const double root_ratio = std::sqrt(static_cast<double>(i) / static_cast<double>(j));

    // local ids: component A nodes, then B nodes, then source and sink
    FlowNetwork flow(na + nb + 2);
    const std::uint32_t source = na + nb;
    const std::uint32_t sink = source + 1;
    for (std::uint32_t k = 0; k < na; ++k) {
        flow.add_edge(source, k, big);
        flow.add_edge(k, sink, big + g / root_ratio - net.c_degree(Side::A, an[k]));
    }
    for (std::uint32_t k = 0; k < nb; ++k) {
        flow.add_edge(source, na + k, big);
        flow.add_edge(na + k, sink, big + g * root_ratio - net.c_degree(Side::B, bn[k]));
    }
    for (std::uint32_t k = 0; k < na; ++k) {
        for (std::uint32_t v : net.c_neighbors_of_a(an[k])) {
            const std::uint32_t lv =
                static_cast<std::uint32_t>(std::lower_bound(bn.begin(), bn.end(), v) - bn.begin());
            flow.add_edge(k, na + lv, 1.0);
            flow.add_edge(na + lv, k, 1.0);
        }
    }

    auto cut = flow.min_cut(source, sink);
    GuessOutcome out;
    out.cut_value = cut.value;
    out.baseline = big * (na + nb);
    for (std::uint32_t id : cut.source_side) {
        if (id < na) out.witness.a.push_back(an[id]);
        else if (id < na + nb) out.witness.b.push_back(bn[id - na]);
    }
    out.witness.normalize();
    return out;
}

MdsResult mds_densest_bipartite(const TripleNetwork& net) {
    MdsResult out;
    const auto decomp = bipartite_components(net);
    if (decomp.components.empty()) return out;

    // distinct achievable densities differ by at least twice this step, so a
    // bracket this narrow pins the optimum
    const double pool = static_cast<double>(net.n_a()) * static_cast<double>(net.n_b());
    const double step_floor = 1.0 / (4.0 * pool * pool * std::sqrt(pool));

    std::optional<ScoredSubgraph> best;
    for (const auto& comp : decomp.components) {
        const double na = static_cast<double>(comp.nodes.a.size());
        const double nb = static_cast<double>(comp.nodes.b.size());
        const double ceiling =
            std::min(std::sqrt(static_cast<double>(comp.edges)), std::sqrt(na * nb));
        if (best && best->density >= ceiling) continue;
        out.stats.components_searched++;

        for (const auto& [i, j] : enumerate_ratios(static_cast<std::uint32_t>(na),
                                                   static_cast<std::uint32_t>(nb))) {
            double low = best ? best->density : 0.0;
            double high = std::sqrt(na * nb);
            if (low >= high) break;
            out.stats.ratios_tried++;
            while (high - low > step_floor) {
                const double mid = low + (high - low) / 2.0;
                out.stats.flow_calls++;
                auto probe = probe_density_guess(net, comp, i, j, mid);
                bool improved = false;
                if (!probe.witness.empty_either()) {
                    auto scored = score_subgraph(net, std::move(probe.witness));
                    // the witness itself certifies feasibility; the cut value
                    // is only advisory under floating point
                    if (scored.density > mid) {
                        improved = true;
                        double new_low = std::max(mid, scored.density);
                        if (!best || compare_density(scored, *best) > 0) best = std::move(scored);
                        if (new_low > high) {
                            out.stats.witness_clamps++;
                            new_low = high;
                        }
                        low = new_low;
                    }
                }
                if (!improved) high = mid;
            }
        }
    }
    out.best = std::move(best);
    return out;
}

}  // namespace cdc
