#include "cdc/flow.hpp"

#include <algorithm>
#include <cassert>
#include <limits>

namespace cdc {

FlowNetwork::FlowNetwork(std::uint32_t node_count) : arcs_(node_count) {}

void FlowNetwork::add_edge(std::uint32_t from, std::uint32_t to, double cap) {
    assert(from != to);
    assert(cap >= 0.0);
    cap_scale_ = std::max(cap_scale_, cap);
    arcs_[from].push_back({to, static_cast<std::uint32_t>(arcs_[to].size()), cap});
    arcs_[to].push_back({from, static_cast<std::uint32_t>(arcs_[from].size()) - 1, 0.0});
}

FlowNetwork::CutResult FlowNetwork::min_cut(std::uint32_t source, std::uint32_t sink) {
    // residual capacities below eps count as saturated
    const double eps = cap_scale_ * 1e-12;
    const std::uint32_t n = node_count();
    std::vector<std::int32_t> level(n);
    std::vector<std::uint32_t> iter(n);
    std::vector<std::uint32_t> queue;
    queue.reserve(n);

    auto bfs = [&]() {
        std::fill(level.begin(), level.end(), -1);
        queue.assign(1, source);
        level[source] = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const std::uint32_t u = queue[head];
            for (const Arc& a : arcs_[u]) {
                if (a.cap > eps && level[a.to] < 0) {
                    level[a.to] = level[u] + 1;
                    queue.push_back(a.to);
                }
            }
        }
        return level[sink] >= 0;
    };

    auto dfs = [&](auto&& self, std::uint32_t u, double limit) -> double {
        if (u == sink) return limit;
        for (std::uint32_t& k = iter[u]; k < arcs_[u].size(); ++k) {
            Arc& a = arcs_[u][k];
            if (a.cap > eps && level[a.to] == level[u] + 1) {
                const double pushed = self(self, a.to, std::min(limit, a.cap));
                if (pushed > eps) {
                    a.cap -= pushed;
                    arcs_[a.to][a.rev].cap += pushed;
                    return pushed;
                }
            }
        }
        return 0.0;
    };

    double total = 0.0;
    while (bfs()) {
        std::fill(iter.begin(), iter.end(), 0);
        for (;;) {
            const double pushed = dfs(dfs, source, std::numeric_limits<double>::infinity());
            if (pushed <= eps) break;
            total += pushed;
        }
    }

    CutResult out;
    out.value = total;
    std::vector<std::uint8_t> seen(n, 0);
    queue.assign(1, source);
    seen[source] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const std::uint32_t u = queue[head];
        for (const Arc& a : arcs_[u]) {
            if (a.cap > eps && !seen[a.to]) {
                seen[a.to] = 1;
                queue.push_back(a.to);
            }
        }
    }
    for (std::uint32_t v = 0; v < n; ++v) {
        if (seen[v]) out.source_side.push_back(v);
    }
    return out;
}

}  // namespace cdc
