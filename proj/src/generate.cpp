#include "cdc/generate.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace cdc {

namespace {

// bounded draws avoid std::uniform_int_distribution, whose output is
// implementation-defined; the tiny modulo bias is irrelevant here
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

double draw_unit(std::mt19937_64& rng) { return double(rng() >> 11) * 0x1.0p-53; }

std::uint64_t undirected_key(std::uint32_t u, std::uint32_t v) {
    if (u > v) std::swap(u, v);
    return (std::uint64_t(u) << 32) | v;
}

// m distinct unordered non-loop pairs over [0,n); exact count
EdgeList sample_side_edges_uniform(std::mt19937_64& rng, std::uint32_t n, std::uint64_t m) {
    EdgeList out;
    if (m == 0) return out;
    const std::uint64_t max_edges = std::uint64_t(n) * (n - 1) / 2;
    if (2 * m > max_edges) {
        // dense request: enumerate everything and keep a random prefix
        EdgeList all;
        all.reserve(max_edges);
        for (std::uint32_t u = 0; u < n; ++u)
            for (std::uint32_t v = u + 1; v < n; ++v) all.emplace_back(u, v);
        for (std::uint64_t i = 0; i < m; ++i)
            std::swap(all[i], all[i + draw_below(rng, all.size() - i)]);
        all.resize(m);
        return all;
    }
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(m * 2);
    out.reserve(m);
    while (out.size() < m) {
        const auto u = std::uint32_t(draw_below(rng, n));
        const auto v = std::uint32_t(draw_below(rng, n));
        if (u == v) continue;
        if (seen.insert(undirected_key(u, v)).second)
            out.emplace_back(std::min(u, v), std::max(u, v));
    }
    return out;
}

EdgeList sample_cross_edges_uniform(std::mt19937_64& rng, std::uint32_t n_a, std::uint32_t n_b,
                                    std::uint64_t m) {
    EdgeList out;
    if (m == 0) return out;
    const std::uint64_t max_edges = std::uint64_t(n_a) * n_b;
    if (2 * m > max_edges) {
        EdgeList all;
        all.reserve(max_edges);
        for (std::uint32_t u = 0; u < n_a; ++u)
            for (std::uint32_t v = 0; v < n_b; ++v) all.emplace_back(u, v);
        for (std::uint64_t i = 0; i < m; ++i)
            std::swap(all[i], all[i + draw_below(rng, all.size() - i)]);
        all.resize(m);
        return all;
    }
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(m * 2);
    out.reserve(m);
    while (out.size() < m) {
        const auto u = std::uint32_t(draw_below(rng, n_a));
        const auto v = std::uint32_t(draw_below(rng, n_b));
        if (seen.insert((std::uint64_t(u) << 32) | v).second) out.emplace_back(u, v);
    }
    return out;
}

// recursive quadrant descent over the n x n adjacency square
EdgeList sample_side_edges_rmat(std::mt19937_64& rng, std::uint32_t n, std::uint64_t m,
                                const std::array<double, 4>& probs) {
    EdgeList out;
    if (m == 0) return out;
    const std::uint64_t max_edges = std::uint64_t(n) * (n - 1) / 2;
    const int levels = std::countr_zero(n);
    const double t0 = probs[0];
    const double t1 = probs[0] + probs[1];
    const double t2 = probs[0] + probs[1] + probs[2];

    std::unordered_set<std::uint64_t> seen;
    seen.reserve(m * 2);
    out.reserve(m);
    // duplicates are the norm under skewed probabilities; the budget keeps
    // adversarially saturated requests from spinning forever
    std::uint64_t attempts_left = 400 * m + 10000;
    while (out.size() < m && attempts_left > 0) {
        --attempts_left;
        std::uint32_t u = 0, v = 0;
        for (int l = 0; l < levels; ++l) {
            const double r = draw_unit(rng);
            const int q = r < t0 ? 0 : r < t1 ? 1 : r < t2 ? 2 : 3;
            u = (u << 1) | (q >> 1);
            v = (v << 1) | (q & 1);
        }
        if (u == v) continue;
        if (seen.insert(undirected_key(u, v)).second)
            out.emplace_back(std::min(u, v), std::max(u, v));
    }
    if (out.size() < m) {
        // top up from the unused pairs so the count stays exact
        EdgeList missing;
        missing.reserve(max_edges - out.size());
        for (std::uint32_t u = 0; u < n; ++u)
            for (std::uint32_t v = u + 1; v < n; ++v)
                if (!seen.count(undirected_key(u, v))) missing.emplace_back(u, v);
        const std::uint64_t need = m - out.size();
        for (std::uint64_t i = 0; i < need; ++i)
            std::swap(missing[i], missing[i + draw_below(rng, missing.size() - i)]);
        out.insert(out.end(), missing.begin(), missing.begin() + need);
    }
    return out;
}

void validate(const GenSpec& spec) {
    auto side_max = [](std::uint32_t n) { return std::uint64_t(n) * (n - 1) / 2; };
    if (spec.m_a > side_max(spec.n_a))
        throw std::invalid_argument("m_a exceeds the " + std::to_string(side_max(spec.n_a)) +
                                    " possible A edges");
    if (spec.m_b > side_max(spec.n_b))
        throw std::invalid_argument("m_b exceeds the " + std::to_string(side_max(spec.n_b)) +
                                    " possible B edges");
    if (spec.m_c > std::uint64_t(spec.n_a) * spec.n_b)
        throw std::invalid_argument("m_c exceeds the " +
                                    std::to_string(std::uint64_t(spec.n_a) * spec.n_b) +
                                    " possible cross edges");
    if (spec.kind == GenKind::RMat) {
        if (!std::has_single_bit(spec.n_a) || !std::has_single_bit(spec.n_b))
            throw std::invalid_argument("rmat sides must be powers of two");
        double sum = 0.0;
        for (double p : spec.rmat_probs) {
            if (p < 0.0) throw std::invalid_argument("rmat probabilities must be non-negative");
            sum += p;
        }
        if (std::abs(sum - 1.0) > 1e-9)
            throw std::invalid_argument("rmat probabilities must sum to 1");
    }
}

}  // namespace

TripleNetwork generate(const GenSpec& spec) {
    validate(spec);
    std::mt19937_64 rng(spec.seed);
    EdgeList ea, eb;
    if (spec.kind == GenKind::RMat) {
        ea = sample_side_edges_rmat(rng, spec.n_a, spec.m_a, spec.rmat_probs);
        eb = sample_side_edges_rmat(rng, spec.n_b, spec.m_b, spec.rmat_probs);
    } else {
        ea = sample_side_edges_uniform(rng, spec.n_a, spec.m_a);
        eb = sample_side_edges_uniform(rng, spec.n_b, spec.m_b);
    }
    EdgeList ec = sample_cross_edges_uniform(rng, spec.n_a, spec.n_b, spec.m_c);
    return TripleNetwork::from_edges(spec.n_a, spec.n_b, ea, eb, ec);
}

std::vector<std::uint64_t> side_degree_histogram(const TripleNetwork& net, Side side) {
    std::vector<std::uint64_t> hist;
    for (std::uint32_t v = 0; v < net.side_count(side); ++v) {
        const std::size_t d = net.neighbors(side, v).size();
        if (d >= hist.size()) hist.resize(d + 1, 0);
        hist[d]++;
    }
    return hist;
}

std::vector<std::uint64_t> cross_degree_histogram(const TripleNetwork& net, Side side) {
    std::vector<std::uint64_t> hist;
    for (std::uint32_t v = 0; v < net.side_count(side); ++v) {
        const std::size_t d = net.c_neighbors(side, v).size();
        if (d >= hist.size()) hist.resize(d + 1, 0);
        hist[d]++;
    }
    return hist;
}

}  // namespace cdc
