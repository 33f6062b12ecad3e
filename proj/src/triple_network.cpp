#include "cdc/triple_network.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_set>

namespace cdc {

void NodeSetPair::normalize() {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    std::sort(b.begin(), b.end());
    b.erase(std::unique(b.begin(), b.end()), b.end());
}

bool pair_lex_less(const NodeSetPair& x, const NodeSetPair& y) {
    if (x.a != y.a) {
        return std::lexicographical_compare(x.a.begin(), x.a.end(), y.a.begin(), y.a.end());
    }
    return std::lexicographical_compare(x.b.begin(), x.b.end(), y.b.begin(), y.b.end());
}

int compare_density(std::uint64_t e1, std::uint64_t a1, std::uint64_t b1,
                    std::uint64_t e2, std::uint64_t a2, std::uint64_t b2) {
    const bool zero1 = e1 == 0 || a1 == 0 || b1 == 0;
    const bool zero2 = e2 == 0 || a2 == 0 || b2 == 0;
    if (zero1 || zero2) {
        if (zero1 && zero2) return 0;
        return zero1 ? -1 : 1;
    }
    using u128 = unsigned __int128;
    const u128 lhs = u128(e1) * e1 * (u128(a2) * b2);
    const u128 rhs = u128(e2) * e2 * (u128(a1) * b1);
    if (lhs < rhs) return -1;
    if (lhs > rhs) return 1;
    return 0;
}

int compare_density(const ScoredSubgraph& x, const ScoredSubgraph& y) {
    return compare_density(x.edges, x.nodes.a.size(), x.nodes.b.size(),
                           y.edges, y.nodes.a.size(), y.nodes.b.size());
}

bool denser_or_earlier(const ScoredSubgraph& x, const ScoredSubgraph& y) {
    const int c = compare_density(x, y);
    if (c != 0) return c > 0;
    return pair_lex_less(x.nodes, y.nodes);
}

namespace {

// sorted unique adjacency from an edge list; loops/dups counted, range checked
std::vector<std::vector<std::uint32_t>> build_undirected(std::uint32_t n, const EdgeList& edges,
                                                         bool allow_loops, std::uint64_t& m_out,
                                                         LoadStats* stats, const char* what) {
    std::vector<std::vector<std::uint32_t>> adj(n);
    for (const auto& [u, v] : edges) {
        if (u >= n || v >= n) {
            throw std::out_of_range(std::string(what) + " edge endpoint out of range: " +
                                    std::to_string(u) + " " + std::to_string(v) +
                                    " (n=" + std::to_string(n) + ")");
        }
        if (!allow_loops && u == v) {
            if (stats) stats->self_loops_dropped++;
            continue;
        }
        adj[u].push_back(v);
        if (u != v) adj[v].push_back(u);
    }
    m_out = 0;
    for (auto& list : adj) {
        std::sort(list.begin(), list.end());
        const auto old = list.size();
        list.erase(std::unique(list.begin(), list.end()), list.end());
        if (stats) stats->duplicate_edges_dropped += old - list.size();
        m_out += list.size();
    }
    m_out /= 2;
    return adj;
}

}  // namespace

TripleNetwork TripleNetwork::from_edges(std::uint32_t n_a, std::uint32_t n_b,
                                        const EdgeList& edges_a, const EdgeList& edges_b,
                                        const EdgeList& edges_c, LoadStats* stats) {
    TripleNetwork net;
    net.n_a_ = n_a;
    net.n_b_ = n_b;

    LoadStats local;
    net.adj_a_ = build_undirected(n_a, edges_a, false, net.m_a_, &local, "A");
    net.adj_b_ = build_undirected(n_b, edges_b, false, net.m_b_, &local, "B");
    // undirected duplicates get counted once per endpoint
    local.duplicate_edges_dropped /= 2;

    net.adj_c_ab_.assign(n_a, {});
    net.adj_c_ba_.assign(n_b, {});
    for (const auto& [u, v] : edges_c) {
        if (u >= n_a) {
            throw std::out_of_range("C edge A-endpoint out of range: " + std::to_string(u) +
                                    " (n_a=" + std::to_string(n_a) + ")");
        }
        if (v >= n_b) {
            throw std::out_of_range("C edge B-endpoint out of range: " + std::to_string(v) +
                                    " (n_b=" + std::to_string(n_b) + ")");
        }
        net.adj_c_ab_[u].push_back(v);
    }
    net.m_c_ = 0;
    for (std::uint32_t u = 0; u < n_a; ++u) {
        auto& list = net.adj_c_ab_[u];
        std::sort(list.begin(), list.end());
        const auto old = list.size();
        list.erase(std::unique(list.begin(), list.end()), list.end());
        local.duplicate_edges_dropped += old - list.size();
        net.m_c_ += list.size();
        for (std::uint32_t v : list) net.adj_c_ba_[v].push_back(u);
    }
    // adj_c_ba_ ends up sorted because A-ids were appended in increasing order

    if (stats) *stats = local;
    return net;
}

void TripleNetwork::set_labels(std::vector<std::string> la, std::vector<std::string> lb) {
    labels_a_ = std::move(la);
    labels_b_ = std::move(lb);
}

namespace {

enum class Section { None, A, B, C, LabelsA, LabelsB };

bool parse_two_u32(const std::string& line, std::uint32_t& x, std::uint32_t& y) {
    std::istringstream ss(line);
    long long a, b;
    if (!(ss >> a >> b) || a < 0 || b < 0) return false;
    std::string rest;
    if (ss >> rest) return false;
    x = static_cast<std::uint32_t>(a);
    y = static_cast<std::uint32_t>(b);
    return true;
}

}  // namespace

TripleNetwork load_triple_network(std::istream& in, const std::string& source_name,
                                  LoadStats* stats) {
    std::string line;
    std::size_t lineno = 0;
    bool have_header = false;
    std::uint32_t n_a = 0, n_b = 0;
    EdgeList ea, eb, ec;
    std::vector<std::pair<std::uint32_t, std::string>> raw_labels_a, raw_labels_b;
    Section section = Section::None;
    bool seen[5] = {false, false, false, false, false};

    auto fail = [&](const std::string& msg) -> void { throw ParseError(source_name, lineno, msg); };

    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::size_t first = line.find_first_not_of(" \t");
        if (first == std::string::npos) continue;
        if (line[first] == '%') continue;
        std::string body = line.substr(first);

        if (!have_header) {
            std::istringstream ss(body);
            std::string tag;
            long long na, nb;
            if (!(ss >> tag) || tag != "trinet" || !(ss >> na >> nb) || na < 0 || nb < 0) {
                fail("expected header 'trinet <n_a> <n_b>'");
            }
            n_a = static_cast<std::uint32_t>(na);
            n_b = static_cast<std::uint32_t>(nb);
            have_header = true;
            continue;
        }

        if (body[0] == '#') {
            Section next = Section::None;
            if (body == "#A") next = Section::A;
            else if (body == "#B") next = Section::B;
            else if (body == "#C") next = Section::C;
            else if (body == "#LABELS-A") next = Section::LabelsA;
            else if (body == "#LABELS-B") next = Section::LabelsB;
            else fail("unknown section header '" + body + "'");
            const int idx = static_cast<int>(next) - 1;
            if (seen[idx]) fail("duplicate section header '" + body + "'");
            seen[idx] = true;
            section = next;
            continue;
        }

        switch (section) {
        case Section::None:
            fail("edge line before any section header");
            break;
        case Section::A:
        case Section::B:
        case Section::C: {
            std::uint32_t u, v;
            if (!parse_two_u32(body, u, v)) fail("expected two non-negative integers");
            if (section == Section::A) ea.emplace_back(u, v);
            else if (section == Section::B) eb.emplace_back(u, v);
            else ec.emplace_back(u, v);
            break;
        }
        case Section::LabelsA:
        case Section::LabelsB: {
            std::istringstream ss(body);
            long long id;
            if (!(ss >> id) || id < 0) fail("expected '<id> <label>'");
            std::string label;
            std::getline(ss, label);
            std::size_t start = label.find_first_not_of(" \t");
            label = start == std::string::npos ? std::string() : label.substr(start);
            if (label.empty()) fail("empty label");
            const std::uint32_t n = section == Section::LabelsA ? n_a : n_b;
            if (static_cast<std::uint64_t>(id) >= n) fail("label id out of range");
            auto& dst = section == Section::LabelsA ? raw_labels_a : raw_labels_b;
            dst.emplace_back(static_cast<std::uint32_t>(id), label);
            break;
        }
        }
    }
    if (!have_header) {
        lineno = lineno == 0 ? 1 : lineno;
        throw ParseError(source_name, lineno, "missing 'trinet' header");
    }

    auto build = [&]() -> TripleNetwork {
        try {
            return TripleNetwork::from_edges(n_a, n_b, ea, eb, ec, stats);
        } catch (const std::out_of_range& e) {
            throw std::out_of_range(source_name + ": " + e.what());
        }
    };
    TripleNetwork net = build();

    if (!raw_labels_a.empty() || !raw_labels_b.empty()) {
        std::vector<std::string> la(n_a), lb(n_b);
        for (auto& [id, s] : raw_labels_a) la[id] = std::move(s);
        for (auto& [id, s] : raw_labels_b) lb[id] = std::move(s);
        net.set_labels(std::move(la), std::move(lb));
    }
    return net;
}

void write_trinet(const TripleNetwork& net, std::ostream& out) {
    out << "trinet " << net.n_a() << ' ' << net.n_b() << '\n';
    out << "#A\n";
    for (std::uint32_t u = 0; u < net.n_a(); ++u) {
        for (std::uint32_t v : net.neighbors_a(u)) {
            if (u < v) out << u << ' ' << v << '\n';
        }
    }
    out << "#B\n";
    for (std::uint32_t u = 0; u < net.n_b(); ++u) {
        for (std::uint32_t v : net.neighbors_b(u)) {
            if (u < v) out << u << ' ' << v << '\n';
        }
    }
    out << "#C\n";
    for (std::uint32_t u = 0; u < net.n_a(); ++u) {
        for (std::uint32_t v : net.c_neighbors_of_a(u)) out << u << ' ' << v << '\n';
    }
    if (!net.labels_a().empty()) {
        out << "#LABELS-A\n";
        for (std::uint32_t u = 0; u < net.n_a(); ++u) {
            if (!net.labels_a()[u].empty()) out << u << ' ' << net.labels_a()[u] << '\n';
        }
    }
    if (!net.labels_b().empty()) {
        out << "#LABELS-B\n";
        for (std::uint32_t v = 0; v < net.n_b(); ++v) {
            if (!net.labels_b()[v].empty()) out << v << ' ' << net.labels_b()[v] << '\n';
        }
    }
}

namespace {

// membership test over one side; byte mask for big subsets, hash set for small
class Membership {
  public:
    Membership(std::uint32_t n, const std::vector<std::uint32_t>& s) {
        if (s.size() * 16 >= n) {
            mask_.assign(n, 0);
            for (std::uint32_t v : s) mask_[v] = 1;
        } else {
            set_.insert(s.begin(), s.end());
        }
    }
    bool contains(std::uint32_t v) const {
        return mask_.empty() ? set_.count(v) != 0 : mask_[v] != 0;
    }

  private:
    std::vector<std::uint8_t> mask_;
    std::unordered_set<std::uint32_t> set_;
};

}  // namespace

std::uint64_t bipartite_edge_count(const TripleNetwork& net, const NodeSetPair& nodes) {
    if (nodes.a.empty() || nodes.b.empty()) return 0;
    // iterate the smaller side, membership-test the other
    const bool from_a = nodes.a.size() <= nodes.b.size();
    const auto& small = from_a ? nodes.a : nodes.b;
    const auto& other = from_a ? nodes.b : nodes.a;
    Membership member(from_a ? net.n_b() : net.n_a(), other);
    std::uint64_t count = 0;
    for (std::uint32_t u : small) {
        for (std::uint32_t v : net.c_neighbors(from_a ? Side::A : Side::B, u)) {
            if (member.contains(v)) ++count;
        }
    }
    return count;
}

double density(const TripleNetwork& net, const NodeSetPair& nodes) {
    if (nodes.a.empty() || nodes.b.empty()) return 0.0;
    const std::uint64_t e = bipartite_edge_count(net, nodes);
    return static_cast<double>(e) /
           std::sqrt(static_cast<double>(nodes.a.size()) * static_cast<double>(nodes.b.size()));
}

bool is_connected(const TripleNetwork& net, Side side, const std::vector<std::uint32_t>& s) {
    if (s.empty()) return false;
    if (s.size() == 1) return true;
    Membership member(net.side_count(side), s);
    std::vector<std::uint32_t> queue{s.front()};
    std::unordered_set<std::uint32_t> visited{s.front()};
    std::size_t head = 0;
    while (head < queue.size()) {
        const std::uint32_t u = queue[head++];
        for (std::uint32_t v : net.neighbors(side, u)) {
            if (member.contains(v) && visited.insert(v).second) queue.push_back(v);
        }
    }
    return visited.size() == s.size();
}

std::vector<std::vector<std::uint32_t>> connected_components(const TripleNetwork& net, Side side,
                                                             const std::vector<std::uint32_t>& s) {
    std::vector<std::vector<std::uint32_t>> result;
    if (s.empty()) return result;
    Membership member(net.side_count(side), s);
    std::unordered_set<std::uint32_t> visited;
    std::vector<std::uint32_t> sorted = s;
    std::sort(sorted.begin(), sorted.end());
    for (std::uint32_t start : sorted) {
        if (visited.count(start)) continue;
        std::vector<std::uint32_t> comp{start};
        visited.insert(start);
        std::size_t head = 0;
        while (head < comp.size()) {
            const std::uint32_t u = comp[head++];
            for (std::uint32_t v : net.neighbors(side, u)) {
                if (member.contains(v) && visited.insert(v).second) comp.push_back(v);
            }
        }
        std::sort(comp.begin(), comp.end());
        result.push_back(std::move(comp));
    }
    return result;
}

ScoredSubgraph score_subgraph(const TripleNetwork& net, NodeSetPair nodes) {
    nodes.normalize();
    ScoredSubgraph out;
    out.edges = bipartite_edge_count(net, nodes);
    out.density = nodes.empty_either()
                      ? 0.0
                      : static_cast<double>(out.edges) /
                            std::sqrt(static_cast<double>(nodes.a.size()) *
                                      static_cast<double>(nodes.b.size()));
    out.connected_a = is_connected(net, Side::A, nodes.a);
    out.connected_b = is_connected(net, Side::B, nodes.b);
    out.nodes = std::move(nodes);
    return out;
}

BipartiteDecomposition bipartite_components(const TripleNetwork& net) {
    BipartiteDecomposition out;
    std::vector<std::uint8_t> seen_a(net.n_a(), 0), seen_b(net.n_b(), 0);
    for (std::uint32_t start = 0; start < net.n_a(); ++start) {
        if (seen_a[start] || net.c_neighbors_of_a(start).empty()) continue;
        BipartiteComponent comp;
        std::vector<NodeRef> queue{{Side::A, start}};
        seen_a[start] = 1;
        std::size_t head = 0;
        while (head < queue.size()) {
            const NodeRef cur = queue[head++];
            if (cur.side == Side::A) {
                comp.nodes.a.push_back(cur.index);
                comp.edges += net.c_neighbors_of_a(cur.index).size();
                for (std::uint32_t v : net.c_neighbors_of_a(cur.index)) {
                    if (!seen_b[v]) {
                        seen_b[v] = 1;
                        queue.push_back({Side::B, v});
                    }
                }
            } else {
                comp.nodes.b.push_back(cur.index);
                for (std::uint32_t u : net.c_neighbors_of_b(cur.index)) {
                    if (!seen_a[u]) {
                        seen_a[u] = 1;
                        queue.push_back({Side::A, u});
                    }
                }
            }
        }
        comp.nodes.normalize();
        out.components.push_back(std::move(comp));
    }
    for (std::uint32_t u = 0; u < net.n_a(); ++u) {
        if (net.c_neighbors_of_a(u).empty()) out.isolated_a.push_back(u);
    }
    for (std::uint32_t v = 0; v < net.n_b(); ++v) {
        if (net.c_neighbors_of_b(v).empty()) out.isolated_b.push_back(v);
    }
    std::stable_sort(out.components.begin(), out.components.end(),
                     [](const BipartiteComponent& x, const BipartiteComponent& y) {
                         if (x.edges != y.edges) return x.edges > y.edges;
                         return x.nodes.a.front() < y.nodes.a.front();
                     });
    return out;
}

InducedSubnetwork induced_subnetwork(const TripleNetwork& net, const NodeSetPair& nodes) {
    InducedSubnetwork out;
    out.to_global_a = nodes.a;
    out.to_global_b = nodes.b;
    std::sort(out.to_global_a.begin(), out.to_global_a.end());
    std::sort(out.to_global_b.begin(), out.to_global_b.end());

    auto local_id = [](const std::vector<std::uint32_t>& ids, std::uint32_t v) {
        return static_cast<std::uint32_t>(std::lower_bound(ids.begin(), ids.end(), v) -
                                          ids.begin());
    };
    auto member = [](const std::vector<std::uint32_t>& ids, std::uint32_t v) {
        return std::binary_search(ids.begin(), ids.end(), v);
    };

    EdgeList ea, eb, ec;
    for (std::uint32_t lu = 0; lu < out.to_global_a.size(); ++lu) {
        const std::uint32_t u = out.to_global_a[lu];
        for (std::uint32_t v : net.neighbors_a(u))
            if (u < v && member(out.to_global_a, v)) ea.emplace_back(lu, local_id(out.to_global_a, v));
        for (std::uint32_t v : net.c_neighbors_of_a(u))
            if (member(out.to_global_b, v)) ec.emplace_back(lu, local_id(out.to_global_b, v));
    }
    for (std::uint32_t lu = 0; lu < out.to_global_b.size(); ++lu) {
        const std::uint32_t u = out.to_global_b[lu];
        for (std::uint32_t v : net.neighbors_b(u))
            if (u < v && member(out.to_global_b, v)) eb.emplace_back(lu, local_id(out.to_global_b, v));
    }
    out.net = TripleNetwork::from_edges(static_cast<std::uint32_t>(out.to_global_a.size()),
                                        static_cast<std::uint32_t>(out.to_global_b.size()), ea, eb,
                                        ec);
    return out;
}

}  // namespace cdc
