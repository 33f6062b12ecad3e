// cdcmine: mines dense connected cross-linked subgraphs from trinet files.
//
// Subcommands: mine, gen, bench, oracle, verify, stats. Results go to stdout
// as one JSON object per line (keys alphabetical); diagnostics go to stderr.
// Exit codes: 0 success, 1 error, 2 no candidate.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cdc/generate.hpp"
#include "cdc/local_search.hpp"
#include "cdc/mds.hpp"
#include "cdc/oracle.hpp"
#include "cdc/patterns.hpp"
#include "cdc/peel.hpp"
#include "cdc/triple_network.hpp"
#include "cdc/types.hpp"
#include "json.hpp"

namespace {

using json = nlohmann::json;
using cdc::Side;
using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

cdc::TripleNetwork load_net(const std::string& path, cdc::LoadStats* stats = nullptr) {
    if (path == "-") return cdc::load_triple_network(std::cin, "<stdin>", stats);
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return cdc::load_triple_network(in, path, stats);
}

std::uint64_t fnv1a(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

// flag-style pattern names; the library uses underscores internally
std::string pattern_flag_name(cdc::PatternKind kind) {
    switch (kind) {
        case cdc::PatternKind::CDC: return "cdc";
        case cdc::PatternKind::OCD: return "ocd";
        case cdc::PatternKind::CDC_Seeds: return "cdc-seeds";
        default: return "ocd-seed";
    }
}

std::vector<std::string> split_commas(const std::string& text) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

// seed tokens are node ids, or labels when the network carries them
std::vector<std::uint32_t> resolve_seeds(const std::vector<std::string>& tokens,
                                         const std::vector<std::string>& labels,
                                         std::uint32_t node_count, const char* side) {
    std::vector<std::uint32_t> out;
    for (const std::string& tok : tokens) {
        const bool numeric =
            !tok.empty() && std::all_of(tok.begin(), tok.end(), [](unsigned char c) {
                return std::isdigit(c) != 0;
            });
        if (numeric) {
            const unsigned long long id = std::stoull(tok);
            if (id >= node_count)
                throw UsageError(std::string("seed id ") + tok + " out of range for side " + side);
            out.push_back(std::uint32_t(id));
            continue;
        }
        const auto it = std::find(labels.begin(), labels.end(), tok);
        if (it == labels.end())
            throw UsageError("seed label '" + tok + "' not found on side " + side);
        out.push_back(std::uint32_t(it - labels.begin()));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

json subgraph_json(const cdc::TripleNetwork& net, const cdc::ScoredSubgraph& sub) {
    json doc;
    doc["connected_a"] = sub.connected_a;
    doc["connected_b"] = sub.connected_b;
    doc["density"] = sub.density;
    doc["edges"] = sub.edges;
    doc["nodes_a"] = sub.nodes.a;
    doc["nodes_b"] = sub.nodes.b;
    if (!net.labels_a().empty()) {
        std::vector<std::string> la, lb;
        for (std::uint32_t u : sub.nodes.a) la.push_back(net.labels_a()[u]);
        for (std::uint32_t v : sub.nodes.b) lb.push_back(net.labels_b()[v]);
        doc["labels_a"] = la;
        doc["labels_b"] = lb;
    }
    return doc;
}

// ---------------------------------------------------------------- mine -----

struct MineArgs {
    std::string network;
    std::string pattern = "cdc";
    std::string algo = "grd";
    double epsilon = 0.0;
    std::string seeds_a_raw, seeds_b_raw;
    std::uint32_t snapshots = 8;
    std::string rank_denominator = "live";
    std::string ls_return = "best";
    std::uint32_t mds_cap = 256;
    std::uint32_t top_k = 1;
    std::uint32_t workers = 1;
    bool timings = true;
    // which flags the user actually typed, for coherence checks
    CLI::App* cmd = nullptr;
};

bool flag_given(const CLI::App* cmd, const std::string& name) {
    return cmd->count(name) > 0;
}

void check_mine_coherence(const MineArgs& a) {
    const bool seeded = a.pattern == "cdc-seeds" || a.pattern == "ocd-seed";
    const bool has_a = !a.seeds_a_raw.empty();
    const bool has_b = !a.seeds_b_raw.empty();
    if (seeded) {
        if (a.algo != "ls" && flag_given(a.cmd, "--algo"))
            throw UsageError("pattern " + a.pattern + " is mined with --algo ls");
        if (a.pattern == "cdc-seeds" && !(has_a && has_b))
            throw UsageError("pattern cdc-seeds needs --seeds-a and --seeds-b");
        if (a.pattern == "ocd-seed" && (has_a == has_b))
            throw UsageError("pattern ocd-seed needs seeds on exactly one side");
    } else {
        if (a.algo == "ls")
            throw UsageError("--algo ls needs a seeded pattern (cdc-seeds or ocd-seed)");
        if (has_a || has_b)
            throw UsageError("--seeds-a/--seeds-b only apply to seeded patterns");
    }
    const bool is_ls = seeded;
    const bool is_mds = !is_ls && a.algo == "mds";
    const bool is_frd = !is_ls && a.algo == "frd";
    const bool is_rank = !is_ls && (a.algo == "grd" || a.algo == "frd");
    if (flag_given(a.cmd, "--epsilon") && !is_frd)
        throw UsageError("--epsilon only applies to --algo frd");
    if (is_frd && a.epsilon <= -1.0) throw UsageError("--epsilon must be greater than -1");
    if (flag_given(a.cmd, "--rank-denominator") && !is_rank)
        throw UsageError("--rank-denominator only applies to --algo grd or frd");
    if (flag_given(a.cmd, "--mds-cap") && !is_mds)
        throw UsageError("--mds-cap only applies to --algo mds");
    if (flag_given(a.cmd, "--ls-return") && !is_ls)
        throw UsageError("--ls-return only applies to seeded patterns");
    if (flag_given(a.cmd, "--snapshots") && (is_mds || is_ls))
        throw UsageError("--snapshots only applies to peeling algorithms");
    if ((flag_given(a.cmd, "--top-k") || flag_given(a.cmd, "--workers")) && is_ls)
        throw UsageError("--top-k/--workers do not apply to seeded patterns");
    if (a.snapshots == 0) throw UsageError("--snapshots must be at least 1");
    if (a.top_k == 0) throw UsageError("--top-k must be at least 1");
    if (a.workers == 0) throw UsageError("--workers must be at least 1");
}

// mds runs per cross-edge component; refuse sizes the exact method cannot
// finish in reasonable time
void enforce_mds_cap(const cdc::TripleNetwork& net, std::uint32_t cap) {
    for (const auto& comp : cdc::bipartite_components(net).components) {
        const std::uint64_t total = comp.nodes.a.size() + comp.nodes.b.size();
        if (total > cap)
            throw UsageError("cross-edge component has " + std::to_string(total) +
                             " nodes, above --mds-cap " + std::to_string(cap) +
                             "; use a heuristic algorithm or raise the cap");
    }
}

int run_mine(const MineArgs& args) {
    check_mine_coherence(args);
    const bool seeded = args.pattern == "cdc-seeds" || args.pattern == "ocd-seed";

    const auto t_load = Clock::now();
    const cdc::TripleNetwork net = load_net(args.network);
    const double load_ms = ms_since(t_load);

    json params;
    std::vector<json> reports;
    double decompose_ms = 0.0;
    double mine_ms = 0.0;

    if (seeded) {
        cdc::NodeSetPair seeds;
        seeds.a = resolve_seeds(split_commas(args.seeds_a_raw), net.labels_a(), net.n_a(), "A");
        seeds.b = resolve_seeds(split_commas(args.seeds_b_raw), net.labels_b(), net.n_b(), "B");
        const auto t_mine = Clock::now();
        const cdc::LocalSearchResult run = cdc::local_search(net, seeds);
        mine_ms = ms_since(t_mine);
        if (pattern_flag_name(run.kind) != args.pattern)
            throw std::logic_error("seeded pattern mismatch");
        params["ls_return"] = args.ls_return;
        params["seeds_a"] = seeds.a;
        params["seeds_b"] = seeds.b;
        const cdc::ScoredSubgraph& pick =
            args.ls_return == "final" ? run.final_state : run.best_state;
        json doc = subgraph_json(net, pick);
        doc["algo"] = "ls";
        doc["passes"] = run.additions.size();
        doc["pattern"] = args.pattern;
        reports.push_back(std::move(doc));
    } else {
        cdc::MineOptions options;
        if (args.algo == "mds")
            options.algo = cdc::MineAlgo::Mds;
        else if (args.algo == "gnd")
            options.algo = cdc::MineAlgo::Gnd;
        else if (args.algo == "grd")
            options.algo = cdc::MineAlgo::Grd;
        else
            options.algo = cdc::MineAlgo::Frd;
        options.epsilon = args.epsilon;
        options.denominator = args.rank_denominator == "original"
                                  ? cdc::RankDenominator::Original
                                  : cdc::RankDenominator::Live;
        options.snapshots = args.snapshots;
        options.top_k = args.top_k;
        options.workers = args.workers;

        if (options.algo == cdc::MineAlgo::Mds) enforce_mds_cap(net, args.mds_cap);

        const auto t_decompose = Clock::now();
        const cdc::CandidateAnalysis analysis = cdc::cdc_candidates(net);
        decompose_ms = ms_since(t_decompose);
        std::cerr << "cdcmine: " << analysis.comps_a.size() << " A-components, "
                  << analysis.comps_b.size() << " B-components, " << analysis.pairs.size()
                  << " candidate pairs\n";

        const auto t_mine = Clock::now();
        const std::vector<cdc::PatternResult> results =
            args.pattern == "cdc" ? cdc::mine_cdc(net, options) : cdc::mine_ocd(net, options);
        mine_ms = ms_since(t_mine);

        // workers is an execution knob, not a result parameter: reports must
        // be byte-identical across worker counts, so it is not echoed
        params["snapshots"] = options.snapshots;
        params["top_k"] = options.top_k;
        if (options.algo == cdc::MineAlgo::Frd) params["epsilon"] = options.epsilon;
        if (options.algo == cdc::MineAlgo::Grd || options.algo == cdc::MineAlgo::Frd)
            params["rank_denominator"] = args.rank_denominator;
        if (options.algo == cdc::MineAlgo::Mds) params["mds_cap"] = args.mds_cap;
        for (const cdc::PatternResult& result : results) {
            json doc = subgraph_json(net, result.subgraph);
            doc["algo"] = args.algo;
            doc["passes"] = result.passes;
            doc["pattern"] = pattern_flag_name(result.kind);
            reports.push_back(std::move(doc));
        }
    }

    for (json& doc : reports) {
        doc["params"] = params;
        if (args.timings) {
            doc["timings_ms"] = {{"decompose", decompose_ms},
                                 {"load", load_ms},
                                 {"mine", mine_ms},
                                 {"total", load_ms + decompose_ms + mine_ms}};
        }
        std::cout << doc.dump() << "\n";
    }
    return 0;
}

// ----------------------------------------------------------------- gen -----

struct GenArgs {
    std::string kind = "random";
    cdc::GenSpec spec;
    std::string probs_raw;
    std::string out = "-";
};

int run_gen(GenArgs& args) {
    args.spec.kind = args.kind == "rmat" ? cdc::GenKind::RMat : cdc::GenKind::Random;
    if (!args.probs_raw.empty()) {
        const auto parts = split_commas(args.probs_raw);
        if (parts.size() != 4) throw UsageError("--rmat-probs needs four comma-separated values");
        for (std::size_t i = 0; i < 4; ++i) args.spec.rmat_probs[i] = std::stod(parts[i]);
    }
    const cdc::TripleNetwork net = cdc::generate(args.spec);
    std::ostringstream buffer;
    cdc::write_trinet(net, buffer);
    const std::string bytes = buffer.str();
    if (args.out == "-") {
        std::cout << bytes;
    } else {
        std::ofstream out(args.out, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write " + args.out);
        out << bytes;
    }
    std::cerr << "gen kind=" << args.kind << " na=" << args.spec.n_a << " nb=" << args.spec.n_b
              << " ma=" << args.spec.m_a << " mb=" << args.spec.m_b << " mc=" << args.spec.m_c
              << " seed=" << args.spec.seed;
    if (args.spec.kind == cdc::GenKind::RMat) {
        std::cerr << " probs=" << args.spec.rmat_probs[0] << "," << args.spec.rmat_probs[1] << ","
                  << args.spec.rmat_probs[2] << "," << args.spec.rmat_probs[3];
    }
    std::cerr << " bytes=" << bytes.size() << " checksum=" << hex64(fnv1a(bytes)) << "\n";
    return 0;
}

// --------------------------------------------------------------- bench -----

struct BenchEntry {
    std::string label;     // as given on the command line
    std::string algo;      // mds|gnd|grd|frd
    double epsilon = 0.0;  // frd only
};

BenchEntry parse_bench_algo(const std::string& text) {
    BenchEntry entry;
    entry.label = text;
    const auto colon = text.find(':');
    entry.algo = text.substr(0, colon);
    if (entry.algo != "mds" && entry.algo != "gnd" && entry.algo != "grd" && entry.algo != "frd")
        throw UsageError("unknown bench algorithm '" + text + "'");
    if (colon != std::string::npos) {
        if (entry.algo != "frd") throw UsageError("only frd takes an epsilon: '" + text + "'");
        entry.epsilon = std::stod(text.substr(colon + 1));
        if (entry.epsilon <= -1.0) throw UsageError("epsilon must be greater than -1");
    }
    return entry;
}

struct BenchArgs {
    std::vector<std::string> networks;
    std::vector<std::string> algos;
    std::uint32_t repeat = 1;
    std::string rank_denominator = "live";
    std::uint32_t mds_cap = 256;
};

// times the raw dense-subgraph search on the whole network, without the
// pattern post-processing, which is what the heuristics are compared on
int run_bench(const BenchArgs& args) {
    if (args.repeat == 0) throw UsageError("--repeat must be at least 1");
    std::vector<BenchEntry> entries;
    for (const std::string& text : args.algos) entries.push_back(parse_bench_algo(text));

    cdc::PeelOptions peel_options;
    peel_options.denominator = args.rank_denominator == "original"
                                   ? cdc::RankDenominator::Original
                                   : cdc::RankDenominator::Live;

    std::cout << "network,algo,params,seconds,density,passes\n";
    for (const std::string& path : args.networks) {
        const cdc::TripleNetwork net = load_net(path);
        for (const BenchEntry& entry : entries) {
            if (entry.algo == "mds") enforce_mds_cap(net, args.mds_cap);
            double best_seconds = 0.0;
            double density = 0.0;
            std::uint64_t passes = 0;
            for (std::uint32_t round = 0; round < args.repeat; ++round) {
                const auto start = Clock::now();
                if (entry.algo == "mds") {
                    const cdc::MdsResult run = cdc::mds_densest_bipartite(net);
                    density = run.best ? run.best->density : 0.0;
                    passes = run.stats.flow_calls;
                } else if (entry.algo == "frd") {
                    const cdc::PeelResult run =
                        cdc::rank_threshold_peel(net, entry.epsilon, peel_options);
                    density = run.best.density;
                    passes = run.passes;
                } else {
                    const cdc::PeelCriterion criterion = entry.algo == "gnd"
                                                            ? cdc::PeelCriterion::Degree
                                                            : cdc::PeelCriterion::Rank;
                    const cdc::PeelResult run = cdc::greedy_peel(net, criterion, peel_options);
                    density = run.best.density;
                    passes = run.steps.size();
                }
                const double seconds = ms_since(start) / 1000.0;
                if (round == 0 || seconds < best_seconds) best_seconds = seconds;
            }
            std::cout << path << "," << entry.algo << ","
                      << (entry.algo == "frd" ? "eps=" + std::to_string(entry.epsilon) : "")
                      << "," << best_seconds << "," << density << "," << passes << "\n";
        }
    }
    return 0;
}

// -------------------------------------------------------------- oracle -----

struct OracleArgs {
    std::string network;
    std::string pattern = "dbp";
    std::string seeds_a_raw, seeds_b_raw;
    std::uint32_t max_nodes = cdc::kOracleDefaultMaxNodes;
    bool acknowledged = false;
};

int run_oracle(const OracleArgs& args) {
    if (!args.acknowledged)
        throw UsageError("oracle enumerates every subset pair; pass "
                         "--i-know-this-is-exponential to confirm");
    const cdc::TripleNetwork net = load_net(args.network);
    std::optional<cdc::ScoredSubgraph> best;
    if (args.pattern == "dbp") {
        best = cdc::brute_force_densest_bipartite(net, args.max_nodes);
    } else if (args.pattern == "cdc") {
        best = cdc::brute_force_cdc(net, args.max_nodes);
    } else if (args.pattern == "ocd") {
        best = cdc::brute_force_ocd(net, args.max_nodes);
    } else {
        const auto seeds_a =
            resolve_seeds(split_commas(args.seeds_a_raw), net.labels_a(), net.n_a(), "A");
        const auto seeds_b =
            resolve_seeds(split_commas(args.seeds_b_raw), net.labels_b(), net.n_b(), "B");
        if (seeds_a.empty() && seeds_b.empty())
            throw UsageError("pattern seeded needs --seeds-a or --seeds-b");
        best = cdc::brute_force_seeded(net, seeds_a, seeds_b, args.max_nodes);
    }
    if (!best) {
        std::cerr << "cdcmine: no candidate\n";
        return 2;
    }
    json doc = subgraph_json(net, *best);
    doc["algo"] = "oracle";
    doc["pattern"] = args.pattern;
    std::cout << doc.dump() << "\n";
    return 0;
}

// -------------------------------------------------------------- verify -----

struct VerifyArgs {
    std::string network;
    std::string report = "-";
};

// recomputes density and connectivity for every reported node-set pair; any
// disagreement with the report is an error
int run_verify(const VerifyArgs& args) {
    const cdc::TripleNetwork net = load_net(args.network);
    std::ifstream file;
    std::istream* in = &std::cin;
    if (args.report != "-") {
        file.open(args.report);
        if (!file) throw std::runtime_error("cannot open " + args.report);
        in = &file;
    }
    std::string line;
    std::size_t line_no = 0;
    bool all_ok = true;
    while (std::getline(*in, line)) {
        ++line_no;
        if (line.empty()) continue;
        const json doc = json::parse(line);
        cdc::NodeSetPair nodes;
        nodes.a = doc.at("nodes_a").get<std::vector<std::uint32_t>>();
        nodes.b = doc.at("nodes_b").get<std::vector<std::uint32_t>>();
        const cdc::ScoredSubgraph actual = cdc::score_subgraph(net, nodes);
        const bool density_ok = actual.density == doc.at("density").get<double>();
        const bool connectivity_ok =
            actual.connected_a == doc.at("connected_a").get<bool>() &&
            actual.connected_b == doc.at("connected_b").get<bool>();
        json verdict;
        verdict["connectivity_ok"] = connectivity_ok;
        verdict["density_ok"] = density_ok;
        verdict["line"] = line_no;
        verdict["ok"] = density_ok && connectivity_ok;
        std::cout << verdict.dump() << "\n";
        all_ok = all_ok && density_ok && connectivity_ok;
    }
    return all_ok ? 0 : 1;
}

// --------------------------------------------------------------- stats -----

int run_stats(const std::string& network) {
    cdc::LoadStats load_stats;
    const cdc::TripleNetwork net = load_net(network, &load_stats);
    const cdc::CandidateAnalysis analysis = cdc::cdc_candidates(net);
    json doc;
    doc["candidate_pairs"] = analysis.pairs.size();
    doc["components_a"] = analysis.comps_a.size();
    doc["components_b"] = analysis.comps_b.size();
    doc["components_cross"] = cdc::bipartite_components(net).components.size();
    doc["duplicate_edges_dropped"] = load_stats.duplicate_edges_dropped;
    doc["m_a"] = net.m_a();
    doc["m_b"] = net.m_b();
    doc["m_c"] = net.m_c();
    doc["n_a"] = net.n_a();
    doc["n_b"] = net.n_b();
    doc["self_loops_dropped"] = load_stats.self_loops_dropped;
    std::cout << doc.dump() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"mines dense connected cross-linked subgraphs from triple networks"};
    app.require_subcommand(1);

    MineArgs mine_args;
    CLI::App* mine = app.add_subcommand("mine", "mine a pattern from a trinet file");
    mine->add_option("network", mine_args.network, "trinet file, or - for stdin")->required();
    mine->add_option("--pattern", mine_args.pattern, "pattern to mine")
        ->check(CLI::IsMember({"cdc", "ocd", "cdc-seeds", "ocd-seed"}))
        ->capture_default_str();
    mine->add_option("--algo", mine_args.algo, "dense-subgraph algorithm")
        ->check(CLI::IsMember({"mds", "gnd", "grd", "frd", "ls"}))
        ->capture_default_str();
    mine->add_option("--epsilon", mine_args.epsilon, "frd rank-threshold slack")
        ->capture_default_str();
    mine->add_option("--seeds-a", mine_args.seeds_a_raw, "comma-separated A seeds (ids or labels)");
    mine->add_option("--seeds-b", mine_args.seeds_b_raw, "comma-separated B seeds (ids or labels)");
    mine->add_option("--snapshots", mine_args.snapshots, "peeling trajectory states examined")
        ->capture_default_str();
    mine->add_option("--rank-denominator", mine_args.rank_denominator,
                     "side sizes used by rank comparisons")
        ->check(CLI::IsMember({"original", "live"}))
        ->capture_default_str();
    mine->add_option("--ls-return", mine_args.ls_return, "which local-search state to report")
        ->check(CLI::IsMember({"final", "best"}))
        ->capture_default_str();
    mine->add_option("--mds-cap", mine_args.mds_cap,
                     "largest cross-edge component the exact method accepts")
        ->capture_default_str();
    mine->add_option("--top-k", mine_args.top_k, "distinct results to report")
        ->capture_default_str();
    mine->add_option("--workers", mine_args.workers, "threads over candidate pairs")
        ->capture_default_str();
    mine->add_flag("--timings,!--no-timings", mine_args.timings,
                   "include wall-clock phases in reports");
    mine_args.cmd = mine;

    GenArgs gen_args;
    CLI::App* gen = app.add_subcommand("gen", "generate a synthetic trinet file");
    gen->add_option("--kind", gen_args.kind, "edge distribution for the side graphs")
        ->check(CLI::IsMember({"random", "rmat"}))
        ->capture_default_str();
    gen->add_option("--na", gen_args.spec.n_a, "A-side node count")->required();
    gen->add_option("--nb", gen_args.spec.n_b, "B-side node count")->required();
    gen->add_option("--ma", gen_args.spec.m_a, "A-side edge count")->required();
    gen->add_option("--mb", gen_args.spec.m_b, "B-side edge count")->required();
    gen->add_option("--mc", gen_args.spec.m_c, "cross edge count")->required();
    gen->add_option("--seed", gen_args.spec.seed, "generator seed")->capture_default_str();
    gen->add_option("--rmat-probs", gen_args.probs_raw,
                    "four comma-separated quadrant probabilities");
    gen->add_option("--out", gen_args.out, "output file, - for stdout")->capture_default_str();

    BenchArgs bench_args;
    CLI::App* bench = app.add_subcommand("bench", "time dense-subgraph algorithms, CSV output");
    bench->add_option("networks", bench_args.networks, "trinet files")->required();
    bench->add_option("--algo", bench_args.algos, "algorithms: mds|gnd|grd|frd[:epsilon]")
        ->required();
    bench->add_option("--repeat", bench_args.repeat, "runs per cell, fastest wins")
        ->capture_default_str();
    bench->add_option("--rank-denominator", bench_args.rank_denominator,
                      "side sizes used by rank comparisons")
        ->check(CLI::IsMember({"original", "live"}))
        ->capture_default_str();
    bench->add_option("--mds-cap", bench_args.mds_cap,
                      "largest cross-edge component the exact method accepts")
        ->capture_default_str();

    OracleArgs oracle_args;
    CLI::App* oracle = app.add_subcommand("oracle", "exhaustive reference search (tiny inputs)");
    oracle->add_option("network", oracle_args.network, "trinet file, or - for stdin")->required();
    oracle->add_option("--pattern", oracle_args.pattern, "pattern to search")
        ->check(CLI::IsMember({"dbp", "cdc", "ocd", "seeded"}))
        ->capture_default_str();
    oracle->add_option("--seeds-a", oracle_args.seeds_a_raw, "comma-separated A seeds");
    oracle->add_option("--seeds-b", oracle_args.seeds_b_raw, "comma-separated B seeds");
    oracle->add_option("--max-nodes", oracle_args.max_nodes, "refuse networks above this size")
        ->capture_default_str();
    oracle->add_flag("--i-know-this-is-exponential", oracle_args.acknowledged,
                     "confirm the exponential cost");

    VerifyArgs verify_args;
    CLI::App* verify = app.add_subcommand("verify", "recheck mine reports against the network");
    verify->add_option("network", verify_args.network, "trinet file")->required();
    verify->add_option("--report", verify_args.report, "report lines, - for stdin")
        ->capture_default_str();

    std::string stats_network;
    CLI::App* stats = app.add_subcommand("stats", "summarize a trinet file");
    stats->add_option("network", stats_network, "trinet file, or - for stdin")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (mine->parsed()) return run_mine(mine_args);
        if (gen->parsed()) return run_gen(gen_args);
        if (bench->parsed()) return run_bench(bench_args);
        if (oracle->parsed()) return run_oracle(oracle_args);
        if (verify->parsed()) return run_verify(verify_args);
        if (stats->parsed()) return run_stats(stats_network);
    } catch (const cdc::NoCandidateError& e) {
        std::cerr << "cdcmine: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "cdcmine: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
