#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "wdeg/audit.hpp"
#include "wdeg/constructions.hpp"
#include "wdeg/corpus.hpp"
#include "wdeg/engine.hpp"
#include "wdeg/solver.hpp"

namespace wdeg::cli {

namespace {

/// Carries an exit code out of a command body.
struct Failure {
    int code;
    std::string message;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Failure{kUsageError, "cannot read " + path};
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) throw Failure{kUsageError, "cannot write " + path};
}

Graph load_graph(const std::string& path) {
    try {
        return parse_graph(read_file(path));
    } catch (const ParseError& e) {
        throw Failure{kUsageError, path + ": " + e.what()};
    }
}

Trace load_certificate(const std::string& path) {
    try {
        return parse_certificate(read_file(path));
    } catch (const ParseError& e) {
        throw Failure{kUsageError, path + ": " + e.what()};
    }
}

struct GenArgs {
    int odd = -1;
    int even = -1;
    int degree = -1;
    std::string out;
};

int cmd_gen(const GenArgs& a, std::ostream& out) {
    DegreeConstruction dc;
    std::string prefix;
    try {
        if (a.odd >= 0) {
            const auto oc = build_odd(a.odd);
            dc.degree = static_cast<std::size_t>(2 * a.odd + 1);
            dc.lg = oc.lg;
            dc.trace = odd_strategy(oc).trace;
            dc.claimed_wd = oc.k + 1;
            prefix = "odd-k" + std::to_string(a.odd);
        } else if (a.even >= 0) {
            if (a.even % 2 != 0) throw std::invalid_argument("--even needs an even degree");
            dc = build_for_degree(static_cast<std::size_t>(a.even));
            prefix = "even-d" + std::to_string(a.even);
        } else {
            if (a.degree < 0) throw std::invalid_argument("degree must be positive");
            dc = build_for_degree(static_cast<std::size_t>(a.degree));
            prefix = "degree-d" + std::to_string(a.degree);
        }
    } catch (const std::invalid_argument& e) {
        throw Failure{kUsageError, e.what()};
    }
    if (!a.out.empty()) prefix = a.out;

    write_file(prefix + ".graph", emit_graph(dc.lg.graph));
    write_file(prefix + ".labels", emit_labels(dc.lg));
    write_file(prefix + ".cert.json", emit_certificate(dc.trace));
    out << "n=" << dc.lg.graph.order() << " d=" << dc.degree << " wd=" << dc.claimed_wd << '\n';
    return kOk;
}

struct SolveArgs {
    std::string graph;
    bool exact = false;
    bool degeneracy = false;
    bool chromatic = false;
    int budget = -1;
    bool deterministic = false;
    bool dominance = false;
    bool stats = false;
    std::string witness;
};

void print_stats(std::ostream& out, const SolveStats& s) {
    out << "nodes=" << s.nodes << " memo_hits=" << s.memo_hits << " elapsed=" << s.elapsed_seconds << "s\n";
}

int cmd_solve(const SolveArgs& a, std::ostream& out) {
    const Graph g = load_graph(a.graph);
    // The search is single-threaded, so every run is already deterministic;
    // --deterministic is accepted for scripts that ask for it.
    SearchOptions options;
    options.dominance_pruning = a.dominance;
    try {
        if (a.degeneracy) {
            const auto r = degeneracy(g);
            out << "nd=" << r.value << '\n';
            if (!a.witness.empty()) write_file(a.witness, emit_certificate(del_trace(g.order(), static_cast<Budget>(r.value), r.order)));
            return kOk;
        }
        if (a.chromatic) {
            out << "chi=" << chromatic_number(g) << '\n';
            return kOk;
        }
        if (a.budget >= 0) {
            SolveStats stats;
            auto trace = is_weakly_f_degenerate(g, constant_weights(g.order(), a.budget), options, &stats);
            if (a.stats) print_stats(out, stats);
            if (!trace) {
                out << "infeasible budget=" << a.budget << '\n';
                return kDomainFailure;
            }
            trace->initial = static_cast<Budget>(a.budget);
            out << "feasible budget=" << a.budget << '\n';
            if (!a.witness.empty()) write_file(a.witness, emit_certificate(*trace));
            return kOk;
        }
        const auto r = weak_degeneracy(g, options);
        out << "wd=" << r.value << '\n';
        if (a.stats) print_stats(out, r.stats);
        if (!a.witness.empty() && r.witness) write_file(a.witness, emit_certificate(*r.witness));
        return kOk;
    } catch (const CapacityError& e) {
        throw Failure{kUsageError, e.what()};
    }
}

int cmd_verify(const std::string& graph_path, const std::string& cert_path, std::ostream& out) {
    const Graph g = load_graph(graph_path);
    const Trace t = load_certificate(cert_path);
    const auto report = verify_trace(g, t);
    if (report.ok) {
        out << "ok steps=" << t.steps.size() << '\n';
        return kOk;
    }
    out << "fail step=" << *report.failed_at << " reason=" << to_string(*report.reason) << '\n';
    return kDomainFailure;
}

int cmd_audit(const std::string& graph_path, const std::string& cert_path, bool json, std::ostream& out) {
    const Graph g = load_graph(graph_path);
    const Trace t = load_certificate(cert_path);
    AuditReport report;
    try {
        report = audit_trace(g, t);
    } catch (const AuditError& e) {
        throw Failure{kDomainFailure, e.what()};
    }
    out << (json ? emit_audit_json(report) : emit_audit_table(report));
    return report.ok() ? kOk : kDomainFailure;
}

int cmd_oracle(const std::string& graph_path, std::ostream& out) {
    const Graph g = load_graph(graph_path);
    try {
        out << "wd=" << brute_force_weak_degeneracy(g) << '\n';
    } catch (const CapacityError& e) {
        throw Failure{kUsageError, e.what()};
    }
    return kOk;
}

struct CorpusArgs {
    std::string kind = "regular";
    std::size_t n = 6;
    std::size_t count = 100;
    std::size_t min_n = 7;
    std::size_t max_n = 8;
    std::uint64_t seed = 1;
    std::string out;
};

int cmd_corpus(const CorpusArgs& a, std::ostream& out) {
    std::vector<corpus::Named> graphs;
    try {
        if (a.kind == "regular") {
            graphs = corpus::regular_graphs();
        } else if (a.kind == "connected") {
            const auto all = corpus::connected_graphs(a.n);
            for (std::size_t i = 0; i < all.size(); ++i) graphs.push_back({"conn" + std::to_string(a.n) + "-" + std::to_string(i), all[i]});
        } else if (a.kind == "random") {
            const auto all = corpus::random_graphs(a.count, a.min_n, a.max_n, a.seed);
            for (std::size_t i = 0; i < all.size(); ++i) graphs.push_back({"rand-" + std::to_string(a.seed) + "-" + std::to_string(i), all[i]});
        } else {
            throw std::invalid_argument("unknown corpus kind '" + a.kind + "'");
        }
    } catch (const std::invalid_argument& e) {
        throw Failure{kUsageError, e.what()};
    }
    std::error_code ec;
    std::filesystem::create_directories(a.out, ec);
    if (ec) throw Failure{kUsageError, "cannot create " + a.out};
    for (const auto& [name, g] : graphs) {
        const auto path = (std::filesystem::path(a.out) / (name + ".graph")).string();
        write_file(path, "c " + name + "\n" + emit_graph(g));
        out << path << " n=" << g.order() << " m=" << g.edge_count() << '\n';
    }
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Weak degeneracy toolkit: constructions, exact solver, certificate checks and audits"};
    app.require_subcommand(1);

    GenArgs gen_args;
    auto* gen = app.add_subcommand("gen", "Generate a regular construction with its deletion certificate");
    auto* odd_opt = gen->add_option("--odd", gen_args.odd, "(2k+1)-regular construction for this k");
    auto* even_opt = gen->add_option("--even", gen_args.even, "even degree d >= 4 (lifted construction)");
    auto* deg_opt = gen->add_option("--for-degree", gen_args.degree, "any degree d >= 3");
    odd_opt->excludes(even_opt)->excludes(deg_opt);
    even_opt->excludes(deg_opt);
    gen->add_option("--out", gen_args.out, "output prefix for .graph, .labels and .cert.json");

    SolveArgs solve_args;
    auto* solve = app.add_subcommand("solve", "Compute a parameter of a graph");
    solve->add_option("graph", solve_args.graph, "graph file")->required();
    auto* exact = solve->add_flag("--exact", solve_args.exact, "weak degeneracy (default)");
    auto* nd = solve->add_flag("--degeneracy", solve_args.degeneracy, "classical degeneracy");
    auto* chi = solve->add_flag("--chromatic", solve_args.chromatic, "chromatic number");
    auto* budget = solve->add_option("--budget", solve_args.budget, "test weak k-degeneracy for this constant k");
    exact->excludes(nd)->excludes(chi)->excludes(budget);
    nd->excludes(chi)->excludes(budget);
    chi->excludes(budget);
    solve->add_flag("--deterministic", solve_args.deterministic, "fixed branching order (always on)");
    solve->add_flag("--dominance", solve_args.dominance, "enable dominance pruning");
    solve->add_flag("--stats", solve_args.stats, "print search statistics");
    solve->add_option("--witness", solve_args.witness, "write the witness certificate here");

    std::string graph_path;
    std::string cert_path;
    auto* verify = app.add_subcommand("verify", "Check a deletion certificate");
    verify->add_option("graph", graph_path, "graph file")->required();
    verify->add_option("certificate", cert_path, "certificate file")->required();

    bool json = false;
    auto* audit = app.add_subcommand("audit", "Print the per-step sum and save bookkeeping of a certificate");
    audit->add_option("graph", graph_path, "graph file")->required();
    audit->add_option("certificate", cert_path, "certificate file")->required();
    audit->add_flag("--json", json, "structured output");

    auto* oracle = app.add_subcommand("oracle", "Brute-force weak degeneracy (at most 8 vertices)");
    oracle->add_option("graph", graph_path, "graph file")->required();

    CorpusArgs corpus_args;
    auto* corpus_cmd = app.add_subcommand("corpus", "Write a test corpus of graph files");
    corpus_cmd->add_option("--kind", corpus_args.kind, "regular | connected | random")
        ->check(CLI::IsMember({"regular", "connected", "random"}));
    corpus_cmd->add_option("--n", corpus_args.n, "vertex count for --kind connected");
    corpus_cmd->add_option("--count", corpus_args.count, "number of random graphs");
    corpus_cmd->add_option("--min-n", corpus_args.min_n, "smallest random graph");
    corpus_cmd->add_option("--max-n", corpus_args.max_n, "largest random graph");
    corpus_cmd->add_option("--seed", corpus_args.seed, "random seed");
    corpus_cmd->add_option("--out", corpus_args.out, "output directory")->required();

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsageError;
    }

    try {
        if (*gen) {
            if (gen_args.odd < 0 && gen_args.even < 0 && gen_args.degree < 0) {
                throw Failure{kUsageError, "gen needs one of --odd, --even, --for-degree"};
            }
            return cmd_gen(gen_args, out);
        }
        if (*solve) return cmd_solve(solve_args, out);
        if (*verify) return cmd_verify(graph_path, cert_path, out);
        if (*audit) return cmd_audit(graph_path, cert_path, json, out);
        if (*oracle) return cmd_oracle(graph_path, out);
        if (*corpus_cmd) return cmd_corpus(corpus_args, out);
    } catch (const Failure& f) {
        err << "error: " << f.message << '\n';
        return f.code;
    }
    return kUsageError;
}

}  // namespace wdeg::cli
