// chigap: chromatic-gap toolkit for connected graphs.
//
// Exit codes: 0 success, 1 property or theorem violation, 2 usage or input
// error. Diagnostics go to stderr; nothing lands on stdout when a command
// fails.

#include "chigap/coloring.hpp"
#include "chigap/enumerate.hpp"
#include "chigap/extremal.hpp"
#include "chigap/graph.hpp"
#include "chigap/io.hpp"
#include "chigap/random.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace chigap;

std::optional<GraphFormat> parse_format(const std::string& name) {
    if (name == "graph6") return GraphFormat::graph6;
    if (name == "edgelist") return GraphFormat::edge_list;
    return std::nullopt;  // auto
}

std::vector<Graph> load_graphs(const std::string& path, const std::string& format) {
    auto fmt = parse_format(format);
    if (path.empty() || path == "-") return read_graphs(std::cin, fmt);
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return read_graphs(in, fmt);
}

int run_chi(const std::string& path, const std::string& format, bool witness) {
    std::ostringstream out;
    for (const Graph& g : load_graphs(path, format)) {
        ChromaticResult res = chromatic_number(g);
        out << "chi=" << res.chi;
        if (witness)
            for (VertexId v = 0; v < g.vertex_count(); ++v)
                out << ' ' << v << ':' << res.witness.color[v];
        out << '\n';
    }
    std::cout << out.str();
    return 0;
}

int run_gap(const std::string& path, const std::string& format) {
    std::ostringstream out;
    for (const Graph& g : load_graphs(path, format)) {
        GapReport r = gap(g);
        out << "n=" << r.n_vertices << " m=" << r.n_edges << " chi=" << r.chi
            << " gap=" << r.gap << '\n';
    }
    std::cout << out.str();
    return 0;
}

int run_classify(const std::string& path, const std::string& format) {
    std::ostringstream out;
    for (const Graph& g : load_graphs(path, format)) {
        Classification c = classify(g);
        out << to_string(c.kind);
        if (c.kind == ExtremalKind::type_a) out << " m=" << c.core_order;
        if (c.kind == ExtremalKind::type_b) out << " len=" << c.core_order;
        out << " core=";
        for (std::size_t i = 0; i < c.core_vertices.size(); ++i) {
            if (i > 0) out << ',';
            out << c.core_vertices[i];
        }
        out << '\n';
    }
    std::cout << out.str();
    return 0;
}

int run_verify(int max_n, const std::string& mode_name, int jobs) {
    const EnumMode mode = mode_name == "unlabeled" ? EnumMode::unlabeled : EnumMode::labeled;
    std::vector<EnumerationSummary> rows = check_theorem(max_n, mode, jobs);
    std::ostringstream out;
    out << format_summary_table(rows);
    bool violated = false;
    for (const auto& row : rows)
        for (const auto& g6 : row.counterexamples) {
            out << g6 << '\n';
            violated = true;
        }
    std::cout << out.str();
    return violated ? 1 : 0;
}

int run_check_lemmas(int trials, std::uint64_t seed) {
    std::ostringstream out;
    bool all_ok = true;

    const bool chi_ok = decorated_chi_check(trials, seed);
    out << "decorated-chi: " << (chi_ok ? "pass" : "FAIL") << " (" << 3 * trials
        << " graphs)\n";
    all_ok = all_ok && chi_ok;

    SplitMix64 rng(seed ^ 0x70656e64616e7473ULL);
    bool closure_ok = true;
    for (int i = 0; i < trials; ++i) {
        Graph g;
        if (rng.next() & 1) {
            g = random_decorated(CoreKind::complete, static_cast<int>(rng.next_in(1, 6)), 16, rng);
        } else {
            g = random_decorated(CoreKind::cycle, 3 + 2 * static_cast<int>(rng.next_below(5)), 16,
                                 rng);
        }
        if (!pendant_closure_check(g, 1, rng.next())) {
            closure_ok = false;
            break;
        }
    }
    out << "pendant-closure: " << (closure_ok ? "pass" : "FAIL") << " (" << trials
        << " attachments)\n";
    all_ok = all_ok && closure_ok;

    bool big_ok = true;
    long long extremal_seen = 0;
    for (int n = 2; n <= 6 && big_ok; ++n) {
        enumerate_connected(n, EnumMode::labeled, [&](const Graph& g) {
            if (!big_ok || gap(g).gap != 0) return;
            ++extremal_seen;
            if (!lemma_big_check(g)) big_ok = false;
        });
    }
    out << "lemma-big: " << (big_ok ? "pass" : "FAIL") << " (" << extremal_seen
        << " extremal graphs, n <= 6)\n";
    all_ok = all_ok && big_ok;

    std::cout << out.str();
    return all_ok ? 0 : 1;
}

int run_gen(const std::string& kind_name, int core, const std::string& trees_spec, int count,
            std::uint64_t seed) {
    CoreKind kind;
    if (kind_name == "typeA") {
        if (core < 1) throw std::runtime_error("typeA core must be at least 1");
        kind = CoreKind::complete;
    } else if (kind_name == "typeB") {
        if (core < 3 || core % 2 == 0)
            throw std::runtime_error("typeB core must be an odd cycle length >= 3");
        kind = CoreKind::cycle;
    } else {
        throw std::runtime_error("--kind must be typeA or typeB");
    }

    const auto colon = trees_spec.find(':');
    if (colon == std::string::npos)
        throw std::runtime_error("--trees expects COUNT:MAXSIZE, e.g. 3:4");
    int tree_count = 0, tree_max = 0;
    try {
        tree_count = std::stoi(trees_spec.substr(0, colon));
        tree_max = std::stoi(trees_spec.substr(colon + 1));
    } catch (const std::exception&) {
        throw std::runtime_error("--trees expects COUNT:MAXSIZE, e.g. 3:4");
    }
    if (tree_count < 0 || (tree_count > 0 && tree_max < 1))
        throw std::runtime_error("--trees expects COUNT >= 0 and MAXSIZE >= 1");

    SplitMix64 rng(seed);
    std::ostringstream out;
    for (int i = 0; i < count; ++i) {
        std::vector<TreeAttachment> attachments;
        for (int t = 0; t < tree_count; ++t) {
            TreeAttachment att;
            att.anchor = static_cast<VertexId>(rng.next_below(core));
            const int size = 1 + static_cast<int>(rng.next_below(tree_max));
            att.parents.assign(size, -1);
            for (int j = 1; j < size; ++j)
                att.parents[j] = static_cast<int>(rng.next_below(j));
            attachments.push_back(std::move(att));
        }
        out << to_graph6(build_decorated(kind, core, attachments)) << '\n';
    }
    std::cout << out.str();
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"chromatic-gap toolkit: exact coloring, the connected-graph edge bound, and "
                 "structural recognition of the graphs attaining it"};
    app.require_subcommand(1);

    std::string input, format = "auto";
    bool witness = false;

    auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("file", input, "input file, '-' or absent for stdin");
        cmd->add_option("--format", format, "input format (default: inferred)")
            ->check(CLI::IsMember({"auto", "graph6", "edgelist"}));
    };

    CLI::App* chi_cmd = app.add_subcommand("chi", "exact chromatic number per input graph");
    add_input(chi_cmd);
    chi_cmd->add_flag("--witness", witness, "also print a proper coloring as v:color pairs");

    CLI::App* gap_cmd =
        app.add_subcommand("gap", "edge-bound slack |E| - (chi(chi-1)/2 + |V| - chi)");
    add_input(gap_cmd);

    CLI::App* classify_cmd =
        app.add_subcommand("classify", "structural type A / type B / Neither recognition");
    add_input(classify_cmd);

    int max_n = 0, jobs = 0;
    std::string mode = "labeled";
    CLI::App* verify_cmd = app.add_subcommand(
        "verify", "sweep all connected graphs up to --max-n and report the equivalence table");
    verify_cmd->add_option("--max-n", max_n, "largest vertex count to sweep")->required();
    verify_cmd->add_option("--mode", mode, "labeled (default) or unlabeled")
        ->check(CLI::IsMember({"labeled", "unlabeled"}));
    verify_cmd->add_option("--jobs", jobs, "worker threads (default: all cores)");

    int trials = 200;
    std::uint64_t seed = 0;
    CLI::App* lemmas_cmd = app.add_subcommand(
        "check-lemmas", "randomized decorated-graph, pendant-closure and degree-condition checks");
    lemmas_cmd->add_option("--trials", trials, "trials per check (default 200)");
    lemmas_cmd->add_option("--seed", seed, "PRNG seed (default 0)");

    std::string gen_kind = "typeA", trees_spec = "3:4";
    int gen_core = 1, gen_count = 1;
    CLI::App* gen_cmd =
        app.add_subcommand("gen", "emit random decorated graphs as graph6 lines");
    gen_cmd->add_option("--kind", gen_kind, "typeA (complete core) or typeB (odd cycle core)")
        ->required();
    gen_cmd->add_option("--core", gen_core, "core order (m for typeA, cycle length for typeB)")
        ->required();
    gen_cmd->add_option("--trees", trees_spec, "attached trees as COUNT:MAXSIZE (default 3:4)");
    gen_cmd->add_option("--count", gen_count, "number of graphs to emit (default 1)");
    gen_cmd->add_option("--seed", seed, "PRNG seed (default 0)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (*chi_cmd) return run_chi(input, format, witness);
        if (*gap_cmd) return run_gap(input, format);
        if (*classify_cmd) return run_classify(input, format);
        if (*verify_cmd) return run_verify(max_n, mode, jobs);
        if (*lemmas_cmd) return run_check_lemmas(trials, seed);
        if (*gen_cmd) return run_gen(gen_kind, gen_core, trees_spec, gen_count, seed);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
