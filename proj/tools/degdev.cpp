#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "degdev/ascent.hpp"
#include "degdev/chemical.hpp"
#include "degdev/enumeration.hpp"
#include "degdev/families.hpp"
#include "degdev/graph.hpp"
#include "degdev/io.hpp"
#include "degdev/measures.hpp"
#include "degdev/rational.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;

degdev::Graph load_graph(const std::string& path) {
    if (path == "-") {
        std::stringstream buffer;
        buffer << std::cin.rdbuf();
        return degdev::read_graph(buffer);
    }
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input file " + path);
    return degdev::read_graph(in);
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw std::invalid_argument("cannot open output file " + path);
    out << content;
}

void print_failure(const degdev::VerificationFailure& f) {
    std::cerr << "FAIL [" << f.context << "] " << f.details << "\n";
    std::cerr << "# witness graph:\n";
    degdev::write_edge_list(std::cerr, f.witness);
}

int run_measure(const std::string& input) {
    degdev::Graph g = load_graph(input);
    const int n = g.vertex_count();
    const long long ns = degdev::scaled_deviation(g);
    degdev::Rational s(ns, n);
    std::cout << "n = " << n << "\n";
    std::cout << "m = " << g.edge_count() << "\n";
    std::cout << "s = " << degdev::to_fraction_string(s) << " (" << degdev::to_decimal_string(s)
              << ")\n";
    std::cout << "n*s = " << ns << "\n";
    std::cout << "irr = " << degdev::albertson_irregularity(g) << "\n";
    std::cout << "irr_t = " << degdev::total_irregularity(g) << "\n";
    if (degdev::is_connected(g) && g.edge_count() >= 1) {
        auto r = degdev::nikiforov_bounds(g);
        std::cout << "mu = " << r.mu << "\n";
        std::cout << "nikiforov: " << r.lower << " <= " << r.gap << " <= " << r.upper
                  << " holds = " << (r.holds ? "true" : "false") << "\n";
    } else {
        std::cout << "mu = n/a (disconnected or empty)\n";
    }
    return kExitOk;
}

int run_family(const std::string& name, int n, int k, const std::string& attachment) {
    degdev::Graph g;
    degdev::Rational s;
    if (name == "cs") {
        g = degdev::complete_split(n, k);
        s = degdev::s_complete_split(n, k);
    } else if (name == "s1") {
        auto pattern = attachment == "concentrated" ? degdev::AttachmentPattern::concentrated()
                                                    : degdev::AttachmentPattern::balanced();
        g = degdev::pendant_split(n, k, pattern);
        s = attachment == "concentrated" ? degdev::Rational(degdev::scaled_deviation(g), n)
                                         : degdev::s_pendant_split(n, k);
    } else {
        throw CLI::ValidationError("family must be cs or s1");
    }
    if (degdev::Rational(degdev::scaled_deviation(g), n) != s)
        throw std::runtime_error("closed form does not match the constructed graph");
    degdev::write_edge_list(std::cout, g);
    std::cout << "# s = " << degdev::to_fraction_string(s) << " (closed form), verified\n";
    return kExitOk;
}

int run_ascend(const std::string& input, const std::string& trace_path) {
    degdev::Graph g = load_graph(input);
    degdev::AscentTrace trace = degdev::ascend(g);
    if (!trace_path.empty()) write_file(trace_path, degdev::trace_csv(trace));
    const int n = g.vertex_count();
    std::cout << "steps = " << trace.steps.size() << "\n";
    switch (trace.family) {
        case degdev::TerminalFamily::complete_split:
            std::cout << "terminal = CS(" << n << "," << trace.family_k << ")\n";
            break;
        case degdev::TerminalFamily::pendant_split:
            std::cout << "terminal = S1(" << n << "," << trace.family_k << ")\n";
            break;
        case degdev::TerminalFamily::unchanged:
            std::cout << "terminal = unchanged (complete graph)\n";
            break;
    }
    degdev::Rational s(degdev::scaled_deviation(trace.terminal), n);
    std::cout << "s = " << degdev::to_fraction_string(s) << " (" << degdev::to_decimal_string(s)
              << ")\n";
    return kExitOk;
}

int run_verify_conjecture(int n, bool extended, const std::string& out_path,
                          const std::string& checkpoint, int threads, long long expect_max) {
    if (n < 3 || n > 9) throw CLI::ValidationError("--n must be in 3..9");
    if (n >= 8 && !extended)
        throw CLI::ValidationError("n >= 8 is a long run; pass --extended to confirm");
    auto result = degdev::verify_conjecture(n, threads, checkpoint);
    if (expect_max >= 0 && result.report.max_scaled_deviation != expect_max) {
        result.failure = degdev::VerificationFailure{
            "conjecture", result.report.witnesses_up_to_iso.empty()
                              ? degdev::Graph::edgeless(n)
                              : result.report.witnesses_up_to_iso.front(),
            "max n*s = " + std::to_string(result.report.max_scaled_deviation) +
                ", injected expectation " + std::to_string(expect_max)};
        result.report.conjecture_holds = false;
    }
    std::string csv = degdev::conjecture_report_csv({result.report});
    if (!out_path.empty()) write_file(out_path, csv);
    else std::cout << csv;
    if (result.failure) {
        print_failure(*result.failure);
        return kExitCounterexample;
    }
    std::cout << "PASS: conjecture holds for n = " << n << "\n";
    return kExitOk;
}

int run_verify_ascent(int n, int threads) {
    if (n < 3 || n > 7) throw CLI::ValidationError("--n must be in 3..7");
    degdev::AscentSummary sum = n <= 6 ? degdev::verify_ascent(n, threads)
                                       : degdev::verify_ascent_sampled(n, 100000, 1, threads);
    if (sum.failure) {
        print_failure(*sum.failure);
        return kExitCounterexample;
    }
    std::cout << "PASS: " << sum.graphs << " graphs, terminals CS=" << sum.terminal_cs
              << " S1=" << sum.terminal_s1 << " unchanged=" << sum.terminal_unchanged
              << ", max trace length " << sum.max_trace_length << "\n";
    return kExitOk;
}

int run_verify_chemical(int n_min, int n_max, int c_min, int c_max, long long samples,
                        std::uint64_t seed) {
    auto sum = degdev::verify_chemical_sampled(n_min, n_max, c_min, c_max, samples, seed);
    if (sum.failure) {
        print_failure(*sum.failure);
        return kExitCounterexample;
    }
    std::cout << "PASS: " << sum.graphs << " sampled chemical graphs check out\n";
    return kExitOk;
}

int run_verify_forms(const std::string& out_path) {
    std::string csv = degdev::discrepancy_csv(degdev::closed_form_discrepancies());
    if (!out_path.empty()) write_file(out_path, csv);
    else std::cout << csv;
    return kExitOk;
}

int run_optimal_k(int n, const std::string& family) {
    if (family == "cs") {
        std::cout << "argmax k = {";
        auto ks = degdev::optimal_k_complete_split(n);
        for (std::size_t i = 0; i < ks.size(); ++i) std::cout << (i ? "," : "") << ks[i];
        std::cout << "}\n";
        return kExitOk;
    }
    if (family == "s1") {
        auto opt = degdev::optimal_k_pendant_split(n);
        std::cout << "argmax k = {";
        for (std::size_t i = 0; i < opt.maximizers.size(); ++i)
            std::cout << (i ? "," : "") << opt.maximizers[i];
        std::cout << "} value = " << degdev::to_fraction_string(opt.value) << "\n";
        std::cout << "published table = {";
        for (std::size_t i = 0; i < opt.published.size(); ++i)
            std::cout << (i ? "," : "") << opt.published[i];
        std::cout << "} " << (opt.agrees ? "(agrees)" : "(DISAGREES with evaluation)") << "\n";
        return kExitOk;
    }
    throw CLI::ValidationError("--family must be cs or s1");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"degdev: exact degree-deviation toolkit"};
    app.require_subcommand(1);
    int threads = 0;
    app.add_option("--threads", threads, "cap sweep parallelism (default: all cores)");

    std::string input, trace_path, out_path, checkpoint, family_name = "cs", attachment = "balanced";
    int n = 0, k = 0, n_min = 3, n_max = 12, c_min = 0, c_max = 13;
    long long samples = 100, expect_max = -1;
    std::uint64_t seed = 1;
    bool extended = false;

    auto* measure = app.add_subcommand("measure", "irregularity measures of a graph file");
    measure->add_option("input", input, "edge-list or graph6 file ('-' for stdin)")->required();

    auto* family = app.add_subcommand("family", "emit an extremal family graph as an edge list");
    family->add_option("name", family_name, "cs or s1")->required();
    family->add_option("n", n, "vertex count")->required();
    family->add_option("k", k, "clique size")->required();
    family->add_option("attachment", attachment, "balanced or concentrated (s1 only)");

    auto* ascend_cmd = app.add_subcommand("ascend", "run the monotone ascent on a graph file");
    ascend_cmd->add_option("input", input, "edge-list or graph6 file ('-' for stdin)")->required();
    ascend_cmd->add_option("--trace", trace_path, "write the step trace CSV here");

    auto* vc = app.add_subcommand("verify-conjecture", "sweep all connected graphs on n vertices");
    vc->add_option("--n", n, "vertex count (3..9)")->required();
    vc->add_flag("--extended", extended, "allow the long n >= 8 runs");
    vc->add_option("--out", out_path, "write the report CSV here");
    vc->add_option("--checkpoint", checkpoint, "resumable state file (n = 9 runs)");
    vc->add_option("--expect-max", expect_max, "test hook: override the expected max n*s")
        ->group("");

    auto* va = app.add_subcommand("verify-ascent", "check the ascent on all graphs on n vertices");
    va->add_option("--n", n, "vertex count (3..6 exhaustive, 7 sampled)")->required();

    auto* vch = app.add_subcommand("verify-chemical", "oracle-check the chemical closed forms");
    vch->add_option("--n-min", n_min, "smallest n");
    vch->add_option("--n-max", n_max, "largest n");
    vch->add_option("--c-min", c_min, "smallest cyclomatic number");
    vch->add_option("--c-max", c_max, "largest cyclomatic number");
    vch->add_option("--samples", samples, "samples per feasible (n,c)");
    vch->add_option("--seed", seed, "sampler seed");

    auto* vf = app.add_subcommand("verify-forms", "emit the closed-form discrepancy report");
    vf->add_option("--out", out_path, "write the discrepancy CSV here");

    auto* ok = app.add_subcommand("optimal-k", "argmax clique sizes for a family");
    ok->add_option("--n", n, "vertex count")->required();
    ok->add_option("--family", family_name, "cs or s1")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*measure) return run_measure(input);
        if (*family) return run_family(family_name, n, k, attachment);
        if (*ascend_cmd) return run_ascend(input, trace_path);
        if (*vc) return run_verify_conjecture(n, extended, out_path, checkpoint, threads, expect_max);
        if (*va) return run_verify_ascent(n, threads);
        if (*vch) return run_verify_chemical(n_min, n_max, c_min, c_max, samples, seed);
        if (*vf) return run_verify_forms(out_path);
        if (*ok) return run_optimal_k(n, family_name);
    } catch (const degdev::LemmaViolation& e) {
        std::cerr << "COUNTEREXAMPLE: " << e.what() << "\n";
        degdev::write_edge_list(std::cerr, e.witness);
        return kExitCounterexample;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCounterexample;
    }
    return kExitUsage;
}
