#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cstdint>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "degdev/ascent.hpp"
#include "degdev/chemical.hpp"
#include "degdev/families.hpp"
#include "degdev/graph.hpp"
#include "degdev/measures.hpp"

namespace degdev {

// Labeled connected graph counts for n = 1..7, used as an internal
// consistency check on the mask sweep.
inline constexpr long long kKnownConnectedCounts[] = {0, 1, 1, 4, 38, 728, 26704, 1866256};

inline constexpr int kMaxEnumVertices = 9;

// Fixed lexicographic ordering of vertex pairs; bit e of a mask is pairs[e].
struct MaskSpace {
    int n = 0;
    int bit_count = 0;
    std::array<VertexPair, 36> pairs{};
    std::array<std::array<int, kMaxEnumVertices>, kMaxEnumVertices> index{};
};

inline MaskSpace mask_space(int n) {
    if (n < 1 || n > kMaxEnumVertices)
        throw std::invalid_argument("mask_space: n must be in 1..9");
    MaskSpace sp;
    sp.n = n;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            sp.index[u][v] = sp.index[v][u] = sp.bit_count;
            sp.pairs[sp.bit_count++] = {u, v};
        }
    return sp;
}

inline std::uint64_t total_masks(int n) {
    return std::uint64_t{1} << (n * (n - 1) / 2);
}

inline Graph mask_to_graph(int n, std::uint64_t mask) {
    const MaskSpace sp = mask_space(n);
    std::vector<VertexPair> edges;
    while (mask) {
        edges.push_back(sp.pairs[std::countr_zero(mask)]);
        mask &= mask - 1;
    }
    return Graph::from_edges(n, edges);
}

inline std::uint64_t graph_to_mask(const Graph& g) {
    const MaskSpace sp = mask_space(g.vertex_count());
    std::uint64_t mask = 0;
    for (const auto& [u, v] : g.edges()) mask |= std::uint64_t{1} << sp.index[u][v];
    return mask;
}

namespace detail {

inline bool rows_connected(const std::uint32_t* rows, int n) {
    std::uint32_t reach = 1, prev = 0;
    while (reach != prev) {
        prev = reach;
        std::uint32_t r = reach;
        while (r) {
            reach |= rows[std::countr_zero(r)];
            r &= r - 1;
        }
    }
    return reach == (std::uint32_t{1} << n) - 1;
}

inline long long rows_scaled_deviation(const std::uint32_t* rows, int n, int m) {
    const long long two_m = 2LL * m;
    long long total = 0;
    for (int v = 0; v < n; ++v) {
        long long d = static_cast<long long>(n) * std::popcount(rows[v]) - two_m;
        total += d < 0 ? -d : d;
    }
    return total;
}

}  // namespace detail

// Calls f(mask, rows, m) for every connected labeled graph whose edge mask
// lies in [lo, hi).
template <class F>
inline void scan_connected_masks(int n, std::uint64_t lo, std::uint64_t hi, F&& f) {
    const MaskSpace sp = mask_space(n);
    std::array<std::uint32_t, kMaxEnumVertices> rows;
    for (std::uint64_t mask = lo; mask < hi; ++mask) {
        rows.fill(0);
        std::uint64_t bits = mask;
        while (bits) {
            const auto& [u, v] = sp.pairs[std::countr_zero(bits)];
            bits &= bits - 1;
            rows[u] |= std::uint32_t{1} << v;
            rows[v] |= std::uint32_t{1} << u;
        }
        if (!detail::rows_connected(rows.data(), n)) continue;
        f(mask, rows, std::popcount(mask));
    }
}

// Full-range convenience stream over connected graphs as Graph values.
template <class F>
inline void enumerate_connected(int n, F&& f) {
    scan_connected_masks(n, 0, total_masks(n),
                         [&](std::uint64_t mask, const auto&, int) { f(mask_to_graph(n, mask)); });
}

inline int resolve_threads(int threads) {
    if (threads > 0) return threads;
    unsigned hc = std::thread::hardware_concurrency();
    return hc > 0 ? static_cast<int>(hc) : 1;
}

// Runs fn(lo, hi) over contiguous sub-ranges of [lo, hi) on `threads` threads
// and returns the partial results in range order, so any associative merge is
// deterministic regardless of thread count.
template <class Partial, class RangeFn>
inline std::vector<Partial> run_partitioned(std::uint64_t lo, std::uint64_t hi, int threads,
                                            RangeFn fn) {
    threads = resolve_threads(threads);
    const std::uint64_t span = hi - lo;
    const std::uint64_t per = std::max<std::uint64_t>(1, (span + threads - 1) / threads);
    std::vector<std::pair<std::uint64_t, std::uint64_t>> ranges;
    for (std::uint64_t a = lo; a < hi; a += per) ranges.emplace_back(a, std::min(hi, a + per));

    std::vector<Partial> partials(ranges.size());
    std::vector<std::thread> pool;
    for (std::size_t i = 0; i < ranges.size(); ++i)
        pool.emplace_back([&, i] { partials[i] = fn(ranges[i].first, ranges[i].second); });
    for (auto& t : pool) t.join();
    return partials;
}

// --- canonicalization -------------------------------------------------------

// Minimal edge mask over all vertex permutations; memoized because witness
// sets are tiny and repeat across runs of the same n.
inline std::uint64_t canonical_mask(int n, std::uint64_t mask) {
    static std::mutex memo_mutex;
    static std::map<std::pair<int, std::uint64_t>, std::uint64_t> memo;
    {
        std::lock_guard lock(memo_mutex);
        if (auto it = memo.find({n, mask}); it != memo.end()) return it->second;
    }
    const MaskSpace sp = mask_space(n);
    std::vector<VertexPair> edges;
    std::uint64_t bits = mask;
    while (bits) {
        edges.push_back(sp.pairs[std::countr_zero(bits)]);
        bits &= bits - 1;
    }
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::uint64_t best = ~std::uint64_t{0};
    do {
        std::uint64_t relabeled = 0;
        for (const auto& [u, v] : edges)
            relabeled |= std::uint64_t{1} << sp.index[perm[u]][perm[v]];
        best = std::min(best, relabeled);
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::lock_guard lock(memo_mutex);
    memo[{n, mask}] = best;
    return best;
}

// --- extremal sweep ---------------------------------------------------------

struct ExtremalReport {
    int n = 0;
    long long max_scaled_deviation = -1;
    long long labeled_witness_count = 0;
    std::vector<Graph> witnesses_up_to_iso;
    std::vector<std::pair<int, long long>> expected;  // (k, n*s(CS(n,k))) over the optimal set
    bool conjecture_holds = false;
};

struct VerificationFailure {
    std::string context;
    Graph witness;
    std::string details;
};

namespace detail {

struct SweepPartial {
    long long best = -1;
    long long count = 0;
    std::vector<std::uint64_t> witnesses;
};

inline constexpr std::size_t kWitnessCap = std::size_t{1} << 20;

inline void sweep_fold(SweepPartial& acc, long long ns, std::uint64_t mask) {
    if (ns > acc.best) {
        acc.best = ns;
        acc.count = 1;
        acc.witnesses.assign(1, mask);
    } else if (ns == acc.best) {
        ++acc.count;
        if (acc.witnesses.size() < kWitnessCap) acc.witnesses.push_back(mask);
    }
}

inline void sweep_merge(SweepPartial& acc, const SweepPartial& part) {
    if (part.best > acc.best) {
        acc = part;
    } else if (part.best == acc.best) {
        acc.count += part.count;
        for (std::uint64_t w : part.witnesses)
            if (acc.witnesses.size() < kWitnessCap) acc.witnesses.push_back(w);
    }
}

inline SweepPartial sweep_range(int n, std::uint64_t lo, std::uint64_t hi) {
    SweepPartial acc;
    scan_connected_masks(n, lo, hi, [&](std::uint64_t mask, const auto& rows, int m) {
        sweep_fold(acc, rows_scaled_deviation(rows.data(), n, m), mask);
    });
    return acc;
}

}  // namespace detail

inline void write_checkpoint(const std::string& path, int n, std::uint64_t next_mask,
                             const detail::SweepPartial& state) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write checkpoint file " + path);
    out << n << " " << next_mask << " " << state.best;
    for (std::uint64_t w : state.witnesses) out << " " << w;
    out << "\n";
}

inline std::optional<std::pair<std::uint64_t, detail::SweepPartial>> read_checkpoint(
    const std::string& path, int n) {
    std::ifstream in(path);
    if (!in) return std::nullopt;
    int file_n = 0;
    std::uint64_t next_mask = 0;
    detail::SweepPartial state;
    if (!(in >> file_n >> next_mask >> state.best)) return std::nullopt;
    if (file_n != n) throw std::runtime_error("checkpoint file " + path + " is for n=" +
                                              std::to_string(file_n));
    std::uint64_t w;
    while (in >> w) state.witnesses.push_back(w);
    state.count = static_cast<long long>(state.witnesses.size());
    return std::make_pair(next_mask, state);
}

// Sweeps every labeled connected graph on n vertices and reports the maximum
// n*s with its witnesses, canonicalized up to isomorphism. The mask space is
// processed in contiguous chunks (checkpointable, for the n=9 run) with each
// chunk split across threads; the merge is deterministic.
inline ExtremalReport max_deviation(int n, int threads = 0, const std::string& checkpoint_path = "",
                                    std::uint64_t chunk_size = std::uint64_t{1} << 30) {
    if (n < 3 || n > kMaxEnumVertices)
        throw std::invalid_argument("max_deviation: n must be in 3..9");
    const std::uint64_t total = total_masks(n);

    detail::SweepPartial acc;
    std::uint64_t start = 0;
    if (!checkpoint_path.empty()) {
        if (auto resume = read_checkpoint(checkpoint_path, n)) {
            start = resume->first;
            acc = resume->second;
        }
    }
    for (std::uint64_t lo = start; lo < total; lo += chunk_size) {
        const std::uint64_t hi = std::min(total, lo + chunk_size);
        auto partials = run_partitioned<detail::SweepPartial>(
            lo, hi, threads, [n](std::uint64_t a, std::uint64_t b) { return detail::sweep_range(n, a, b); });
        for (const auto& p : partials) detail::sweep_merge(acc, p);
        if (!checkpoint_path.empty()) write_checkpoint(checkpoint_path, n, hi, acc);
    }

    ExtremalReport report;
    report.n = n;
    report.max_scaled_deviation = acc.best;
    report.labeled_witness_count = acc.count;

    std::vector<std::uint64_t> canon;
    for (std::uint64_t w : acc.witnesses) canon.push_back(canonical_mask(n, w));
    std::sort(canon.begin(), canon.end());
    canon.erase(std::unique(canon.begin(), canon.end()), canon.end());
    for (std::uint64_t w : canon) report.witnesses_up_to_iso.push_back(mask_to_graph(n, w));

    for (int k : optimal_k_complete_split(n)) {
        Rational s = s_complete_split(n, k);
        report.expected.emplace_back(k, s.numerator() * (n / s.denominator()));
    }

    bool holds = !report.expected.empty() && report.max_scaled_deviation == report.expected.front().second;
    if (holds) {
        for (const auto& g : report.witnesses_up_to_iso) {
            bool matched = false;
            for (const auto& [k, ns] : report.expected)
                if (graph_to_mask(g) == canonical_mask(n, graph_to_mask(complete_split(n, k))))
                    matched = true;
            if (!matched) holds = false;
        }
    }
    report.conjecture_holds = holds;
    return report;
}

// max_deviation plus a hard pass/fail against the closed-form expectation.
struct ConjectureResult {
    ExtremalReport report;
    std::optional<VerificationFailure> failure;
};

inline ConjectureResult verify_conjecture(int n, int threads = 0,
                                          const std::string& checkpoint_path = "",
                                          std::uint64_t chunk_size = std::uint64_t{1} << 30) {
    ConjectureResult result;
    result.report = max_deviation(n, threads, checkpoint_path, chunk_size);
    if (!result.report.conjecture_holds) {
        Graph witness = result.report.witnesses_up_to_iso.empty()
                            ? Graph::edgeless(n)
                            : result.report.witnesses_up_to_iso.front();
        result.failure = VerificationFailure{
            "conjecture", witness,
            "max n*s = " + std::to_string(result.report.max_scaled_deviation) + ", expected " +
                (result.report.expected.empty()
                     ? std::string("?")
                     : std::to_string(result.report.expected.front().second))};
    }
    return result;
}

inline std::string conjecture_report_csv(const std::vector<ExtremalReport>& reports) {
    std::string out = "n,max_n_s,expected_n_s,labeled_witnesses,iso_witnesses,conjecture_holds\n";
    for (const auto& r : reports) {
        out += std::to_string(r.n) + "," + std::to_string(r.max_scaled_deviation) + "," +
               (r.expected.empty() ? std::string("?") : std::to_string(r.expected.front().second)) +
               "," + std::to_string(r.labeled_witness_count) + "," +
               std::to_string(r.witnesses_up_to_iso.size()) + "," +
               (r.conjecture_holds ? "true" : "false") + "\n";
    }
    return out;
}

// --- ascent verification ----------------------------------------------------

struct AscentSummary {
    int n = 0;
    long long graphs = 0;
    long long terminal_cs = 0;
    long long terminal_s1 = 0;
    long long terminal_unchanged = 0;
    long long max_trace_length = 0;
    std::optional<VerificationFailure> failure;
};

namespace detail {

// Independently replays a trace: re-applies every action, re-checks every
// recorded value, connectivity of every intermediate graph, each lemma's
// delta contract, the terminal structure, and dominance by the sweep maximum.
inline std::optional<std::string> check_trace(const Graph& start, const AscentTrace& trace,
                                              long long max_ns) {
    const long long n = start.vertex_count();
    if (static_cast<long long>(trace.steps.size()) > 4 * n * n * n)
        return "trace exceeds 4n^3 steps";

    Graph cur = start;
    Graph pre_terminal = start;
    for (const auto& step : trace.steps) {
        if (scaled_deviation(cur) != step.ns_before) return "recorded ns_before mismatch";
        pre_terminal = cur;
        switch (step.action.kind) {
            case AscentActionKind::bootstrap:
            case AscentActionKind::remove_down:
                cur = cur.without_edge(step.action.edge.first, step.action.edge.second);
                break;
            case AscentActionKind::add_up:
                cur = cur.with_edge(step.action.edge.first, step.action.edge.second);
                break;
            case AscentActionKind::rewire:
                cur = cur.without_edge(step.action.edge.first, step.action.edge.second)
                          .with_edge(step.action.kept, step.action.w);
                break;
            case AscentActionKind::complete_cs:
                for (const auto& [u, v] : step.action.edge_set) cur = cur.with_edge(u, v);
                break;
            case AscentActionKind::prune_s1:
                for (const auto& [u, v] : step.action.edge_set) cur = cur.without_edge(u, v);
                break;
        }
        if (!is_connected(cur)) return "intermediate graph disconnected";
        const long long after = scaled_deviation(cur);
        if (after != step.ns_after) return "recorded ns_after mismatch";
        const long long delta = after - step.ns_before;
        switch (step.action.kind) {
            case AscentActionKind::rewire:
                if (delta != 2 * n) return "rewire delta is not exactly 2n";
                break;
            case AscentActionKind::prune_s1:
                if (delta < 0) return "prune decreased n*s";
                break;
            default:
                if (delta <= 0) return "step did not strictly increase n*s";
        }
    }
    if (!(cur == trace.terminal)) return "replayed terminal differs from recorded terminal";

    const long long terminal_ns = scaled_deviation(trace.terminal);
    if (terminal_ns < scaled_deviation(start)) return "terminal below start";
    if (terminal_ns > max_ns) return "terminal exceeds the CS(n,k*) maximum";

    if (trace.family == TerminalFamily::unchanged)
        return trace.terminal.is_complete() ? std::nullopt
                                            : std::optional<std::string>("unchanged terminal is not complete");

    // The clique of the terminal family is V_up of the graph the terminal
    // step acted on (the terminal itself when no action was needed).
    bool acted = !trace.steps.empty() &&
                 (trace.steps.back().action.kind == AscentActionKind::complete_cs ||
                  trace.steps.back().action.kind == AscentActionKind::prune_s1);
    DegreePartition p = degree_partition(acted ? pre_terminal : trace.terminal);
    if (static_cast<int>(p.v_up.size()) != trace.family_k) return "family_k is not |V_up|";
    for (std::size_t i = 0; i < p.v_up.size(); ++i)
        for (std::size_t j = i + 1; j < p.v_up.size(); ++j)
            if (!trace.terminal.has_edge(p.v_up[i], p.v_up[j])) return "terminal clique incomplete";
    for (int v : p.v_down) {
        if (trace.family == TerminalFamily::complete_split) {
            if (trace.terminal.degree(v) != trace.family_k) return "terminal is not CS";
        } else {
            if (trace.terminal.degree(v) != 1) return "terminal stable vertex degree != 1";
        }
        bool outside = false;
        trace.terminal.for_each_neighbor(v, [&](int u) {
            if (!p.is_up(u)) outside = true;
        });
        if (outside) return "terminal stable vertex adjacent outside the clique";
    }
    return std::nullopt;
}

inline void fold_ascent(AscentSummary& sum, const Graph& g, long long max_ns) {
    if (sum.failure) return;
    try {
        AscentTrace trace = ascend(g);
        if (auto err = check_trace(g, trace, max_ns)) {
            sum.failure = VerificationFailure{"ascent", g, *err};
            return;
        }
        switch (trace.family) {
            case TerminalFamily::complete_split: ++sum.terminal_cs; break;
            case TerminalFamily::pendant_split: ++sum.terminal_s1; break;
            case TerminalFamily::unchanged: ++sum.terminal_unchanged; break;
        }
        sum.max_trace_length =
            std::max(sum.max_trace_length, static_cast<long long>(trace.steps.size()));
        ++sum.graphs;
    } catch (const LemmaViolation& e) {
        sum.failure = VerificationFailure{"ascent", e.witness, e.what()};
    }
}

}  // namespace detail

// Runs ascend on every labeled connected graph on n vertices and checks every
// per-trace invariant against an independent replay.
inline AscentSummary verify_ascent(int n, int threads = 0) {
    if (n < 3 || n > 7) throw std::invalid_argument("verify_ascent: n must be in 3..7");
    const long long max_ns = max_deviation(n, threads).max_scaled_deviation;
    auto partials = run_partitioned<AscentSummary>(
        0, total_masks(n), threads, [n, max_ns](std::uint64_t lo, std::uint64_t hi) {
            AscentSummary part;
            part.n = n;
            scan_connected_masks(n, lo, hi, [&](std::uint64_t mask, const auto&, int) {
                detail::fold_ascent(part, mask_to_graph(n, mask), max_ns);
            });
            return part;
        });
    AscentSummary sum;
    sum.n = n;
    for (const auto& p : partials) {
        sum.graphs += p.graphs;
        sum.terminal_cs += p.terminal_cs;
        sum.terminal_s1 += p.terminal_s1;
        sum.terminal_unchanged += p.terminal_unchanged;
        sum.max_trace_length = std::max(sum.max_trace_length, p.max_trace_length);
        if (!sum.failure && p.failure) sum.failure = p.failure;
    }
    return sum;
}

// Same checks on `samples` random connected graphs (rejection-sampled masks).
inline AscentSummary verify_ascent_sampled(int n, long long samples, std::uint64_t seed,
                                           int threads = 0) {
    if (n < 3 || n > kMaxEnumVertices)
        throw std::invalid_argument("verify_ascent_sampled: n must be in 3..9");
    const long long max_ns = max_deviation(n, threads).max_scaled_deviation;
    const std::uint64_t mask_limit = total_masks(n);
    std::mt19937_64 rng(seed);
    AscentSummary sum;
    sum.n = n;
    for (long long i = 0; i < samples && !sum.failure; ++i) {
        Graph g;
        do {
            g = mask_to_graph(n, rng() % mask_limit);
        } while (!is_connected(g));
        detail::fold_ascent(sum, g, max_ns);
    }
    return sum;
}

// --- spectral / Albertson sweep ---------------------------------------------

struct SpectralSweepSummary {
    int n = 0;
    long long graphs = 0;
    std::optional<VerificationFailure> failure;
};

// Checks the eigenvalue sandwich and the 4n^3/27 Albertson bound on every
// connected graph on n vertices.
inline SpectralSweepSummary verify_spectral(int n, double tolerance = 1e-6, int threads = 0) {
    if (n < 2 || n > 7) throw std::invalid_argument("verify_spectral: n must be in 2..7");
    auto partials = run_partitioned<SpectralSweepSummary>(
        0, total_masks(n), threads, [n, tolerance](std::uint64_t lo, std::uint64_t hi) {
            SpectralSweepSummary part;
            part.n = n;
            scan_connected_masks(n, lo, hi, [&](std::uint64_t mask, const auto&, int) {
                if (part.failure) return;
                Graph g = mask_to_graph(n, mask);
                ++part.graphs;
                SpectralBoundReport r = nikiforov_bounds(g, tolerance);
                if (!r.holds) {
                    part.failure = VerificationFailure{
                        "nikiforov", g,
                        "lower=" + std::to_string(r.lower) + " gap=" + std::to_string(r.gap) +
                            " upper=" + std::to_string(r.upper)};
                    return;
                }
                if (27LL * albertson_irregularity(g) >= 4LL * n * n * n)
                    part.failure = VerificationFailure{"albertson_bound", g,
                                                       "irr = " + std::to_string(albertson_irregularity(g))};
            });
            return part;
        });
    SpectralSweepSummary sum;
    sum.n = n;
    for (const auto& p : partials) {
        sum.graphs += p.graphs;
        if (!sum.failure && p.failure) sum.failure = p.failure;
    }
    return sum;
}

// --- chemical verification --------------------------------------------------

struct ChemicalSummary {
    long long graphs = 0;
    std::optional<VerificationFailure> failure;
};

namespace detail {

inline std::optional<std::string> check_chemical_formulas(const Graph& g) {
    ChemicalCounts counts = degree_counts(g);
    auto [n1, n2] = n1_n2_from_identity(counts.c, counts.n, counts.n3, counts.n4);
    if (n1 != counts.n1 || n2 != counts.n2) return "degree-count identity failed";

    Rational s(scaled_deviation(g), g.vertex_count());
    Rational formula = counts.c == 0   ? s_chemical_tree(counts.n, counts.n3, counts.n4)
                       : counts.c == 1 ? s_unicyclic_chemical(counts.n3, counts.n4)
                                       : s_chemical(counts.n, counts.c, counts.n3, counts.n4);
    if (s != formula)
        return "closed form mismatch: s = " + to_fraction_string(s) + ", formula = " +
               to_fraction_string(formula);
    return std::nullopt;
}

}  // namespace detail

// Checks the degree-count identity and every closed form on the exhaustive
// chemical subset of the connected sweep, 2 <= n <= n_max.
inline ChemicalSummary verify_chemical_exhaustive(int n_max = 7) {
    ChemicalSummary sum;
    for (int n = 2; n <= std::min(n_max, 7); ++n) {
        scan_connected_masks(n, 0, total_masks(n), [&](std::uint64_t mask, const auto& rows, int) {
            if (sum.failure) return;
            for (int v = 0; v < n; ++v)
                if (std::popcount(rows[v]) > 4) return;
            Graph g = mask_to_graph(n, mask);
            ++sum.graphs;
            if (auto err = detail::check_chemical_formulas(g))
                sum.failure = VerificationFailure{"chemical", g, *err};
        });
        if (sum.failure) break;
    }
    return sum;
}

namespace detail {
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}
}  // namespace detail

// Same checks on `samples` seeded random chemical graphs per feasible (n,c)
// in the given ranges.
inline ChemicalSummary verify_chemical_sampled(int n_min, int n_max, int c_min, int c_max,
                                               long long samples, std::uint64_t seed) {
    ChemicalSummary sum;
    for (int n = n_min; n <= n_max && !sum.failure; ++n)
        for (int c = c_min; c <= c_max && !sum.failure; ++c) {
            if (!chemical_feasible(n, c)) continue;
            for (long long i = 0; i < samples && !sum.failure; ++i) {
                std::uint64_t sample_seed =
                    detail::splitmix64(seed ^ detail::splitmix64((static_cast<std::uint64_t>(n) << 32) ^
                                                                 (static_cast<std::uint64_t>(c) << 16) ^
                                                                 static_cast<std::uint64_t>(i)));
                Graph g = random_chemical_graph(n, c, sample_seed);
                ++sum.graphs;
                ChemicalCounts counts = degree_counts(g);
                if (counts.c != c) {
                    sum.failure = VerificationFailure{"chemical_sampler", g, "cyclomatic number mismatch"};
                    break;
                }
                if (auto err = detail::check_chemical_formulas(g))
                    sum.failure = VerificationFailure{"chemical", g, *err};
            }
        }
    return sum;
}

// --- labeled trees (Prufer sweep) -------------------------------------------

// Every labeled tree on n vertices, via Prufer sequences.
template <class F>
inline void for_each_labeled_tree(int n, F&& f) {
    if (n < 1) throw std::invalid_argument("for_each_labeled_tree: n must be >= 1");
    if (n == 1) {
        f(Graph::edgeless(1));
        return;
    }
    if (n == 2) {
        f(Graph::from_edges(2, {{0, 1}}));
        return;
    }
    std::vector<int> seq(n - 2, 0);
    std::vector<int> degree(n);
    std::vector<VertexPair> edges;
    for (;;) {
        degree.assign(n, 1);
        for (int s : seq) ++degree[s];
        edges.clear();
        std::vector<int> deg = degree;
        for (int s : seq) {
            for (int leaf = 0; leaf < n; ++leaf)
                if (deg[leaf] == 1) {
                    edges.push_back(ordered_pair(leaf, s));
                    deg[leaf] = 0;
                    --deg[s];
                    break;
                }
        }
        int a = -1;
        for (int v = 0; v < n; ++v)
            if (deg[v] == 1) {
                if (a < 0) a = v;
                else edges.push_back(ordered_pair(a, v));
            }
        f(Graph::from_edges(n, edges));

        int pos = n - 3;
        while (pos >= 0 && seq[pos] == n - 1) seq[pos--] = 0;
        if (pos < 0) break;
        ++seq[pos];
    }
}

}  // namespace degdev
