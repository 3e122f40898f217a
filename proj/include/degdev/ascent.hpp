#pragma once

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "degdev/graph.hpp"

namespace degdev {

// Raised when a transformation fails the monotonicity its lemma proves.
// Carrying the graph makes this the falsification channel: a reachable
// LemmaViolation is a counterexample to the source result.
struct LemmaViolation : std::runtime_error {
    Graph witness;
    LemmaViolation(std::string what, Graph g) : std::runtime_error(std::move(what)), witness(std::move(g)) {}
};

enum class AscentActionKind { remove_down, add_up, rewire, complete_cs, prune_s1, bootstrap };

inline const char* action_name(AscentActionKind k) {
    switch (k) {
        case AscentActionKind::remove_down: return "remove_down";
        case AscentActionKind::add_up: return "add_up";
        case AscentActionKind::rewire: return "rewire";
        case AscentActionKind::complete_cs: return "complete_cs";
        case AscentActionKind::prune_s1: return "prune_s1";
        case AscentActionKind::bootstrap: return "bootstrap";
    }
    return "?";
}

struct AscentAction {
    AscentActionKind kind;
    VertexPair edge{-1, -1};            // remove_down / add_up / rewire / bootstrap
    int w = -1;                         // rewire: the connectedness factor
    int kept = -1;                      // rewire: the endpoint that kept its degree
    std::vector<VertexPair> edge_set;   // complete_cs: added, prune_s1: removed

    std::string detail() const {
        switch (kind) {
            case AscentActionKind::rewire:
                return std::to_string(edge.first) + "-" + std::to_string(edge.second) + "->" +
                       std::to_string(w);
            case AscentActionKind::complete_cs:
            case AscentActionKind::prune_s1: {
                std::string s;
                for (std::size_t i = 0; i < edge_set.size(); ++i) {
                    if (i) s += ";";
                    s += std::to_string(edge_set[i].first) + "-" + std::to_string(edge_set[i].second);
                }
                return s;
            }
            default:
                return std::to_string(edge.first) + "-" + std::to_string(edge.second);
        }
    }
};

struct AscentStep {
    AscentAction action;
    long long ns_before;
    long long ns_after;
};

enum class TerminalFamily { complete_split, pendant_split, unchanged };

struct AscentTrace {
    Graph start;
    std::vector<AscentStep> steps;
    Graph terminal;
    TerminalFamily family = TerminalFamily::unchanged;
    int family_k = -1;  // clique size of the terminal family, -1 for unchanged
};

namespace detail {
inline void require_irregular(const Graph& g) {
    if (g.is_regular()) throw std::invalid_argument("regular input");
}
inline bool is_bridge(const Graph& g, const VertexPair& e) {
    auto bridges = cut_edges(g);
    return std::binary_search(bridges.begin(), bridges.end(), e);
}
}  // namespace detail

// Removing a non-bridge edge inside V-down strictly raises s.
inline Graph remove_down_edge(const Graph& g, VertexPair e) {
    e = ordered_pair(e.first, e.second);
    if (!is_connected(g)) throw std::invalid_argument("disconnected input");
    detail::require_irregular(g);
    if (!g.has_edge(e.first, e.second)) throw std::invalid_argument("edge not present " + pair_string(e));
    DegreePartition p = degree_partition(g);
    if (p.is_up(e.first) || p.is_up(e.second))
        throw std::invalid_argument("not in E_down: " + pair_string(e));
    if (detail::is_bridge(g, e)) throw std::invalid_argument("is a cut edge: " + pair_string(e));

    Graph out = g.without_edge(e.first, e.second);
    if (scaled_deviation(out) <= scaled_deviation(g))
        throw LemmaViolation("remove_down_edge did not increase n*s at " + pair_string(e), g);
    return out;
}

// Adding a missing pair inside V-up strictly raises s.
inline Graph add_up_edge(const Graph& g, VertexPair pair) {
    pair = ordered_pair(pair.first, pair.second);
    if (!is_connected(g)) throw std::invalid_argument("disconnected input");
    detail::require_irregular(g);
    if (g.has_edge(pair.first, pair.second))
        throw std::invalid_argument("already adjacent: " + pair_string(pair));
    DegreePartition p = degree_partition(g);
    if (!p.is_up(pair.first) || !p.is_up(pair.second))
        throw std::invalid_argument("not in non_edges_up: " + pair_string(pair));

    Graph out = g.with_edge(pair.first, pair.second);
    if (scaled_deviation(out) <= scaled_deviation(g))
        throw LemmaViolation("add_up_edge did not increase n*s at " + pair_string(pair), g);
    return out;
}

// Rewiring a bridge in E-down to a vertex of V-up on the far side raises s by
// exactly 2, i.e. n*s by exactly 2n. Tries keeping either endpoint, scanning
// candidate w in ascending order, and verifies connectivity rather than
// assuming the claimed factor exists.
struct RewireResult {
    Graph graph;
    int kept;  // endpoint of e the new edge attaches to
    int w;     // the connectedness factor in V_up
};

inline RewireResult rewire_cut_edge(const Graph& g, VertexPair e) {
    e = ordered_pair(e.first, e.second);
    if (!is_connected(g)) throw std::invalid_argument("disconnected input");
    detail::require_irregular(g);
    if (!g.has_edge(e.first, e.second)) throw std::invalid_argument("edge not present " + pair_string(e));
    DegreePartition p = degree_partition(g);
    if (p.is_up(e.first) || p.is_up(e.second))
        throw std::invalid_argument("not in E_down: " + pair_string(e));
    if (!detail::is_bridge(g, e)) throw std::invalid_argument("not a cut edge: " + pair_string(e));

    Graph removed = g.without_edge(e.first, e.second);
    const long long before = scaled_deviation(g);
    for (int kept : {e.first, e.second}) {
        for (int w : p.v_up) {
            if (w == kept || removed.has_edge(kept, w)) continue;
            Graph out = removed.with_edge(kept, w);
            if (!is_connected(out)) continue;
            long long after = scaled_deviation(out);
            if (after - before != 2LL * g.vertex_count())
                throw LemmaViolation("rewire_cut_edge delta is not 2n at " + pair_string(e), g);
            return {std::move(out), kept, w};
        }
    }
    throw std::runtime_error("no connectedness factor found for bridge " + pair_string(e));
}

struct TerminalResult {
    Graph graph;
    TerminalFamily family;
    int k;                              // clique size |V_up|
    std::vector<VertexPair> changed;    // edges added (complete) or removed (prune)
    bool acted;
};

// The terminal move once the graph is split along its degree partition:
// complete all clique-stable edges when the stable side is larger, otherwise
// prune every stable vertex down to its first anchor.
inline TerminalResult terminal_step(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("disconnected input");
    detail::require_irregular(g);
    DegreePartition p = degree_partition(g);
    if (!p.e_down.empty()) throw std::invalid_argument("V_down is not a stable set");
    if (!p.non_edges_up.empty()) throw std::invalid_argument("V_up is not a clique");
    const int k = static_cast<int>(p.v_up.size());
    const long long before = scaled_deviation(g);

    long long stable_degree_sum = 0;
    for (int v : p.v_down) stable_degree_sum += g.degree(v);

    if (stable_degree_sum == static_cast<long long>(p.v_down.size()) * k) {
        // Every clique-stable edge present: already CS(n,k).
        return {g, TerminalFamily::complete_split, k, {}, false};
    }

    if (p.v_down.size() > p.v_up.size()) {
        Graph out = g;
        std::vector<VertexPair> added;
        for (int v : p.v_down)
            for (int u : p.v_up)
                if (!out.has_edge(v, u)) {
                    out = out.with_edge(v, u);
                    added.push_back(ordered_pair(v, u));
                }
        std::sort(added.begin(), added.end());
        if (scaled_deviation(out) <= before)
            throw LemmaViolation("completion to CS did not increase n*s", g);
        return {out, TerminalFamily::complete_split, k, std::move(added), true};
    }

    Graph out = g;
    std::vector<VertexPair> removed;
    for (int v : p.v_down) {
        auto nb = g.neighbors(v);  // all in V_up since e_down is empty
        for (std::size_t i = 1; i < nb.size(); ++i) {
            out = out.without_edge(v, nb[i]);
            removed.push_back(ordered_pair(v, nb[i]));
        }
    }
    std::sort(removed.begin(), removed.end());
    if (scaled_deviation(out) < before)
        throw LemmaViolation("pruning to S1 decreased n*s", g);
    if (!is_connected(out)) throw LemmaViolation("pruning to S1 disconnected the graph", g);
    const bool acted = !removed.empty();
    return {out, TerminalFamily::pendant_split, k, std::move(removed), acted};
}

// The full ascent: delete E-down non-bridges, add missing V-up pairs, rewire
// E-down bridges, each in lexicographically-smallest-first order with the
// partition re-derived after every move, then the terminal completion/prune.
// Every step re-checks the monotonicity its lemma guarantees.
inline AscentTrace ascend(const Graph& g) {
    if (g.vertex_count() < 3) throw std::invalid_argument("ascend: n must be >= 3");
    if (!is_connected(g)) throw std::invalid_argument("ascend: graph is disconnected");

    AscentTrace trace;
    trace.start = g;
    Graph cur = g;

    const long long n = g.vertex_count();
    const long long step_cap = 4 * n * n * n;
    auto record = [&](AscentAction action, long long before, const Graph& next) {
        trace.steps.push_back({std::move(action), before, scaled_deviation(next)});
        if (static_cast<long long>(trace.steps.size()) > step_cap)
            throw LemmaViolation("ascent exceeded the 4n^3 step bound", cur);
    };

    if (cur.is_regular()) {
        if (cur.is_complete()) {
            trace.terminal = cur;
            trace.family = TerminalFamily::unchanged;
            return trace;
        }
        // Lemmas need an irregular start: break regularity by removing the
        // smallest non-bridge edge (one exists for any regular connected
        // graph with n >= 3).
        auto bridges = cut_edges(cur);
        for (const auto& e : cur.edges()) {
            if (std::binary_search(bridges.begin(), bridges.end(), e)) continue;
            long long before = scaled_deviation(cur);
            cur = cur.without_edge(e.first, e.second);
            record({AscentActionKind::bootstrap, e}, before, cur);
            break;
        }
        if (cur.is_regular()) throw std::runtime_error("ascend: bootstrap found no non-bridge edge");
    }

    for (;;) {
        DegreePartition p = degree_partition(cur);
        const long long before = scaled_deviation(cur);
        if (!p.e_down.empty()) {
            auto bridges = cut_edges(cur);
            const VertexPair* non_bridge = nullptr;
            for (const auto& e : p.e_down)
                if (!std::binary_search(bridges.begin(), bridges.end(), e)) {
                    non_bridge = &e;
                    break;
                }
            if (non_bridge) {  // (b)
                VertexPair e = *non_bridge;
                cur = remove_down_edge(cur, e);
                record({AscentActionKind::remove_down, e}, before, cur);
                continue;
            }
            if (p.non_edges_up.empty()) {  // (d): every E-down edge is a bridge
                VertexPair e = p.e_down.front();
                RewireResult r = rewire_cut_edge(cur, e);
                cur = r.graph;
                record({AscentActionKind::rewire, e, r.w, r.kept}, before, cur);
                continue;
            }
        }
        if (!p.non_edges_up.empty()) {  // (c)
            VertexPair f = p.non_edges_up.front();
            cur = add_up_edge(cur, f);
            record({AscentActionKind::add_up, f}, before, cur);
            continue;
        }
        break;
    }

    TerminalResult t = terminal_step(cur);
    if (t.acted) {
        AscentAction action{t.family == TerminalFamily::complete_split ? AscentActionKind::complete_cs
                                                                       : AscentActionKind::prune_s1};
        action.edge_set = t.changed;
        record(std::move(action), scaled_deviation(cur), t.graph);
    }
    trace.terminal = t.graph;
    trace.family = t.family;
    trace.family_k = t.k;
    return trace;
}

inline std::string trace_csv(const AscentTrace& trace) {
    std::string out = "step,action,detail,n_s_before,n_s_after\n";
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
        const auto& s = trace.steps[i];
        out += std::to_string(i + 1) + "," + action_name(s.action.kind) + "," + s.action.detail() +
               "," + std::to_string(s.ns_before) + "," + std::to_string(s.ns_after) + "\n";
    }
    return out;
}

}  // namespace degdev
