#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "degdev/graph.hpp"
#include "degdev/rational.hpp"

namespace degdev {

// Degree counts of a connected chemical graph (max degree 4) plus the
// cyclomatic number c = m - n + 1.
struct ChemicalCounts {
    int n1 = 0, n2 = 0, n3 = 0, n4 = 0;
    int n = 0;
    int c = 0;
};

inline ChemicalCounts degree_counts(const Graph& g) {
    if (g.vertex_count() < 2) throw std::invalid_argument("degree_counts: n must be >= 2");
    if (!is_connected(g)) throw std::invalid_argument("degree_counts: graph is disconnected");
    ChemicalCounts counts;
    counts.n = g.vertex_count();
    counts.c = g.edge_count() - g.vertex_count() + 1;
    for (int v = 0; v < g.vertex_count(); ++v) {
        switch (g.degree(v)) {
            case 1: ++counts.n1; break;
            case 2: ++counts.n2; break;
            case 3: ++counts.n3; break;
            case 4: ++counts.n4; break;
            default: throw std::invalid_argument("not a chemical graph: degree " +
                                                 std::to_string(g.degree(v)) + " at vertex " +
                                                 std::to_string(v));
        }
    }
    return counts;
}

// n1 = 2 - 2c + n3 + 2 n4,  n2 = 2c + n - 2 - 2 n3 - 3 n4.
inline std::pair<int, int> n1_n2_from_identity(int c, int n, int n3, int n4) {
    int n1 = 2 - 2 * c + n3 + 2 * n4;
    int n2 = 2 * c + n - 2 - 2 * n3 - 3 * n4;
    if (n1 < 0 || n2 < 0)
        throw std::invalid_argument("infeasible degree-count combination");
    return {n1, n2};
}

// s(T) = 4(n-2)/n + ((n-2)/n)(2 n3 + 4 n4) for a chemical tree.
inline Rational s_chemical_tree(int n, int n3, int n4) {
    if (n < 2) throw std::invalid_argument("s_chemical_tree: n must be >= 2");
    n1_n2_from_identity(0, n, n3, n4);
    return Rational(4LL * (n - 2) + static_cast<long long>(n - 2) * (2 * n3 + 4 * n4), n);
}

// s(G) = 2 n3 + 4 n4 for a connected unicyclic chemical graph, independent of n.
inline Rational s_unicyclic_chemical(int n3, int n4) {
    if (n3 < 0 || n4 < 0) throw std::invalid_argument("negative degree count");
    return Rational(2LL * n3 + 4 * n4);
}

// c >= 2 cases: two branches meeting at n = 2c-2, where both reduce to 2 n4.
inline Rational s_chemical(int n, int c, int n3, int n4) {
    if (c < 2) throw std::invalid_argument("s_chemical: c must be >= 2 (use the tree/unicyclic forms)");
    if (c > n + 1) throw std::invalid_argument("s_chemical: infeasible, c > n+1");
    n1_n2_from_identity(c, n, n3, n4);
    if (n > 2 * c - 2)
        return Rational(static_cast<long long>(2 * n - 4 * c + 4) * n3 +
                        static_cast<long long>(4 * n - 4 * c + 4) * n4, n);
    return Rational(4LL * (n - c + 1) * n4, n);
}

inline bool chemical_feasible(int n, int c) {
    if (n < 3 || c < 0) return false;
    long long m = static_cast<long long>(n) + c - 1;
    return m <= 2LL * n && m <= static_cast<long long>(n) * (n - 1) / 2;
}

// Seed-deterministic sampler for connected (n,c)-chemical graphs: grow a
// random tree under the degree-4 cap, then add c extra edges among eligible
// pairs, restarting on dead ends. Coverage matters here, distribution does
// not; the formulas it feeds are exact identities.
inline Graph random_chemical_graph(int n, int c, std::uint64_t seed) {
    if (!chemical_feasible(n, c))
        throw std::invalid_argument("random_chemical_graph: infeasible (n,c) = (" +
                                    std::to_string(n) + "," + std::to_string(c) + ")");
    std::mt19937_64 rng(seed);
    constexpr int kAttemptCap = 10000;

    for (int attempt = 0; attempt < kAttemptCap; ++attempt) {
        std::vector<int> deg(n, 0);
        std::vector<char> adj(static_cast<std::size_t>(n) * n, 0);
        std::vector<VertexPair> edges;
        auto connect = [&](int u, int v) {
            adj[static_cast<std::size_t>(u) * n + v] = adj[static_cast<std::size_t>(v) * n + u] = 1;
            ++deg[u];
            ++deg[v];
            edges.push_back(ordered_pair(u, v));
        };

        bool dead = false;
        for (int v = 1; v < n && !dead; ++v) {
            std::vector<int> eligible;
            for (int u = 0; u < v; ++u)
                if (deg[u] < 4) eligible.push_back(u);
            if (eligible.empty()) {
                dead = true;
                break;
            }
            connect(eligible[std::uniform_int_distribution<std::size_t>(0, eligible.size() - 1)(rng)], v);
        }
        if (dead) continue;

        int added = 0;
        while (added < c && !dead) {
            bool found = false;
            for (int tries = 0; tries < 200 && !found; ++tries) {
                int u = std::uniform_int_distribution<int>(0, n - 1)(rng);
                int v = std::uniform_int_distribution<int>(0, n - 1)(rng);
                if (u == v || deg[u] >= 4 || deg[v] >= 4 || adj[static_cast<std::size_t>(u) * n + v])
                    continue;
                connect(u, v);
                found = true;
            }
            if (!found) {
                std::vector<VertexPair> eligible;
                for (int u = 0; u < n; ++u)
                    for (int v = u + 1; v < n; ++v)
                        if (deg[u] < 4 && deg[v] < 4 && !adj[static_cast<std::size_t>(u) * n + v])
                            eligible.emplace_back(u, v);
                if (eligible.empty()) {
                    dead = true;
                    break;
                }
                auto [u, v] =
                    eligible[std::uniform_int_distribution<std::size_t>(0, eligible.size() - 1)(rng)];
                connect(u, v);
            }
            ++added;
        }
        if (dead) continue;
        return Graph::from_edges(n, edges);
    }
    throw std::runtime_error("random_chemical_graph: sampler failed after retry cap for (n,c) = (" +
                             std::to_string(n) + "," + std::to_string(c) + ")");
}

}  // namespace degdev
