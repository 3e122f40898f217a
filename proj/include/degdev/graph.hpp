#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace degdev {

using VertexPair = std::pair<int, int>;

inline VertexPair ordered_pair(int u, int v) {
    return {std::min(u, v), std::max(u, v)};
}

inline std::string pair_string(const VertexPair& e) {
    return "(" + std::to_string(e.first) + "," + std::to_string(e.second) + ")";
}

// Immutable simple undirected graph. Vertices are dense 0-indexed integers,
// adjacency is stored as per-vertex bit rows, so all degree and neighborhood
// queries are word operations. Mutating helpers return a new graph.
class Graph {
public:
    Graph() = default;

    static Graph edgeless(int n) {
        if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
        Graph g;
        g.n_ = n;
        g.words_ = (n + 63) / 64;
        g.bits_.assign(static_cast<std::size_t>(n) * g.words_, 0);
        return g;
    }

    static Graph from_edges(int n, const std::vector<VertexPair>& edges) {
        Graph g = edgeless(n);
        for (const auto& e : edges) {
            auto [u, v] = e;
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw std::invalid_argument("vertex out of range in edge " + pair_string(e));
            if (u == v)
                throw std::invalid_argument("self-loop " + pair_string(e));
            if (g.has_edge(u, v))
                throw std::invalid_argument("duplicate edge " + pair_string(e));
            g.set_edge(u, v);
        }
        return g;
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }

    bool has_edge(int u, int v) const {
        return (bits_[static_cast<std::size_t>(u) * words_ + v / 64] >> (v % 64)) & 1u;
    }

    int degree(int v) const {
        int d = 0;
        for (int w = 0; w < words_; ++w)
            d += std::popcount(bits_[static_cast<std::size_t>(v) * words_ + w]);
        return d;
    }

    template <class F>
    void for_each_neighbor(int v, F f) const {
        for (int w = 0; w < words_; ++w) {
            std::uint64_t word = bits_[static_cast<std::size_t>(v) * words_ + w];
            while (word) {
                f(w * 64 + std::countr_zero(word));
                word &= word - 1;
            }
        }
    }

    std::vector<int> neighbors(int v) const {
        std::vector<int> out;
        for_each_neighbor(v, [&](int u) { out.push_back(u); });
        return out;
    }

    // Edges sorted lexicographically with u < v.
    std::vector<VertexPair> edges() const {
        std::vector<VertexPair> out;
        out.reserve(m_);
        for (int u = 0; u < n_; ++u)
            for_each_neighbor(u, [&](int v) {
                if (u < v) out.emplace_back(u, v);
            });
        return out;
    }

    Graph with_edge(int u, int v) const {
        check_pair(u, v);
        if (has_edge(u, v)) throw std::invalid_argument("edge already present " + pair_string({u, v}));
        Graph g = *this;
        g.set_edge(u, v);
        return g;
    }

    Graph without_edge(int u, int v) const {
        check_pair(u, v);
        if (!has_edge(u, v)) throw std::invalid_argument("edge not present " + pair_string({u, v}));
        Graph g = *this;
        g.clear_edge(u, v);
        return g;
    }

    bool is_regular() const {
        if (n_ == 0) return true;
        int d = degree(0);
        for (int v = 1; v < n_; ++v)
            if (degree(v) != d) return false;
        return true;
    }

    bool is_complete() const {
        return static_cast<long long>(m_) * 2 == static_cast<long long>(n_) * (n_ - 1);
    }

    bool operator==(const Graph&) const = default;

private:
    void check_pair(int u, int v) const {
        if (u < 0 || u >= n_ || v < 0 || v >= n_ || u == v)
            throw std::invalid_argument("invalid vertex pair " + pair_string({u, v}));
    }
    void set_edge(int u, int v) {
        bits_[static_cast<std::size_t>(u) * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
        bits_[static_cast<std::size_t>(v) * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
        ++m_;
    }
    void clear_edge(int u, int v) {
        bits_[static_cast<std::size_t>(u) * words_ + v / 64] &= ~(std::uint64_t{1} << (v % 64));
        bits_[static_cast<std::size_t>(v) * words_ + u / 64] &= ~(std::uint64_t{1} << (u % 64));
        --m_;
    }

    int n_ = 0;
    int m_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> bits_;
};

// n*s(G) = sum_v |n*deg(v) - 2m|, exact. Zero iff the graph is regular.
inline long long scaled_deviation(const Graph& g) {
    const long long n = g.vertex_count();
    const long long two_m = 2LL * g.edge_count();
    long long total = 0;
    for (int v = 0; v < n; ++v)
        total += std::abs(n * g.degree(v) - two_m);
    return total;
}

// The degree partition behind the rewriting lemmas: V-down holds vertices at
// or below average degree (ties go down), V-up the rest; e_down the edges
// inside V-down, non_edges_up the missing pairs inside V-up.
struct DegreePartition {
    std::vector<int> v_down;
    std::vector<int> v_up;
    std::vector<VertexPair> e_down;
    std::vector<VertexPair> non_edges_up;
    std::vector<char> up;  // up[v] != 0 iff v in v_up

    bool is_up(int v) const { return up[static_cast<std::size_t>(v)] != 0; }
};

inline DegreePartition degree_partition(const Graph& g) {
    if (g.vertex_count() < 1) throw std::invalid_argument("degree_partition: empty graph");
    const long long n = g.vertex_count();
    const long long two_m = 2LL * g.edge_count();
    DegreePartition p;
    p.up.assign(n, 0);
    for (int v = 0; v < n; ++v) {
        if (n * g.degree(v) > two_m) {
            p.up[v] = 1;
            p.v_up.push_back(v);
        } else {
            p.v_down.push_back(v);
        }
    }
    for (const auto& [u, v] : g.edges())
        if (!p.is_up(u) && !p.is_up(v)) p.e_down.emplace_back(u, v);
    for (std::size_t i = 0; i < p.v_up.size(); ++i)
        for (std::size_t j = i + 1; j < p.v_up.size(); ++j)
            if (!g.has_edge(p.v_up[i], p.v_up[j]))
                p.non_edges_up.emplace_back(p.v_up[i], p.v_up[j]);
    return p;
}

inline bool is_connected(const Graph& g) {
    const int n = g.vertex_count();
    if (n <= 1) return true;
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        g.for_each_neighbor(v, [&](int u) {
            if (!seen[u]) {
                seen[u] = 1;
                ++reached;
                stack.push_back(u);
            }
        });
    }
    return reached == n;
}

// Bridges of a connected graph via iterative low-link DFS.
inline std::vector<VertexPair> cut_edges(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("cut_edges: graph is disconnected");
    const int n = g.vertex_count();
    std::vector<VertexPair> bridges;
    if (n <= 1) return bridges;

    std::vector<std::vector<int>> adj(n);
    for (const auto& [u, v] : g.edges()) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<int> disc(n, -1), low(n, 0), parent(n, -1), next(n, 0);
    int timer = 0;
    std::vector<int> stack{0};
    disc[0] = low[0] = timer++;
    while (!stack.empty()) {
        int v = stack.back();
        if (next[v] < static_cast<int>(adj[v].size())) {
            int u = adj[v][next[v]++];
            if (u == parent[v]) continue;  // simple graph: single parent edge
            if (disc[u] == -1) {
                parent[u] = v;
                disc[u] = low[u] = timer++;
                stack.push_back(u);
            } else {
                low[v] = std::min(low[v], disc[u]);
            }
        } else {
            stack.pop_back();
            int p = parent[v];
            if (p >= 0) {
                low[p] = std::min(low[p], low[v]);
                if (low[v] > disc[p]) bridges.push_back(ordered_pair(p, v));
            }
        }
    }
    std::sort(bridges.begin(), bridges.end());
    return bridges;
}

}  // namespace degdev
