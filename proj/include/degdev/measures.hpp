#pragma once

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

#include "degdev/graph.hpp"
#include "degdev/rational.hpp"

namespace degdev {

// Albertson irregularity: sum over edges of |deg(u) - deg(v)|.
inline long long albertson_irregularity(const Graph& g) {
    long long total = 0;
    for (const auto& [u, v] : g.edges())
        total += std::abs(g.degree(u) - g.degree(v));
    return total;
}

// Total irregularity: sum over unordered vertex pairs of |deg(u) - deg(v)|,
// computed from the sorted degree sequence with prefix sums.
inline long long total_irregularity(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<long long> deg(n);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
    std::sort(deg.begin(), deg.end());
    long long total = 0, prefix = 0;
    for (int i = 0; i < n; ++i) {
        total += deg[i] * i - prefix;
        prefix += deg[i];
    }
    return total;
}

// Largest adjacency eigenvalue of a connected graph by power iteration on
// A + I (the shift keeps the dominant eigenvalue strictly separated even for
// bipartite graphs, where -mu matches mu in modulus). All-ones start vector,
// Rayleigh-quotient convergence test.
inline double spectral_radius(const Graph& g, double tolerance = 1e-9) {
    if (tolerance <= 0) throw std::invalid_argument("tolerance must be positive");
    if (!is_connected(g)) throw std::invalid_argument("spectral_radius: graph is disconnected");
    const int n = g.vertex_count();
    if (n == 1) return 0.0;

    constexpr int kIterationCap = 100000;
    std::vector<double> x(n, 1.0), y(n);
    double estimate = 0.0;
    for (int iter = 0; iter < kIterationCap; ++iter) {
        for (int v = 0; v < n; ++v) {
            double acc = x[v];
            g.for_each_neighbor(v, [&](int u) { acc += x[u]; });
            y[v] = acc;
        }
        double num = 0.0, den = 0.0, norm = 0.0;
        for (int v = 0; v < n; ++v) {
            num += x[v] * y[v];
            den += x[v] * x[v];
            norm += y[v] * y[v];
        }
        double rq = num / den;
        norm = std::sqrt(norm);
        for (int v = 0; v < n; ++v) x[v] = y[v] / norm;
        if (iter > 0 && std::abs(rq - estimate) < tolerance) return rq - 1.0;
        estimate = rq;
    }
    throw std::runtime_error("spectral_radius: no convergence after iteration cap, last estimate " +
                             std::to_string(estimate - 1.0));
}

// Nikiforov's sandwich:  s^2/(2 n^2 sqrt(2m))  <=  mu - 2m/n  <=  sqrt(s).
struct SpectralBoundReport {
    double mu;
    Rational average_degree;
    double lower;
    double gap;
    double upper;
    bool holds;
};

inline SpectralBoundReport nikiforov_bounds(const Graph& g, double tolerance = 1e-9) {
    if (g.edge_count() < 1) throw std::invalid_argument("nikiforov_bounds: graph has no edges");
    const double n = g.vertex_count();
    const double m = g.edge_count();
    const double s = static_cast<double>(scaled_deviation(g)) / n;

    SpectralBoundReport r;
    r.mu = spectral_radius(g, tolerance);
    r.average_degree = Rational(2LL * g.edge_count(), g.vertex_count());
    r.lower = s * s / (2.0 * n * n * std::sqrt(2.0 * m));
    r.gap = r.mu - to_double(r.average_degree);
    r.upper = std::sqrt(s);
    r.holds = r.lower <= r.gap + tolerance && r.gap <= r.upper + tolerance;
    return r;
}

}  // namespace degdev
