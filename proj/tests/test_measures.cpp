#include <catch2/catch_amalgamated.hpp>

#include "degdev/enumeration.hpp"
#include "degdev/families.hpp"
#include "degdev/measures.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

using namespace degdev;

TEST_CASE("albertson_irregularity examples") {
    CHECK(albertson_irregularity(make_cycle(5)) == 0);
    CHECK(albertson_irregularity(make_path(4)) == 2);
    CHECK(albertson_irregularity(complete_split(4, 1)) == 6);   // star K_{1,3}
    CHECK(albertson_irregularity(complete_split(6, 2)) == 24);
}

TEST_CASE("total_irregularity examples") {
    CHECK(total_irregularity(make_cycle(6)) == 0);
    CHECK(total_irregularity(make_path(4)) == 4);
    CHECK(total_irregularity(complete_split(4, 1)) == 6);
}

namespace {
long long total_irregularity_naive(const Graph& g) {
    long long total = 0;
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = u + 1; v < g.vertex_count(); ++v)
            total += std::abs(g.degree(u) - g.degree(v));
    return total;
}
}  // namespace

TEST_CASE("total_irregularity matches the naive pair sum") {
    for (int n = 2; n <= 6; ++n)
        enumerate_connected(n, [&](const Graph& g) {
            REQUIRE(total_irregularity(g) == total_irregularity_naive(g));
        });
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 5 + static_cast<int>(rng() % 30);
        std::vector<VertexPair> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 4 == 0) edges.emplace_back(u, v);
        Graph g = Graph::from_edges(n, edges);
        CHECK(total_irregularity(g) == total_irregularity_naive(g));
    }
}

TEST_CASE("measures are invariant under relabeling") {
    std::mt19937_64 rng(13);
    Graph g = pendant_split(9, 4);
    const int n = g.vertex_count();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (int trial = 0; trial < 10; ++trial) {
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<VertexPair> edges;
        for (const auto& [u, v] : g.edges()) edges.push_back(ordered_pair(perm[u], perm[v]));
        Graph h = Graph::from_edges(n, edges);
        CHECK(scaled_deviation(h) == scaled_deviation(g));
        CHECK(albertson_irregularity(h) == albertson_irregularity(g));
        CHECK(total_irregularity(h) == total_irregularity(g));
    }
}

TEST_CASE("spectral_radius on graphs with known eigenvalues") {
    CHECK_THAT(spectral_radius(make_cycle(4)), Catch::Matchers::WithinAbs(2.0, 1e-7));
    CHECK_THAT(spectral_radius(complete_split(4, 1)), Catch::Matchers::WithinAbs(std::sqrt(3.0), 1e-7));
    CHECK_THAT(spectral_radius(complete_split(4, 4)), Catch::Matchers::WithinAbs(3.0, 1e-7));
    CHECK_THAT(spectral_radius(make_path(2)), Catch::Matchers::WithinAbs(1.0, 1e-7));
    CHECK(spectral_radius(Graph::from_edges(1, {})) == 0.0);
    CHECK_THROWS_AS(spectral_radius(Graph::from_edges(3, {})), std::invalid_argument);
    CHECK_THROWS_AS(spectral_radius(make_path(3), -1.0), std::invalid_argument);
}

TEST_CASE("nikiforov_bounds holds across small connected graphs") {
    for (int n = 2; n <= 6; ++n)
        enumerate_connected(n, [&](const Graph& g) {
            SpectralBoundReport r = nikiforov_bounds(g, 1e-6);
            REQUIRE(r.holds);
            REQUIRE(r.lower <= r.gap + 1e-6);
            REQUIRE(r.gap <= r.upper + 1e-6);
        });
}

TEST_CASE("nikiforov_bounds report fields on a star") {
    SpectralBoundReport r = nikiforov_bounds(complete_split(4, 1), 1e-9);
    CHECK(r.average_degree == Rational(3, 2));
    CHECK_THAT(r.mu, Catch::Matchers::WithinAbs(std::sqrt(3.0), 1e-7));
    CHECK_THAT(r.upper, Catch::Matchers::WithinAbs(std::sqrt(3.0), 1e-7));  // s = 3
    CHECK(r.holds);
    CHECK_THROWS_AS(nikiforov_bounds(Graph::from_edges(1, {})), std::invalid_argument);
}
