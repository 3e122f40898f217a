#include <catch2/catch_amalgamated.hpp>

#include "degdev/enumeration.hpp"
#include "degdev/families.hpp"
#include "degdev/graph.hpp"

#include <random>
#include <set>

using namespace degdev;

TEST_CASE("make_graph builds the requested edges") {
    Graph p4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(p4.vertex_count() == 4);
    CHECK(p4.edge_count() == 3);
    CHECK(p4.degree(0) == 1);
    CHECK(p4.degree(1) == 2);
    CHECK(p4.degree(2) == 2);
    CHECK(p4.degree(3) == 1);
    CHECK(p4.has_edge(1, 0));

    Graph empty = Graph::from_edges(3, {});
    CHECK(empty.edge_count() == 0);
}

TEST_CASE("make_graph rejects malformed input") {
    CHECK_THROWS_WITH(Graph::from_edges(4, {{0, 0}}), Catch::Matchers::ContainsSubstring("(0,0)"));
    CHECK_THROWS_WITH(Graph::from_edges(4, {{0, 4}}), Catch::Matchers::ContainsSubstring("(0,4)"));
    CHECK_THROWS_WITH(Graph::from_edges(4, {{0, 1}, {1, 0}}),
                      Catch::Matchers::ContainsSubstring("duplicate"));
    CHECK_THROWS_AS(Graph::from_edges(3, {{-1, 2}}), std::invalid_argument);
}

TEST_CASE("scaled_deviation examples") {
    CHECK(scaled_deviation(make_cycle(4)) == 0);
    CHECK(scaled_deviation(make_path(4)) == 8);
    CHECK(scaled_deviation(complete_split(4, 1)) == 12);  // star K_{1,3}
    CHECK(scaled_deviation(complete_split(6, 2)) == 48);
}

TEST_CASE("degree_partition examples") {
    DegreePartition p = degree_partition(make_path(4));
    CHECK(p.v_down == std::vector<int>{0, 3});
    CHECK(p.v_up == std::vector<int>{1, 2});
    CHECK(p.e_down.empty());
    CHECK(p.non_edges_up.empty());

    DegreePartition reg = degree_partition(make_cycle(5));
    CHECK(reg.v_down.size() == 5);
    CHECK(reg.v_up.empty());

    DegreePartition star = degree_partition(complete_split(4, 1));
    CHECK(star.v_up == std::vector<int>{0});
    CHECK(star.v_down == std::vector<int>{1, 2, 3});
}

TEST_CASE("is_connected") {
    CHECK(is_connected(make_path(4)));
    CHECK_FALSE(is_connected(Graph::from_edges(3, {})));
    CHECK_FALSE(is_connected(Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}})));
}

TEST_CASE("cut_edges examples") {
    CHECK(cut_edges(make_path(5)).size() == 4);
    CHECK(cut_edges(make_cycle(6)).empty());
    Graph pendant_triangle = Graph::from_edges(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
    CHECK(cut_edges(pendant_triangle) == std::vector<VertexPair>{{2, 3}});
    CHECK_THROWS_AS(cut_edges(Graph::from_edges(3, {})), std::invalid_argument);
}

namespace {

// Naive bridge oracle: remove each edge, test connectivity.
std::vector<VertexPair> bridges_by_removal(const Graph& g) {
    std::vector<VertexPair> out;
    for (const auto& [u, v] : g.edges())
        if (!is_connected(g.without_edge(u, v))) out.emplace_back(u, v);
    return out;
}

}  // namespace

TEST_CASE("cut_edges agrees with the removal oracle on all connected graphs, n <= 7") {
    for (int n = 2; n <= 7; ++n) {
        long long checked = 0;
        enumerate_connected(n, [&](const Graph& g) {
            REQUIRE(cut_edges(g) == bridges_by_removal(g));
            ++checked;
        });
        CHECK(checked == kKnownConnectedCounts[n]);
    }
}

TEST_CASE("Euler identity and partition invariants over the exhaustive sweep") {
    for (int n = 1; n <= 7; ++n) {
        enumerate_connected(n, [&](const Graph& g) {
            long long degree_sum = 0;
            for (int v = 0; v < n; ++v) degree_sum += g.degree(v);
            REQUIRE(degree_sum == 2LL * g.edge_count());

            DegreePartition p = degree_partition(g);
            REQUIRE(p.v_down.size() + p.v_up.size() == static_cast<std::size_t>(n));
            // Lemma-style structure: V_down = V iff regular, V_up = V never.
            REQUIRE((p.v_up.empty()) == g.is_regular());
            REQUIRE(!p.v_down.empty());
            REQUIRE((scaled_deviation(g) == 0) == p.v_up.empty());
        });
    }
}

TEST_CASE("graphs wider than one machine word work") {
    Graph big = complete_split(150, 50);
    CHECK(big.edge_count() == 50 * 49 / 2 + 50 * 100);
    CHECK(is_connected(big));
    CHECK(big.degree(0) == 149);
    CHECK(big.degree(149) == 50);
    Rational s(scaled_deviation(big), 150);
    CHECK(s == s_complete_split(150, 50));
}
