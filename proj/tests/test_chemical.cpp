#include <catch2/catch_amalgamated.hpp>

#include "degdev/chemical.hpp"
#include "degdev/enumeration.hpp"
#include "degdev/families.hpp"

using namespace degdev;

TEST_CASE("degree_counts examples") {
    ChemicalCounts star = degree_counts(complete_split(4, 1));
    CHECK(star.n1 == 3);
    CHECK(star.n3 == 1);
    CHECK(star.c == 0);

    ChemicalCounts cyc = degree_counts(make_cycle(5));
    CHECK(cyc.n2 == 5);
    CHECK(cyc.c == 1);

    CHECK_THROWS_WITH(degree_counts(complete_split(6, 6)),
                      Catch::Matchers::ContainsSubstring("not a chemical graph"));
    CHECK_THROWS_AS(degree_counts(Graph::from_edges(4, {{0, 1}, {2, 3}})), std::invalid_argument);
}

TEST_CASE("degree-count identity") {
    auto [n1, n2] = n1_n2_from_identity(0, 6, 1, 0);  // a tree with one degree-3 vertex
    CHECK(n1 == 3);
    CHECK(n2 == 2);
    CHECK_THROWS_WITH(n1_n2_from_identity(5, 4, 0, 0),
                      Catch::Matchers::ContainsSubstring("infeasible"));
}

TEST_CASE("closed forms on hand-checked graphs") {
    CHECK(s_chemical_tree(4, 1, 0) == Rational(3));                      // star K_{1,3}
    CHECK(s_chemical_tree(4, 0, 0) == Rational(2));                      // path P4
    CHECK(s_unicyclic_chemical(1, 0) == Rational(2));                    // triangle + pendant
    CHECK(s_unicyclic_chemical(0, 0) == Rational(0));                    // any cycle
    CHECK(s_chemical(4, 2, 2, 0) == Rational(2));                       // two triangles sharing an edge
    CHECK(s_chemical(4, 3, 4, 0) == Rational(0));                       // K4, n = 2c-2 branch
    CHECK_THROWS_AS(s_chemical(4, 1, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(s_chemical(3, 6, 0, 0), std::invalid_argument);
}

TEST_CASE("closed forms match the deviation on every small chemical graph") {
    for (int n = 2; n <= 7; ++n) {
        enumerate_connected(n, [&](const Graph& g) {
            for (int v = 0; v < n; ++v)
                if (g.degree(v) > 4) return;
            ChemicalCounts counts = degree_counts(g);
            auto [n1, n2] = n1_n2_from_identity(counts.c, counts.n, counts.n3, counts.n4);
            REQUIRE(n1 == counts.n1);
            REQUIRE(n2 == counts.n2);

            Rational s(scaled_deviation(g), n);
            if (counts.c == 0)
                REQUIRE(s == s_chemical_tree(n, counts.n3, counts.n4));
            else if (counts.c == 1)
                REQUIRE(s == s_unicyclic_chemical(counts.n3, counts.n4));
            else
                REQUIRE(s == s_chemical(n, counts.c, counts.n3, counts.n4));
        });
    }
}

TEST_CASE("trees sit above the path lower bound") {
    for (int n = 3; n <= 8; ++n) {
        for_each_labeled_tree(n, [&](const Graph& t) {
            long long ns = scaled_deviation(t);
            REQUIRE(ns >= 4LL * (n - 2));
            bool is_path = true;
            for (int v = 0; v < n; ++v)
                if (t.degree(v) > 2) is_path = false;
            REQUIRE((ns == 4LL * (n - 2)) == is_path);
        });
    }
}

TEST_CASE("chemical_feasible") {
    CHECK(chemical_feasible(5, 0));
    CHECK(chemical_feasible(5, 5));
    CHECK_FALSE(chemical_feasible(5, 8));   // m would exceed 2n
    CHECK_FALSE(chemical_feasible(4, 4));   // m would exceed C(4,2)
    CHECK_FALSE(chemical_feasible(2, 0));
}

TEST_CASE("random_chemical_graph postconditions and determinism") {
    for (int n : {4, 7, 12, 20})
        for (int c = 0; c <= n + 1; ++c) {
            if (!chemical_feasible(n, c)) continue;
            Graph g = random_chemical_graph(n, c, 42);
            REQUIRE(g.vertex_count() == n);
            REQUIRE(g.edge_count() == n + c - 1);
            REQUIRE(is_connected(g));
            for (int v = 0; v < n; ++v) REQUIRE(g.degree(v) <= 4);
            REQUIRE(random_chemical_graph(n, c, 42) == g);
        }
    CHECK_THROWS_AS(random_chemical_graph(5, 8, 1), std::invalid_argument);
}
