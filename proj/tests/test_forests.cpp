#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "netlap/exact.hpp"
#include "netlap/forests.hpp"
#include "netlap/generators.hpp"
#include "netlap/structure.hpp"

using namespace netlap;

TEST_CASE("spanning forests of the triangle") {
    SignedGraph tri = complete_graph(3, 1);
    auto trees = spanning_k_forests(tri, 1);
    CHECK(trees.size() == 3);
    for (const auto& f : trees) {
        CHECK(f.edge_indices.size() == 2);
        CHECK(f.component_sizes == std::vector<int>{3});
        CHECK(f.weight == Bigint(3));
        CHECK(f.sign == 1);
    }
    auto pairs = spanning_k_forests(tri, 2);
    CHECK(pairs.size() == 3);
    for (const auto& f : pairs) {
        CHECK(f.edge_indices.size() == 1);
        std::vector<int> sizes = f.component_sizes;
        std::sort(sizes.begin(), sizes.end());
        CHECK(sizes == std::vector<int>{1, 2});
        CHECK(f.weight == Bigint(2));
    }
    auto all = spanning_k_forests(tri, 3);
    REQUIRE(all.size() == 1);
    CHECK(all[0].edge_indices.empty());
    CHECK(all[0].weight == Bigint(1));
}

TEST_CASE("spanning forests of the edgeless graph") {
    auto fs = spanning_k_forests(edgeless_graph(3), 3);
    REQUIRE(fs.size() == 1);
    CHECK(fs[0].component_sizes == std::vector<int>{1, 1, 1});
    CHECK(spanning_k_forests(edgeless_graph(3), 2).empty());
    CHECK(spanning_k_forests(edgeless_graph(3), 1).empty());
}

TEST_CASE("enumeration is lexicographic and sizes are consistent") {
    SignedGraph g = random_connected(7, 0.4, 0.5, 31);
    for (int k = 1; k <= g.order(); ++k) {
        auto fs = spanning_k_forests(g, k);
        for (std::size_t i = 0; i < fs.size(); ++i) {
            CHECK(static_cast<int>(fs[i].edge_indices.size()) == g.order() - k);
            CHECK(static_cast<int>(fs[i].component_sizes.size()) == k);
            CHECK(std::is_sorted(fs[i].edge_indices.begin(), fs[i].edge_indices.end()));
            if (i) CHECK(fs[i - 1].edge_indices < fs[i].edge_indices);
            Bigint w(1);
            for (int s : fs[i].component_sizes) w *= Bigint(s);
            CHECK(fs[i].weight == w);
            int sg = 1;
            for (int ei : fs[i].edge_indices) sg *= g.edges()[static_cast<std::size_t>(ei)].sign;
            CHECK(fs[i].sign == sg);
        }
    }
}

TEST_CASE("coefficients of the all-positive triangle by forest sums") {
    SignedGraph tri = complete_graph(3, 1);
    CHECK(coefficient_via_forests(tri, 0) == Bigint(0));
    CHECK(coefficient_via_forests(tri, 1) == Bigint(9));
    CHECK(coefficient_via_forests(tri, 2) == Bigint(-6));
    CHECK(coefficient_via_forests(tri, 3) == Bigint(1));
}

TEST_CASE("balanced four-cycle kills the linear coefficient") {
    CHECK(coefficient_via_forests(cycle_graph({1, 1, -1, -1}), 1) == Bigint(0));
    TreeSum ts = c1_tree_sum(cycle_graph({1, 1, 1, -1}));
    CHECK(ts.has_spanning_tree);
    CHECK(ts.sign_sum == Bigint(-2));
    CHECK(ts.c1 == Bigint(8));
}

TEST_CASE("tree sign sum for signed trees") {
    for (std::uint64_t s = 0; s < 30; ++s) {
        int n = 2 + static_cast<int>(s % 7);
        SignedGraph t = random_tree(n, 0.5, 500 + s);
        int sigma = 1;
        for (const auto& e : t.edges()) sigma *= e.sign;
        TreeSum ts = c1_tree_sum(t);
        Bigint expected = Bigint(n) * Bigint(sigma);
        if ((n - 1) % 2) expected = -expected;
        CHECK(ts.c1 == expected);
        CHECK(!ts.c1.is_zero());
        CHECK(ts.sign_sum == Bigint(sigma));
    }
}

TEST_CASE("disconnected graphs have no spanning trees") {
    SignedGraph u = disjoint_union(complete_graph(3, 1), complete_graph(3, -1));
    TreeSum ts = c1_tree_sum(u);
    CHECK_FALSE(ts.has_spanning_tree);
    CHECK(ts.sign_sum == Bigint(0));
    CHECK(ts.c1 == Bigint(0));
}

TEST_CASE("Cayley count of spanning trees of complete graphs") {
    for (int n = 3; n <= 7; ++n) {
        long count = 0;
        for_each_spanning_k_forest(complete_graph(n, 1), 1, [&](const SpanningForest&) { ++count; });
        long expected = 1;
        for (int i = 0; i < n - 2; ++i) expected *= n;
        CHECK(count == expected);
    }
}

TEST_CASE("forest sums reproduce every char poly coefficient") {
    // named fixtures
    std::vector<SignedGraph> fixtures = {
        complete_graph(3, 1),
        complete_graph(4, -1),
        cycle_graph({1, 1, -1, -1}),
        cycle_graph({1, -1, 1, -1, 1}),
        complete_join_neg(2),
        complete_join_neg(3),
        theta_graph(2, 2, 2, {{1, -1}, {1, -1}, {1, -1}}),
        theta_graph(1, 3, 3, {{1}, {1, -1, -1}, {1, -1, -1}}),
        star_graph({1, 1, -1, -1}),
        edgeless_graph(4),
        coalesce(complete_graph(3, 1), 0, complete_graph(3, 1), 0),
    };
    for (const auto& g : fixtures) {
        CharPoly direct = char_poly(net_laplacian(g));
        CharPoly oracle = char_poly_via_forests(g);
        CHECK(direct.coeffs == oracle.coeffs);
        for (int k = 0; k <= g.order(); ++k)
            CHECK(coefficient_via_forests(g, k) == direct.coeffs[static_cast<std::size_t>(k)]);
    }
    // random graphs, connected and not
    for (std::uint64_t s = 0; s < 40; ++s) {
        SignedGraph g = random_signed(6, 0.5, 0.5, 600 + s);
        CHECK(char_poly_via_forests(g).coeffs == char_poly(net_laplacian(g)).coeffs);
    }
}

TEST_CASE("nullity one exactly when the linear coefficient survives") {
    for (std::uint64_t s = 0; s < 40; ++s) {
        SignedGraph g = random_connected(7, 0.35, 0.5, 700 + s);
        TreeSum ts = c1_tree_sum(g);
        CHECK((nullity(g) == 1) == !ts.c1.is_zero());
    }
}

TEST_CASE("cap refuses oversized enumerations") {
    SignedGraph big = random_tree(13, 0.5, 1);
    CHECK_THROWS_AS(spanning_k_forests(big, 1), cap_error);
    CHECK_THROWS_AS(coefficient_via_forests(big, 1), cap_error);
    CHECK_THROWS_AS(char_poly_via_forests(big), cap_error);
    // explicit cap raise works
    CHECK(c1_tree_sum(big, 13).has_spanning_tree);
    CHECK_THROWS_AS(spanning_k_forests(big, -1, 13), input_error);
    CHECK_THROWS_AS(spanning_k_forests(big, 14, 13), input_error);
}
