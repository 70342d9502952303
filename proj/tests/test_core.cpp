#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "netlap/generators.hpp"
#include "netlap/json_io.hpp"
#include "netlap/signed_graph.hpp"
#include "netlap/structure.hpp"

using namespace netlap;

namespace {

IntMatrix mat2(long long a, long long b, long long c, long long d) {
    IntMatrix m(2);
    m(0, 0) = a;
    m(0, 1) = b;
    m(1, 0) = c;
    m(1, 1) = d;
    return m;
}

}  // namespace

TEST_CASE("construction validates and canonicalizes") {
    SignedGraph g(3, {{2, 0, 1}, {1, 2, -1}});
    CHECK(g.edges()[0].u == 0);
    CHECK(g.edges()[0].v == 2);
    CHECK(g.edges()[1].u == 1);
    CHECK_THROWS_AS(SignedGraph(3, {{0, 0, 1}}), input_error);           // loop
    CHECK_THROWS_AS(SignedGraph(3, {{0, 1, 1}, {1, 0, -1}}), input_error);  // duplicate pair
    CHECK_THROWS_AS(SignedGraph(3, {{0, 3, 1}}), input_error);           // out of range
    CHECK_THROWS_AS(SignedGraph(3, {{0, 1, 2}}), input_error);           // bad sign
    CHECK_THROWS_AS(SignedGraph(-1, {}), input_error);
}

TEST_CASE("net degree") {
    SignedGraph lonely(4, {{1, 2, 1}});
    CHECK(net_degree(lonely, 0) == 0);
    SignedGraph triangle = complete_graph(3, 1);
    CHECK(net_degree(triangle, 0) == 2);
    SignedGraph star = star_graph({1, 1, -1});
    CHECK(net_degree(star, 0) == 1);
    CHECK_THROWS_AS(net_degree(star, 7), input_error);
}

TEST_CASE("adjacency and net Laplacian of single edges") {
    SignedGraph pos(2, {{0, 1, 1}});
    SignedGraph neg(2, {{0, 1, -1}});
    CHECK(adjacency_matrix(pos) == mat2(0, 1, 1, 0));
    CHECK(adjacency_matrix(neg) == mat2(0, -1, -1, 0));
    CHECK(net_laplacian(pos) == mat2(1, -1, -1, 1));
    CHECK(net_laplacian(neg) == mat2(-1, 1, 1, -1));
}

TEST_CASE("net Laplacian of the negated clique join is the rank-1 sign block matrix") {
    // negate(K2 join K2) has two all-negative cliques with positive cross
    // edges; its net Laplacian is the all +-1 matrix with +1 blocks on the
    // diagonal, which visibly has rank 1.
    IntMatrix lap = net_laplacian(negate(complete_join_neg(2)));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            bool same_part = (i < 2) == (j < 2);
            CHECK(lap(i, j) == Bigint(same_part ? 1 : -1));
        }
    CHECK(net_laplacian(complete_join_neg(2)) == -lap);
}

TEST_CASE("net Laplacian invariants on random graphs") {
    for (std::uint64_t s = 0; s < 40; ++s) {
        SignedGraph g = random_signed(8, 0.45, 0.5, s);
        IntMatrix lap = net_laplacian(g);
        CHECK(lap.is_symmetric());
        for (int i = 0; i < g.order(); ++i) CHECK(lap.row_sum(i) == Bigint(0));
        CHECK(net_laplacian(negate(g)) == -lap);
        CHECK(adjacency_matrix(negate(g)) == -adjacency_matrix(g));
    }
}

TEST_CASE("negate is an involution") {
    SignedGraph g = random_signed(7, 0.5, 0.3, 99);
    CHECK(negate(negate(g)) == g);
    CHECK(negate(complete_graph(3, 1)) == complete_graph(3, -1));
}

TEST_CASE("delete_edge") {
    SignedGraph triangle = complete_graph(3, 1);
    SignedGraph path = delete_edge(triangle, {2});  // removes (1,2)
    CHECK(path.edge_count() == 2);
    CHECK(path.order() == 3);
    SignedGraph single(2, {{0, 1, -1}});
    CHECK(delete_edge(single, {0}).edge_count() == 0);
    CHECK_THROWS_AS(delete_edge(single, {1}), input_error);
}

TEST_CASE("induced subgraph relabels compactly") {
    SignedGraph triangle(3, {{0, 1, 1}, {0, 2, -1}, {1, 2, 1}});
    auto all = induced_subgraph(triangle, {0, 1, 2});
    CHECK(all.graph == triangle);
    CHECK(all.original_label == std::vector<int>{0, 1, 2});
    auto none = induced_subgraph(triangle, {});
    CHECK(none.graph.order() == 0);
    auto pair = induced_subgraph(triangle, {0, 2});
    CHECK(pair.graph.order() == 2);
    REQUIRE(pair.graph.edge_count() == 1);
    CHECK(pair.graph.edges()[0].sign == -1);
    CHECK(pair.original_label == std::vector<int>{0, 2});
}

TEST_CASE("coalesce") {
    SignedGraph e1(2, {{0, 1, 1}});
    SignedGraph p2 = coalesce(e1, 1, e1, 0);
    CHECK(p2.order() == 3);
    CHECK(p2.edge_count() == 2);
    SignedGraph bowtie = coalesce(complete_graph(3, 1), 0, complete_graph(3, 1), 0);
    CHECK(bowtie.order() == 5);
    CHECK(bowtie.edge_count() == 6);
    CHECK(bowtie.degree(0) == 4);
    // vertex/edge counting across random coalescences
    for (std::uint64_t s = 0; s < 10; ++s) {
        SignedGraph a = random_connected(5, 0.3, 0.5, s);
        SignedGraph b = random_connected(4, 0.3, 0.5, s + 50);
        SignedGraph c = coalesce(a, 2, b, 1);
        CHECK(c.order() == a.order() + b.order() - 1);
        CHECK(c.edge_count() == a.edge_count() + b.edge_count());
    }
}

TEST_CASE("complete_join_neg") {
    CHECK(complete_join_neg(1) == SignedGraph(2, {{0, 1, -1}}));
    CHECK_THROWS_AS(complete_join_neg(0), input_error);
    SignedGraph j2 = complete_join_neg(2);
    CHECK(j2.order() == 4);
    CHECK(j2.edge_count() == 6);
    for (const auto& e : j2.edges()) {
        bool same_part = (e.u < 2) == (e.v < 2);
        CHECK(e.sign == (same_part ? 1 : -1));
    }
}

TEST_CASE("generators are reproducible and hit their structural class") {
    CHECK(random_tree(8, 0.4, 5) == random_tree(8, 0.4, 5));
    CHECK(random_signed(8, 0.5, 0.5, 5) == random_signed(8, 0.5, 0.5, 5));
    CHECK(random_cactus(14, 3, CycleSignProfile::Mixed, 5) ==
          random_cactus(14, 3, CycleSignProfile::Mixed, 5));

    for (std::uint64_t s = 1; s <= 20; ++s) {
        SignedGraph t = random_tree(8, 0.4, s);
        CHECK(is_connected(t));
        CHECK(cyclomatic_number(t) == 0);
        CHECK(is_cactus(t));

        SignedGraph u = random_unicyclic(9, 3 + static_cast<int>(s % 4), 0.5, s);
        CHECK(cyclomatic_number(u) == 1);

        int cycles = 1 + static_cast<int>(s % 3);
        SignedGraph k = random_cactus(16, cycles, CycleSignProfile::Free, s);
        CHECK(is_cactus(k));
        CHECK(cyclomatic_number(k) == cycles);

        SignedGraph r = random_connected(9, 0.3, 0.5, s);
        CHECK(is_connected(r));
    }
}

TEST_CASE("cactus generator respects the requested cycle profile") {
    for (std::uint64_t s = 1; s <= 15; ++s) {
        auto balanced = cactus_cycles(random_cactus(20, 4, CycleSignProfile::Balanced, s));
        REQUIRE(balanced.size() == 4);
        for (const auto& c : balanced) CHECK(c.balanced_counts());
        auto unbalanced = cactus_cycles(random_cactus(20, 4, CycleSignProfile::Unbalanced, s));
        for (const auto& c : unbalanced) CHECK_FALSE(c.balanced_counts());
        auto mixed = cactus_cycles(random_cactus(20, 4, CycleSignProfile::Mixed, s));
        int bal = 0;
        for (const auto& c : mixed) bal += c.balanced_counts();
        CHECK(bal == 2);  // alternating profile on 4 cycles
    }
    CHECK_THROWS_AS(random_cactus(5, 3, CycleSignProfile::Balanced, 1), input_error);
}

TEST_CASE("theta graph") {
    SignedGraph t = theta_graph(2, 2, 2, {{1, 1}, {1, 1}, {1, 1}});
    CHECK(t.order() == 5);
    CHECK(t.edge_count() == 6);
    CHECK(cyclomatic_number(t) == 2);
    CHECK_FALSE(is_cactus(t));
    CHECK_THROWS_AS(theta_graph(1, 1, 2, {{1}, {1}, {1, 1}}), input_error);
    CHECK_THROWS_AS(theta_graph(0, 2, 2, {{}, {1, 1}, {1, 1}}), input_error);
    CHECK_THROWS_AS(theta_graph(2, 2, 2, {{1}, {1, 1}, {1, 1}}), input_error);
}

TEST_CASE("JSON round trip and canonical bytes") {
    SignedGraph g(3, {{1, 2, -1}, {0, 1, 1}});
    std::string s = canonical_graph_json(g);
    CHECK(s == "{\"edges\":[[0,1,1],[1,2,-1]],\"n\":3}");
    CHECK(parse_graph(s) == g);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        SignedGraph r = random_signed(7, 0.5, 0.5, seed);
        CHECK(parse_graph(canonical_graph_json(r)) == r);
    }
    CHECK_THROWS_AS(parse_graph("{"), input_error);
    CHECK_THROWS_AS(parse_graph("{\"n\":2}"), input_error);
    CHECK_THROWS_AS(parse_graph("{\"n\":2,\"edges\":[[0,1]]}"), input_error);
    CHECK_THROWS_AS(parse_graph("{\"n\":2,\"edges\":[[0,1,3]]}"), input_error);
}

TEST_CASE("expectations block") {
    auto e = expectations_from_json_text("{\"n\":2,\"edges\":[],\"expect\":{\"nullity\":2}}");
    REQUIRE(e.nullity.has_value());
    CHECK(*e.nullity == 2);
    auto e2 = expectations_from_json_text(
        "{\"n\":2,\"edges\":[],\"expect\":{\"charpoly\":[0,\"-2\",1]}}");
    REQUIRE(e2.charpoly.has_value());
    CHECK((*e2.charpoly)[1] == Bigint(-2));
    CHECK_FALSE(expectations_from_json_text("{\"n\":1,\"edges\":[]}").nullity.has_value());
}

TEST_CASE("DOT export distinguishes signs with dash style") {
    SignedGraph mixed(3, {{0, 1, 1}, {0, 2, 1}, {1, 2, -1}});
    std::string dot = to_dot(mixed);
    int node_lines = 0, solid = 0, dashed = 0;
    std::size_t pos = 0;
    while ((pos = dot.find('\n', pos)) != std::string::npos) {
        ++pos;
        std::size_t end = dot.find('\n', pos);
        std::string line = dot.substr(pos, end == std::string::npos ? end : end - pos);
        if (line.find("--") != std::string::npos) {
            if (line.find("dashed") != std::string::npos)
                ++dashed;
            else
                ++solid;
        } else if (line.find(';') != std::string::npos) {
            ++node_lines;
        }
    }
    CHECK(node_lines == 3);
    CHECK(solid == 2);
    CHECK(dashed == 1);
}
