#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "netlap/generators.hpp"
#include "netlap/theorems.hpp"

using namespace netlap;

namespace {

SignedGraph balanced_c4() { return cycle_graph({1, 1, -1, -1}); }
SignedGraph unbalanced_c4() { return cycle_graph({1, 1, 1, -1}); }
SignedGraph bowtie() { return coalesce(complete_graph(3, 1), 0, complete_graph(3, 1), 0); }

}  // namespace

TEST_CASE("nullity bounds") {
    auto tree = nullity_bounds(random_tree(6, 0.5, 1));
    REQUIRE(tree.has_value());
    CHECK(tree->low == 1);
    CHECK(tree->high == 1);

    auto join = nullity_bounds(complete_join_neg(2));
    REQUIRE(join.has_value());
    CHECK(join->high == 3);
    CHECK(nullity(complete_join_neg(2)) == 3);

    auto uni = nullity_bounds(random_unicyclic(5, 4, 0.5, 2));
    REQUIRE(uni.has_value());
    CHECK(uni->high == 2);

    CHECK_FALSE(nullity_bounds(SignedGraph(1, {})).has_value());
    CHECK_FALSE(nullity_bounds(edgeless_graph(3)).has_value());

    for (std::uint64_t s = 0; s < 40; ++s) {
        SignedGraph g = random_connected(8, 0.4, 0.5, 10 + s);
        auto b = nullity_bounds(g);
        REQUIRE(b.has_value());
        int eta = nullity(g);
        CHECK(eta >= b->low);
        CHECK(eta <= b->high);
        CHECK(check_nullity_bounds(g).passed);
    }
}

TEST_CASE("cactus nullity prediction") {
    SignedGraph unb = random_cactus(18, 4, CycleSignProfile::Unbalanced, 3);
    CactusPrediction p1 = predict_cactus_nullity(unb);
    CHECK(p1.regime == CactusRegime::AllUnbalanced);
    CHECK(p1.predicted_nullity == 1);
    CHECK(nullity(unb) == 1);

    SignedGraph bal = random_cactus(18, 4, CycleSignProfile::Balanced, 3);
    CactusPrediction p2 = predict_cactus_nullity(bal);
    CHECK(p2.regime == CactusRegime::AllBalanced);
    CHECK(p2.predicted_nullity == cyclomatic_number(bal) + 1);
    CHECK(nullity(bal) == p2.predicted_nullity);

    // a balanced four-cycle glued to an all-positive triangle
    SignedGraph mix = coalesce(balanced_c4(), 0, complete_graph(3, 1), 0);
    CactusPrediction p3 = predict_cactus_nullity(mix);
    CHECK(p3.regime == CactusRegime::Mixed);
    CHECK(p3.balanced_cycle_count == 1);
    CHECK(p3.predicted_nullity == 2);
    CHECK(nullity(mix) == 2);

    // trees predict 1 with no cycles at all
    CactusPrediction p4 = predict_cactus_nullity(random_tree(7, 0.5, 9));
    CHECK(p4.predicted_nullity == 1);
    CHECK(p4.balanced_cycle_count == 0);

    CHECK_THROWS_AS(predict_cactus_nullity(theta_graph(2, 2, 2, {{1, 1}, {1, 1}, {1, 1}})),
                    input_error);

    for (std::uint64_t s = 0; s < 30; ++s) {
        SignedGraph g = random_cactus(20, 1 + static_cast<int>(s % 5),
                                      CycleSignProfile::Free, 500 + s);
        CHECK(check_cactus_prediction(g).passed);
    }
}

TEST_CASE("max nullity classification") {
    MaxNullityClassification j3 = classify_max_nullity(complete_join_neg(3));
    CHECK(j3.is_extremal());
    CHECK(nullity(complete_join_neg(3)) == 5);

    CHECK(classify_max_nullity(negate(complete_join_neg(2))).is_extremal());
    CHECK(classify_max_nullity(SignedGraph(2, {{0, 1, 1}})).is_extremal());

    MaxNullityClassification k4 = classify_max_nullity(complete_graph(4, 1));
    CHECK_FALSE(k4.is_extremal());
    CHECK(nullity(complete_graph(4, 1)) == 1);

    for (std::uint64_t s = 0; s < 40; ++s) {
        SignedGraph g = random_connected(6, 0.5, 0.5, 600 + s);
        CHECK(check_max_nullity_classification(g).passed);
    }
}

TEST_CASE("edge interlacing") {
    // all-positive triangle: {3,3,0} against the path {3,1,0}
    SignedGraph tri = complete_graph(3, 1);
    for (int i = 0; i < 3; ++i) CHECK(verify_interlacing(tri, {i}).passed);

    for (std::uint64_t s = 0; s < 25; ++s) {
        SignedGraph g = random_connected(8, 0.4, 0.5, 700 + s);
        for (int i = 0; i < g.edge_count(); ++i) {
            CHECK(verify_interlacing(g, {i}).passed);
            // directional top-eigenvalue consequence
            auto big = eigenvalues_float(net_laplacian(g));
            auto small = eigenvalues_float(net_laplacian(delete_edge(g, {i})));
            if (g.edges()[static_cast<std::size_t>(i)].sign > 0)
                CHECK(big[0] >= small[0] - 1e-7);
            else
                CHECK(small[0] >= big[0] - 1e-7);
        }
    }
}

TEST_CASE("edge deletion changes nullity by at most one") {
    SignedGraph tree = random_tree(6, 0.5, 11);
    CHECK(nullity(tree) == 1);
    CHECK(nullity(delete_edge(tree, {0})) == 2);
    CHECK(verify_edge_nullity_step(tree, {0}).passed);

    for (std::uint64_t s = 0; s < 30; ++s) {
        SignedGraph g = random_signed(7, 0.5, 0.5, 800 + s);
        for (int i = 0; i < g.edge_count(); ++i) CHECK(verify_edge_nullity_step(g, {i}).passed);
    }
}

TEST_CASE("cycle edge deletion in pure-regime cacti") {
    // balanced cycles: eta drops by exactly one; unbalanced: eta stays 1
    for (std::uint64_t s = 0; s < 15; ++s) {
        SignedGraph bal = random_cactus(16, 3, CycleSignProfile::Balanced, 900 + s);
        int eta = nullity(bal);
        CHECK(eta == cyclomatic_number(bal) + 1);
        for (const auto& cyc : cactus_cycles(bal))
            for (int ei : cyc.edge_indices)
                CHECK(nullity(delete_edge(bal, {ei})) == eta - 1);

        SignedGraph unb = random_cactus(16, 3, CycleSignProfile::Unbalanced, 950 + s);
        CHECK(nullity(unb) == 1);
        for (const auto& cyc : cactus_cycles(unb))
            for (int ei : cyc.edge_indices) CHECK(nullity(delete_edge(unb, {ei})) == 1);
    }
}

TEST_CASE("cut edge inequality") {
    SignedGraph two_triangles = bridge_join(complete_graph(3, 1), 0, complete_graph(3, 1), 0, 1);
    int bridge_idx = cut_edges(two_triangles).front().index;
    CHECK(verify_cut_edge_inequality(two_triangles, {bridge_idx}).passed);

    SignedGraph squares = bridge_join(balanced_c4(), 0, balanced_c4(), 0, -1);
    int sq_bridge = cut_edges(squares).front().index;
    CHECK(verify_cut_edge_inequality(squares, {sq_bridge}).passed);
    CHECK(nullity(squares) == 3);  // equality instance: 2 + 2 - 1

    SignedGraph k2(2, {{0, 1, -1}});
    CHECK(verify_cut_edge_inequality(k2, {0}).passed);

    // non-cut edge is inapplicable
    SignedGraph cyc = cycle_graph({1, 1, 1});
    CheckResult r = verify_cut_edge_inequality(cyc, {0});
    CHECK_FALSE(r.applicable);

    for (std::uint64_t s = 0; s < 20; ++s) {
        SignedGraph g = random_connected(8, 0.25, 0.5, 1100 + s);
        for (const auto& e : cut_edges(g)) CHECK(verify_cut_edge_inequality(g, e).passed);
    }
}

TEST_CASE("coalescence additivity") {
    CHECK(verify_coalescence(complete_graph(3, 1), 0, complete_graph(3, 1), 0).passed);
    CHECK(nullity(bowtie()) == 1);

    SignedGraph c4_tree = coalesce(balanced_c4(), 0, random_tree(5, 0.5, 13), 0);
    CHECK(nullity(c4_tree) == 2);
    CHECK(verify_coalescence(balanced_c4(), 0, random_tree(5, 0.5, 13), 0).passed);

    SignedGraph twin = coalesce(balanced_c4(), 1, balanced_c4(), 3);
    CHECK(nullity(twin) == 3);

    for (std::uint64_t s = 0; s < 25; ++s) {
        SignedGraph a = random_connected(6, 0.35, 0.5, 1200 + s);
        SignedGraph b = random_connected(5, 0.35, 0.5, 1300 + s);
        CHECK(verify_coalescence(a, static_cast<int>(s) % a.order(), b,
                                 static_cast<int>(s) % b.order())
                  .passed);
    }
}

TEST_CASE("tree inertia") {
    CHECK(verify_tree_inertia(path_graph({1, 1, 1})).passed);
    CHECK(verify_tree_inertia(star_graph({-1, -1, -1, -1})).passed);
    CHECK(inertia(net_laplacian(star_graph({-1, -1, -1, -1}))) == Inertia{0, 4, 1});
    CHECK(verify_tree_inertia(SignedGraph(1, {})).passed);
    CHECK_FALSE(verify_tree_inertia(cycle_graph({1, 1, 1})).applicable);

    for (std::uint64_t s = 0; s < 40; ++s)
        CHECK(verify_tree_inertia(random_tree(2 + static_cast<int>(s % 9), 0.5, 1400 + s)).passed);
}

TEST_CASE("verify_all on a healthy mix of graphs") {
    std::vector<SignedGraph> graphs = {
        random_tree(7, 0.5, 21),
        complete_join_neg(2),
        negate(complete_join_neg(3)),
        edgeless_graph(4),
        balanced_c4(),
        unbalanced_c4(),
        bowtie(),
        theta_graph(1, 3, 3, {{1}, {1, -1, -1}, {1, -1, -1}}),
        disjoint_union(complete_graph(3, 1), random_tree(4, 0.5, 5)),
        random_cactus(11, 2, CycleSignProfile::Mixed, 77),
    };
    for (const auto& g : graphs) {
        VerificationReport rep = verify_all(g);
        for (const auto& c : rep.checks) {
            INFO(c.name, " on ", canonical_graph_json(g), ": ", c.witness);
            CHECK((c.passed || !c.applicable));
        }
    }

    // specific applicability expectations
    VerificationReport tree_rep = verify_all(random_tree(6, 0.5, 22));
    auto has = [&](const std::string& name, bool applicable) {
        for (const auto& c : tree_rep.checks)
            if (c.name == name) return c.applicable == applicable;
        return false;
    };
    CHECK(has("nullity-bounds", true));
    CHECK(has("cactus-nullity-prediction", true));
    CHECK(has("tree-inertia", true));
    CHECK(has("nullity-one-iff-c1-nonzero", true));
    CHECK(has("component-additivity", false));

    VerificationReport edgeless_rep = verify_all(edgeless_graph(4));
    bool found = false;
    for (const auto& c : edgeless_rep.checks)
        if (c.name == "component-additivity") found = c.applicable && c.passed;
    CHECK(found);
    CHECK(nullity(edgeless_graph(4)) == 4);
}

TEST_CASE("verification report serialization") {
    VerificationReport rep = verify_all(complete_graph(3, 1));
    json j = rep.to_json();
    REQUIRE(j.is_array());
    for (const auto& item : j) {
        CHECK(item.contains("name"));
        CHECK(item.contains("applicable"));
        CHECK(item.contains("passed"));
        CHECK(item.contains("witness"));
    }
    CHECK(rep.all_passed());
    CHECK(rep.failed_count() == 0);
    CHECK(rep.applicable_count() > 5);
}
