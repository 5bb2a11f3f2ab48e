#include <catch2/catch_amalgamated.hpp>

#include "sgstar/bounds.hpp"
#include "sgstar/constructions.hpp"
#include "sgstar/srg.hpp"

using namespace sgstar;

namespace {
const SignedGraph kC4 = SignedGraph::build(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 0, 1}});
const SignedGraph kC5 =
    SignedGraph::build(5, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 4, 1}, {4, 0, 1}});

// All signed graphs on n vertices, one sign assignment per pair.
template <typename Fn>
void for_each_signed_graph(int n, Fn&& fn) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    std::vector<int> choice(pairs.size(), 0);
    while (true) {
        std::vector<std::tuple<int, int, int>> edges;
        for (size_t p = 0; p < pairs.size(); ++p)
            if (choice[p] != 0) edges.emplace_back(pairs[p].first, pairs[p].second,
                                                   choice[p] == 1 ? 1 : -1);
        fn(SignedGraph::build(n, edges));
        size_t pos = 0;
        while (pos < choice.size() && choice[pos] == 2) choice[pos++] = 0;
        if (pos == choice.size()) break;
        ++choice[pos];
    }
}
}  // namespace

TEST_CASE("signed common sum", "[srg]") {
    SignedGraph q = quadrangle(1);
    // pair (0,2): sigma(10)sigma(12) + sigma(30)sigma(32) = (-1)(1) + (1)(1) = 0
    CHECK(signed_common_sum(q, 0, 2) == 0);
    // adjacent pair in a quadrangle has no common neighbours
    CHECK(signed_common_sum(q, 0, 1) == 0);

    SignedGraph tri = SignedGraph::build(3, {{0, 1, 1}, {1, 2, 1}, {2, 0, 1}});
    CHECK(signed_common_sum(tri, 0, 1) == 1);

    CHECK_THROWS_AS(signed_common_sum(q, 1, 1), SameVertex);
}

TEST_CASE("signed common sum equals the off-diagonal of A^2", "[srg][property]") {
    for (uint64_t seed = 1; seed <= 20; ++seed) {
        SignedGraph g = random_signed_graph(4 + static_cast<int>(seed % 5), 0.6, 0.5, seed * 3);
        const int n = g.order();
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (i == j) continue;
                long a2 = 0;
                for (int u = 0; u < n; ++u) a2 += g.sign(i, u) * g.sign(u, j);
                CHECK(signed_common_sum(g, i, j) == a2);
            }
    }
}

TEST_CASE("srg_check on the stock examples", "[srg]") {
    // quadrangle: all three classes populated, parameters (0, 0, 0)
    SrgCheckResult r = srg_check(quadrangle(1));
    REQUIRE(r.accepted);
    CHECK(r.params.degree == 2);
    CHECK(!r.params.net_degree);
    CHECK(!r.params.a.vacuous);
    CHECK(r.params.a.value == 0);
    CHECK(!r.params.b.vacuous);
    CHECK(r.params.b.value == 0);
    CHECK(!r.params.c.vacuous);
    CHECK(r.params.c.value == 0);
    CHECK(half_sum_consequence_check(r.params));

    // homogeneous complete graphs are excluded by condition (i)
    SignedGraph k3 = SignedGraph::build(3, {{0, 1, 1}, {1, 2, 1}, {2, 0, 1}});
    CHECK(!srg_check(k3).accepted);
    CHECK(srg_check(k3).rejection == "homogeneous complete");
    CHECK(!srg_check(negation(k3)).accepted);
    CHECK(!srg_check(SignedGraph(4)).accepted);

    // all-positive C4: a = 0, b vacuous, c = 2
    r = srg_check(kC4);
    REQUIRE(r.accepted);
    CHECK(r.params.net_degree == 2);
    CHECK(r.params.a.value == 0);
    CHECK(r.params.b.vacuous);
    CHECK(r.params.c.value == 2);
    CHECK_THROWS_AS(half_sum_consequence_check(r.params), VacuousClass);

    // irregular graphs are rejected
    CHECK(!srg_check(SignedGraph::build(3, {{0, 1, 1}})).accepted);
}

TEST_CASE("half-sum consequence 2c = a + b", "[srg]") {
    SrgParameters p;
    p.a = {false, 0};
    p.b = {false, 0};
    p.c = {false, 0};
    CHECK(half_sum_consequence_check(p));
    p.a = {false, 2};
    p.b = {false, -2};
    CHECK(half_sum_consequence_check(p));
    p.a = {false, 1};
    p.c = {false, 1};
    p.b = {false, 0};
    CHECK(!half_sum_consequence_check(p));
}

TEST_CASE("eigenvalue count classification", "[srg]") {
    // quadrangle is not net-regular: precondition fails
    CHECK_THROWS_AS(eigenvalue_count_check(quadrangle(1)), PreconditionFailed);

    // C4 = K_{2,2}: spectrum {2, 0^2, -2}, net-degree 2 simple
    CHECK(eigenvalue_count_check(kC4) == EigenvalueCountClass::ThreeWithSimpleNetDegree);

    // 2K2: spectrum {1^2, -1^2}, two eigenvalues
    SignedGraph two_k2 = SignedGraph::build(4, {{0, 1, 1}, {2, 3, 1}});
    CHECK(eigenvalue_count_check(two_k2) == EigenvalueCountClass::TwoEigenvalues);

    // C5: three eigenvalues with simple net-degree 2
    CHECK(eigenvalue_count_check(kC5) == EigenvalueCountClass::ThreeWithSimpleNetDegree);
}

TEST_CASE("exhaustive small search: accepted net-regular SRGs classify cleanly",
          "[srg][property]") {
    int found = 0, strict = 0;
    for (int n = 3; n <= 5; ++n) {
        for_each_signed_graph(n, [&](const SignedGraph& g) {
            SrgCheckResult r = srg_check(g);
            if (!r.accepted || !r.params.net_degree) return;
            bool evaluable =
                !r.params.a.vacuous && !r.params.b.vacuous && !r.params.c.vacuous;
            if (evaluable && !half_sum_consequence_check(r.params)) return;
            ++found;
            EigenvalueCountClass cls = eigenvalue_count_check(g);
            if (evaluable && half_sum_consequence_check(r.params)) {
                ++strict;
                CHECK(cls != EigenvalueCountClass::Violation);
            }
            // three-eigenvalue witnesses also satisfy the Seidel-analogue bound
            if (cls == EigenvalueCountClass::ThreeWithSimpleNetDegree) {
                BoundReport sb = seidel_absolute_check(spectrum(g), *r.params.net_degree);
                if (sb.applicable) CHECK(sb.holds);
            }
        });
    }
    // the all-positive cycles C4 and C5 are among the witnesses
    CHECK(found > 0);
    INFO("strict instances: " << strict);
}

TEST_CASE("E8 Gram graph is a strongly regular signed graph", "[srg][e8]") {
    // With N the matrix of positive roots, N N^T = 30 I forces
    // A^2 = 26 A + 56 I, so the class sums are (a, b, c) = (26, -26, 0).
    SignedGraph g = e8_signed_graph();
    SrgCheckResult r = srg_check(g);
    REQUIRE(r.accepted);
    CHECK(r.params.degree == 56);
    CHECK(!r.params.net_degree);
    CHECK(r.params.a.value == 26);
    CHECK(r.params.b.value == -26);
    CHECK(r.params.c.value == 0);
    CHECK(half_sum_consequence_check(r.params));
}

TEST_CASE("net-regular witness", "[srg]") {
    // already net-regular: the empty switching set
    auto w = net_regular_witness(kC4);
    REQUIRE(w);
    CHECK(w->first.empty());
    CHECK(w->second == 2);

    // a switched 4-cycle switches back
    SignedGraph s = switched(kC4, VertexSet({0}));
    CHECK(!is_net_regular(s));
    w = net_regular_witness(s);
    REQUIRE(w);
    SignedGraph recovered = switched(s, w->first);
    CHECK(is_net_regular(recovered) == w->second);
    CHECK(w->second == 2);

    // the quadrangle has no net-regular representative: its spectrum {+-sqrt(2)}
    // contains no integer
    CHECK(!net_regular_witness(quadrangle(1)));
}

TEST_CASE("witness satisfies the eigenvector identity", "[srg][property]") {
    for (uint64_t seed = 1; seed <= 25; ++seed) {
        SignedGraph g = random_signed_graph(6, 0.5, 0.5, seed * 41);
        auto w = net_regular_witness(g);
        if (!w) continue;
        SignedGraph s = switched(g, w->first);
        auto net = is_net_regular(s);
        REQUIRE(net);
        CHECK(*net == w->second);
        // rho appears in the spectrum
        CHECK(multiplicity(g, ExactScalar(w->second)) >= 1);
    }
}

TEST_CASE("on a net-regular representative every other eigenvalue is non-main",
          "[srg][property]") {
    // the all-ones vector spans into the net-degree eigenspace, so the
    // decremented cubic bound applies to every eigenvalue mu != rho outside
    // the excluded set whenever its multiplicity is below n - 1
    int applied = 0;
    for (uint64_t seed = 1; seed <= 30; ++seed) {
        SignedGraph g = random_signed_graph(6, 0.55, 0.4, seed * 911);
        auto w = net_regular_witness(g);
        if (!w) continue;
        SignedGraph rep = switched(g, w->first);
        for (const auto& d : exact_eigenvalues(rep)) {
            if (is_excluded_eigenvalue(d.value) || d.value == ExactScalar(w->second)) continue;
            CHECK(!is_main(rep, d.value));
            BoundReport r = nonmain_bound_check(rep, d.value);
            if (d.multiplicity < rep.order() - 1) {
                CHECK(r.applicable);
                CHECK(r.holds);
                ++applied;
            }
        }
    }
    CHECK(applied > 0);
}

TEST_CASE("srg_check runs on switched graphs without error", "[srg][property]") {
    for (uint64_t seed = 1; seed <= 10; ++seed) {
        SignedGraph g = random_signed_graph(6, 0.6, 0.4, seed);
        srg_check(g);
        srg_check(switched(g, VertexSet({0, 3})));
    }
    SUCCEED("no exceptions");
}
