#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "zagreb/constructors.hpp"
#include "zagreb/invariants.hpp"
#include "zagreb/theorems.hpp"

using namespace zagreb;

TEST_CASE("t1 threshold arithmetic is exact") {
    CHECK(t1_rhs(5, 2, 6, 2, 3) == 30);   // the K_{2,3} boundary
    CHECK(t1_rhs(6, 2, 9, 3, 3) == 54);   // the K_{3,3} boundary
    CHECK(t1_rhs(4, 2, 6, 3, 3) == 25);   // K_4 clears it with room
    CHECK(t1_rhs(5, 2, 5, 2, 2) == Rational(49, 3));  // C_5
    CHECK(t1_rhs(7, 3, 12, 3, 4) == 84);  // the K_{3,4} boundary

    CHECK_THROWS_AS(t1_rhs(4, 3, 6, 3, 3), std::invalid_argument);  // n-k-1 = 0
    CHECK_THROWS_AS(t1_rhs(5, 1, 6, 2, 3), std::invalid_argument);  // k < 2
    CHECK_THROWS_AS(t1_rhs(5, 2, 6, 0, 3), std::invalid_argument);  // delta = 0
    CHECK_THROWS_AS(t1_rhs(2, 2, 1, 1, 1), std::invalid_argument);  // n < 3
}

TEST_CASE("t2 threshold arithmetic is exact") {
    CHECK(t2_rhs(9, 3, 12, 1, 4) == 109);
    CHECK(t2_rhs(10, 4, 24, 4, 6) == 240);  // the K_{4,6} boundary
    CHECK(t2_rhs(9, 1, 9, 2, 2) == 60);     // C_9 at k = 1

    CHECK_THROWS_AS(t2_rhs(9, 7, 9, 1, 2), std::invalid_argument);  // n-k-2 = 0
    CHECK_THROWS_AS(t2_rhs(9, 0, 9, 2, 2), std::invalid_argument);  // k < 1
    CHECK_THROWS_AS(t2_rhs(9, 1, 9, 0, 2), std::invalid_argument);
}

TEST_CASE("t3 bound arithmetic is exact") {
    CHECK(t3_bound(5, 5, 2, 2, 2) == Rational(1201, 48));  // C_5, strict
    CHECK(t3_bound(5, 4, 1, 2, 3) == 14);                  // P_5, equality
    CHECK(t3_bound(5, 6, 2, 3, 3) == 30);                  // K_{2,3}, equality
    CHECK(t3_bound(5, 4, 1, 4, 4) == 20);                  // star K_{1,4}, equality

    CHECK_THROWS_AS(t3_bound(5, 4, 0, 2, 3), std::invalid_argument);  // delta = 0
    CHECK_THROWS_AS(t3_bound(5, 4, 1, 2, 5), std::invalid_argument);  // beta = n
    CHECK_THROWS_AS(t3_bound(5, 4, 1, 2, 0), std::invalid_argument);
}

TEST_CASE("theorem 1 on the boundary graph K_{2,3}") {
    TheoremVerdict v = check_theorem1(complete_bipartite(2, 3));
    CHECK(v.theorem == TheoremId::T1);
    CHECK(v.applicable);
    CHECK(v.k_used == 2);
    CHECK(v.lhs_m1 == 30);
    CHECK(v.rhs == 30);
    CHECK(v.condition_met);
    CHECK(!v.conclusion_holds);
    CHECK(v.exception == ExceptionalFamily::CompleteBipartiteKK1);
    CHECK(v.consistent);
}

TEST_CASE("theorem 1 on C_5: condition met, genuinely hamiltonian") {
    TheoremVerdict v = check_theorem1(cycle_graph(5));
    CHECK(v.applicable);
    CHECK(v.k_used == 2);
    CHECK(v.lhs_m1 == 20);
    CHECK(v.rhs == Rational(49, 3));
    CHECK(v.condition_met);
    CHECK(v.conclusion_holds);
    CHECK(v.exception == ExceptionalFamily::None);
    CHECK(v.consistent);
}

TEST_CASE("theorem 1 on K_4: kappa exceeds the k range but the guard holds") {
    TheoremVerdict v = check_theorem1(decode_graph6("C~"));  // kappa = 3, k capped at n-2 = 2
    CHECK(v.applicable);
    CHECK(v.k_used == 2);
    CHECK(v.lhs_m1 == 36);
    CHECK(v.rhs == 25);
    CHECK(v.condition_met);
    CHECK(v.conclusion_holds);
    CHECK(v.consistent);
}

TEST_CASE("theorem 1 triggers at the smallest k: K_{3,4} waits until k = 3") {
    TheoremVerdict v = check_theorem1(complete_bipartite(3, 4));
    CHECK(v.applicable);
    CHECK(v.k_used == 3);
    CHECK(v.lhs_m1 == 84);
    CHECK(v.rhs == 84);
    CHECK(v.condition_met);
    CHECK(!v.conclusion_holds);
    CHECK(v.exception == ExceptionalFamily::CompleteBipartiteKK1);
    CHECK(v.consistent);
}

TEST_CASE("theorem 1 on K_{3,3}: boundary arithmetic but hamiltonian anyway") {
    TheoremVerdict v = check_theorem1(complete_bipartite(3, 3));
    CHECK(v.k_used == 2);
    CHECK(v.lhs_m1 == 54);
    CHECK(v.rhs == 54);
    CHECK(v.condition_met);
    CHECK(v.conclusion_holds);
    CHECK(v.exception == ExceptionalFamily::None);
    CHECK(v.consistent);
}

TEST_CASE("theorem 1 inapplicability is explained") {
    TheoremVerdict p5 = check_theorem1(path_graph(5));
    CHECK(!p5.applicable);
    CHECK(p5.why_not == "kappa < 2");
    CHECK(p5.consistent);

    TheoremVerdict k2 = check_theorem1(path_graph(2));
    CHECK(!k2.applicable);
    CHECK(k2.why_not == "n < 3");
}

TEST_CASE("theorem 2 on the boundary graph K_{4,6}") {
    TheoremVerdict v = check_theorem2(complete_bipartite(4, 6));
    CHECK(v.theorem == TheoremId::T2);
    CHECK(v.applicable);
    CHECK(v.k_used == 4);
    CHECK(v.lhs_m1 == 240);
    CHECK(v.rhs == 240);
    CHECK(v.condition_met);
    CHECK(!v.conclusion_holds);  // K_{4,6} is not traceable
    CHECK(v.exception == ExceptionalFamily::CompleteBipartiteKK2);
    CHECK(v.consistent);
}

TEST_CASE("theorem 2 on C_9: condition unmet, vacuously consistent") {
    TheoremVerdict v = check_theorem2(cycle_graph(9));
    CHECK(v.applicable);
    CHECK(v.lhs_m1 == 36);
    CHECK(!v.condition_met);
    CHECK(v.rhs == Rational(7169, 160));  // min over k = 1, 2
    CHECK(v.conclusion_holds);            // traceable regardless
    CHECK(v.consistent);
}

TEST_CASE("theorem 2 needs n >= 9 and a connected graph") {
    CHECK(!check_theorem2(cycle_graph(8)).applicable);
    CHECK(check_theorem2(cycle_graph(8)).why_not == "n < 9");
    CHECK(!check_theorem2(Graph(9)).applicable);
    CHECK(check_theorem2(Graph(9)).why_not == "kappa < 1");
}

TEST_CASE("theorem 3 equality: P_5 lands in the PQ family") {
    Theorem3Outcome o = check_theorem3(path_graph(5));
    CHECK(o.verdict.lhs_m1 == 14);
    CHECK(o.verdict.rhs == 14);
    CHECK(o.verdict.condition_met);
    CHECK(o.verdict.conclusion_holds);
    CHECK(o.verdict.consistent);
    REQUIRE(o.certificate.has_value());
    CHECK(o.certificate->branch == EqualityCertificate::Branch::PQFamily);
    CHECK(o.certificate->I == (bit(0) | bit(2) | bit(4)));
    CHECK(popcount(o.certificate->P) == 1);
    CHECK(popcount(o.certificate->Q) == 2);
    CHECK(o.certificate->all_ok);
}

TEST_CASE("theorem 3 equality: complete bipartite branch") {
    for (auto [a, b] : {std::pair{2, 3}, {1, 4}, {2, 2}, {3, 3}}) {
        Theorem3Outcome o = check_theorem3(complete_bipartite(a, b));
        CHECK(o.verdict.condition_met);
        REQUIRE(o.certificate.has_value());
        CHECK(o.certificate->branch == EqualityCertificate::Branch::CompleteBipartite);
        CHECK(o.certificate->all_ok);
        CHECK(o.verdict.consistent);
        CHECK(popcount(o.certificate->I) == independence_number(complete_bipartite(a, b)));
    }
}

TEST_CASE("theorem 3 strict cases carry no certificate") {
    Theorem3Outcome c5 = check_theorem3(cycle_graph(5));
    CHECK(c5.verdict.lhs_m1 == 20);
    CHECK(c5.verdict.rhs == Rational(1201, 48));
    CHECK(!c5.verdict.condition_met);
    CHECK(!c5.certificate.has_value());
    CHECK(c5.verdict.consistent);

    Theorem3Outcome k4 = check_theorem3(decode_graph6("C~"));
    CHECK(k4.verdict.rhs == 63);
    CHECK(!k4.verdict.condition_met);

    // spider: center dominating 4 legs of length 2; integral PQ sizes but the
    // would-be outside degree falls below the P degree, so no equality
    Graph spider = from_edge_list(9, {{0, 1}, {0, 2}, {0, 3}, {0, 4},
                                      {1, 5}, {2, 6}, {3, 7}, {4, 8}});
    Theorem3Outcome sp = check_theorem3(spider);
    CHECK(sp.verdict.lhs_m1 == 36);
    CHECK(sp.verdict.rhs == 84);
    CHECK(!sp.verdict.condition_met);
    CHECK(!sp.certificate.has_value());
    CHECK(sp.verdict.consistent);
}

TEST_CASE("theorem 3 rejects minimum degree zero") {
    CHECK_THROWS_AS(check_theorem3(Graph(3)), std::invalid_argument);
    CHECK_THROWS_AS(check_theorem3(Graph(1)), std::invalid_argument);
}

TEST_CASE("complete bipartite recognizer") {
    auto id = [](const Graph& g) { return recognize_complete_bipartite(g); };
    CHECK(id(complete_bipartite(2, 3)) == std::pair{2, 3});
    CHECK(id(cycle_graph(4)) == std::pair{2, 2});
    CHECK(id(path_graph(3)) == std::pair{1, 2});
    CHECK(id(complete_bipartite(1, 5)) == std::pair{1, 5});
    Graph k2(2);
    k2.add_edge(0, 1);
    CHECK(id(k2) == std::pair{1, 1});
    CHECK(!id(cycle_graph(6)).has_value());  // bipartite but not complete
    CHECK(!id(decode_graph6("C~")).has_value());
    CHECK(!id(Graph(1)).has_value());
    CHECK(!id(Graph(4)).has_value());
    CHECK(!id(path_graph(4)).has_value());
}

TEST_CASE("chvatal-erdos hamiltonicity lemma") {
    LemmaOutcome c5 = chvatal_erdos_hamiltonian(cycle_graph(5));
    CHECK(c5.applicable);
    CHECK(c5.condition);  // beta = kappa = 2
    CHECK(c5.conclusion);
    CHECK(c5.consistent);

    LemmaOutcome k23 = chvatal_erdos_hamiltonian(complete_bipartite(2, 3));
    CHECK(k23.applicable);
    CHECK(!k23.condition);  // beta 3 > kappa 2
    CHECK(k23.consistent);

    CHECK(!chvatal_erdos_hamiltonian(path_graph(2)).applicable);
    LemmaOutcome pet = chvatal_erdos_hamiltonian(
        from_edge_list(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                            {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5},
                            {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}}));
    CHECK(!pet.condition);  // petersen: beta 4 > kappa 3
    CHECK(pet.consistent);
}

TEST_CASE("chvatal-erdos traceability lemma") {
    LemmaOutcome k23 = chvatal_erdos_traceable(complete_bipartite(2, 3));
    CHECK(k23.applicable);
    CHECK(k23.condition);  // beta 3 <= kappa + 1 = 3
    CHECK(k23.conclusion);
    CHECK(k23.consistent);

    LemmaOutcome single = chvatal_erdos_traceable(Graph(1));
    CHECK(single.applicable);
    CHECK(single.condition);  // beta 1 <= kappa 0 + 1
    CHECK(single.conclusion);

    LemmaOutcome claw = chvatal_erdos_traceable(complete_bipartite(1, 3));
    CHECK(!claw.condition);  // beta 3 > kappa + 1 = 2
    CHECK(claw.consistent);
}

TEST_CASE("moon-moser balanced bipartite lemma") {
    LemmaOutcome k33 = moon_moser_hamiltonian(complete_bipartite(3, 3));
    CHECK(k33.applicable);
    CHECK(k33.condition);  // no nonadjacent cross pairs at all
    CHECK(k33.conclusion);
    CHECK(k33.consistent);

    LemmaOutcome c6 = moon_moser_hamiltonian(cycle_graph(6));
    CHECK(c6.applicable);
    CHECK(c6.condition);  // 2 + 2 >= 6/2 + 1
    CHECK(c6.conclusion);

    LemmaOutcome c8 = moon_moser_hamiltonian(cycle_graph(8));
    CHECK(c8.applicable);
    CHECK(!c8.condition);  // 2 + 2 < 8/2 + 1
    CHECK(c8.consistent);

    CHECK(!moon_moser_hamiltonian(complete_bipartite(2, 3)).applicable);  // unbalanced
    CHECK(!moon_moser_hamiltonian(cycle_graph(5)).applicable);            // odd cycle

    // crown: K_{4,4} minus a perfect matching, 3-regular, passes the bound
    Graph cr(8);
    for (int u = 0; u < 4; ++u)
        for (int v = 4; v < 8; ++v)
            if (v - 4 != u) cr.add_edge(u, v);
    LemmaOutcome mm = moon_moser_hamiltonian(cr);
    CHECK(mm.applicable);
    CHECK(mm.condition);  // nonadjacent cross pairs sum to 6 >= 5
    CHECK(mm.conclusion);
    CHECK(mm.consistent);
}

TEST_CASE("jackson cycle bound") {
    JacksonOutcome c6 = jackson_cycle_bound(cycle_graph(6));
    CHECK(c6.applicable);
    CHECK(c6.promised_length == 4);
    CHECK(c6.circumference == 6);
    CHECK(c6.consistent);

    JacksonOutcome k23 = jackson_cycle_bound(complete_bipartite(2, 3));
    CHECK(k23.applicable);
    CHECK(k23.promised_length == 4);  // 2 min(|B|, s+t-1, 2s-2) = 2 min(2, 4, 2)
    CHECK(k23.circumference == 4);    // attained exactly
    CHECK(k23.consistent);

    JacksonOutcome k33 = jackson_cycle_bound(complete_bipartite(3, 3));
    CHECK(k33.promised_length == 6);  // tie: both orientations give 2 min(3, 5, 4)
    CHECK(k33.circumference == 6);

    CHECK(!jackson_cycle_bound(path_graph(5)).applicable);   // kappa 1
    CHECK(!jackson_cycle_bound(cycle_graph(5)).applicable);  // odd cycle
    CHECK_THROWS_AS(jackson_cycle_bound(complete_bipartite(9, 9)),
                    std::invalid_argument);  // n > 16
}

TEST_CASE("every theorem verdict is consistent on every small graph") {
    for (int n = 1; n <= 6; ++n)
        for_each_labeled(n, false, [](const Graph& g) {
            REQUIRE(check_theorem1(g).consistent);
            REQUIRE(check_theorem2(g).consistent);
            if (degree_profile(g).delta >= 1) {
                Theorem3Outcome o = check_theorem3(g);
                REQUIRE(o.verdict.consistent);
                REQUIRE(o.verdict.conclusion_holds);
                REQUIRE(o.certificate.has_value() == o.verdict.condition_met);
            }
            REQUIRE(chvatal_erdos_hamiltonian(g).consistent);
            REQUIRE(chvatal_erdos_traceable(g).consistent);
            REQUIRE(moon_moser_hamiltonian(g).consistent);
            REQUIRE(jackson_cycle_bound(g).consistent);
        });
    for (std::uint64_t mask = 0; mask < labeled_graph_count(7); mask += 257) {
        Graph g = graph_from_mask(7, mask);
        REQUIRE(check_theorem1(g).consistent);
        REQUIRE(chvatal_erdos_hamiltonian(g).consistent);
        REQUIRE(chvatal_erdos_traceable(g).consistent);
        REQUIRE(moon_moser_hamiltonian(g).consistent);
        REQUIRE(jackson_cycle_bound(g).consistent);
        if (degree_profile(g).delta >= 1) REQUIRE(check_theorem3(g).verdict.consistent);
    }
}
