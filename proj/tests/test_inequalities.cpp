#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "zagreb/constructors.hpp"
#include "zagreb/inequalities.hpp"

using namespace zagreb;

namespace {

PolyaSzegoInstance make(std::vector<Rational> a, std::vector<Rational> b,
                        Rational a_min, Rational a_max, Rational b_min, Rational b_max) {
    PolyaSzegoInstance inst;
    inst.a = std::move(a);
    inst.b = std::move(b);
    inst.a_min = std::move(a_min);
    inst.a_max = std::move(a_max);
    inst.b_min = std::move(b_min);
    inst.b_max = std::move(b_max);
    return inst;
}

}  // namespace

TEST_CASE("constant sequences sit exactly on the bound") {
    auto inst = make({1, 1, 1}, {1, 1, 1}, 1, 1, 1, 1);
    PolyaSzegoReport r = polya_szego_check(inst);
    CHECK(r.lhs == 9);
    CHECK(r.rhs == 9);
    CHECK(r.holds);
    CHECK(r.equality);
    CHECK(equality_pattern_matches(inst));  // degenerate bounds match trivially
}

TEST_CASE("the documented two-block instance attains equality") {
    auto inst = make({1, 1, 2, 2}, {2, 2, 1, 1}, 1, 2, 1, 2);
    PolyaSzegoReport r = polya_szego_check(inst);
    CHECK(r.lhs == 100);
    CHECK(r.rhs == 100);
    CHECK(r.equality);
    CHECK(r.nu == 2);
    CHECK(r.nu_integral);
    CHECK(equality_pattern_matches(inst));

    // same multiset, different order: the pattern is order-insensitive
    auto shuffled = make({2, 1, 2, 1}, {1, 2, 1, 2}, 1, 2, 1, 2);
    CHECK(polya_szego_check(shuffled).equality);
    CHECK(equality_pattern_matches(shuffled));
}

TEST_CASE("strictly interior entries keep the inequality strict") {
    auto inst = make({1, 2}, {1, 2}, 1, 2, 1, 2);
    PolyaSzegoReport r = polya_szego_check(inst);
    CHECK(r.lhs == 25);
    CHECK(r.rhs == Rational(625, 16));
    CHECK(r.holds);
    CHECK(!r.equality);
    CHECK(!equality_pattern_matches(inst));  // pairs (1,1) and (2,2) fit no block
    CHECK(r.nu == 1);
}

TEST_CASE("equality_instance realizes integral-nu parameters") {
    PolyaSzegoInstance inst = equality_instance(1, 2, 1, 2, 4);
    PolyaSzegoReport r = polya_szego_check(inst);
    CHECK(r.equality);
    CHECK(r.nu == 2);
    CHECK(equality_pattern_matches(inst));

    // nu = 3*2/(2+2) = 3/2: no equality instance exists for strict bounds
    CHECK_THROWS_AS(equality_instance(1, 2, 1, 2, 3), std::invalid_argument);

    // degenerate bounds bypass the integrality demand entirely
    PolyaSzegoInstance flat = equality_instance(2, 2, 3, 3, 5);
    CHECK(polya_szego_check(flat).equality);

    // nu = (2)(1/2)s / ((2)(1/2) + (1/2)(2)) = s/2, so s = 8 gives nu = 4
    PolyaSzegoInstance wide =
        equality_instance(Rational(1, 2), 2, Rational(1, 2), 2, 8);
    PolyaSzegoReport wr = polya_szego_check(wide);
    CHECK(wr.equality);
    CHECK(wr.nu == 4);
    CHECK(wr.nu_integral);
}

TEST_CASE("perturbing one entry off the block pattern breaks equality") {
    PolyaSzegoInstance inst = equality_instance(1, 2, 1, 2, 4);
    inst.a[0] = Rational(3, 2);  // interior value, bounds still respected
    PolyaSzegoReport r = polya_szego_check(inst);
    CHECK(r.holds);
    CHECK(!r.equality);
    CHECK(!equality_pattern_matches(inst));
}

TEST_CASE("malformed instances are rejected") {
    CHECK_THROWS_AS(polya_szego_check(make({}, {}, 1, 2, 1, 2)), std::invalid_argument);
    CHECK_THROWS_AS(polya_szego_check(make({1}, {1, 2}, 1, 2, 1, 2)),
                    std::invalid_argument);
    CHECK_THROWS_AS(polya_szego_check(make({3}, {1}, 1, 2, 1, 2)),
                    std::invalid_argument);  // entry above a_max
    CHECK_THROWS_AS(polya_szego_check(make({1}, {1}, 0, 2, 1, 2)),
                    std::invalid_argument);  // nonpositive bound
    CHECK_THROWS_AS(polya_szego_check(make({1}, {1}, 2, 1, 1, 2)),
                    std::invalid_argument);  // inverted bounds
    CHECK_THROWS_AS(equality_instance(1, 2, 1, 2, 0), std::invalid_argument);
}

TEST_CASE("degree sandwich on independent sets") {
    DegreeSandwich k23 = degree_sandwich(complete_bipartite(2, 3), bit(0) | bit(1));
    CHECK(k23.lower == 6);
    CHECK(k23.e == 6);
    CHECK(k23.upper == 6);
    CHECK(k23.tight_lower);
    CHECK(k23.tight_upper);

    DegreeSandwich c5 = degree_sandwich(cycle_graph(5), bit(0) | bit(2));
    CHECK(c5.lower == 4);
    CHECK(c5.e == 5);
    CHECK(c5.upper == 6);
    CHECK(!c5.tight_lower);
    CHECK(!c5.tight_upper);

    Graph k2(2);
    k2.add_edge(0, 1);
    DegreeSandwich s = degree_sandwich(k2, bit(0));
    CHECK(s.lower == 1);
    CHECK(s.e == 1);
    CHECK(s.upper == 1);

    CHECK_THROWS_AS(degree_sandwich(k2, bit(0) | bit(1)), std::invalid_argument);
    CHECK_THROWS_AS(degree_sandwich(k2, bit(5)), std::invalid_argument);
}

TEST_CASE("sandwich holds for every independent set of every small graph") {
    for (int n = 1; n <= 6; ++n)
        for_each_labeled(n, false, [](const Graph& g) {
            for (std::uint64_t s = 0; s < (std::uint64_t(1) << g.order()); ++s) {
                bool independent = true;
                for (int v = 0; v < g.order() && independent; ++v)
                    if (((s >> v) & 1) != 0 && (g.neighbors(v) & s) != 0)
                        independent = false;
                if (!independent) continue;
                DegreeSandwich d = degree_sandwich(g, s);
                REQUIRE(d.lower <= d.e);
                REQUIRE(d.e <= d.upper);
                REQUIRE(d.tight_lower == (d.lower == d.e));
                REQUIRE(d.tight_upper == (d.e == d.upper));
            }
        });
}
