#include <doctest.h>

#include "core/order.hpp"
#include "core/reflexive.hpp"
#include "fixtures.hpp"

using namespace latpoly;
using namespace fixtures;

namespace {

Poset n_poset() { return Poset(4, {{0, 1}, {1, 2}, {0, 3}}); }
Poset v_poset() { return Poset(3, {{0, 1}, {0, 2}}); }

/// Oracle: count (strictly) order-preserving maps Q -> {1..k} by trying
/// every assignment.
Int omega_scan(const Poset& q, int k, bool strict) {
    const int d = q.size();
    if (k <= 0) return 0;
    std::vector<int> f(d, 1);
    Int count = 0;
    for (;;) {
        bool ok = true;
        for (int a = 0; a < d && ok; ++a)
            for (int b = 0; b < d && ok; ++b)
                if (a != b && q.less_equal(a, b))
                    ok = strict ? f[a] < f[b] : f[a] <= f[b];
        if (ok) ++count;
        int i = 0;
        while (i < d && f[i] == k) { f[i] = 1; ++i; }
        if (i == d) break;
        ++f[i];
    }
    return count;
}

std::vector<Poset> sweep_fixtures() {
    std::vector<Poset> qs = all_posets_up_to(4);
    for (int d = 5; d <= 6; ++d) {
        qs.push_back(Poset::chain(d));
        qs.push_back(Poset::antichain(d));
    }
    return qs;
}

} // namespace

TEST_CASE("poset construction") {
    SUBCASE("closure is derived from an arbitrary relation list") {
        Poset q(3, {{0, 1}, {1, 2}});
        CHECK(q.less_equal(0, 2));
        CHECK(q.less_equal(0, 0));
        CHECK(!q.less_equal(2, 0));
        CHECK(q.cover_relations() ==
              std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
        // Restating the derived relation changes nothing.
        CHECK(q == Poset(3, {{0, 1}, {1, 2}, {0, 2}}));
    }
    SUBCASE("cycles are rejected") {
        try {
            Poset q(3, {{0, 1}, {1, 2}, {2, 0}});
            FAIL("expected a cycle error");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::Cycle);
        }
    }
    SUBCASE("out-of-range elements are rejected") {
        CHECK_THROWS_AS(Poset(2, {{0, 2}}), Error);
        CHECK_THROWS_AS(Poset(2, {{-1, 0}}), Error);
    }
    SUBCASE("minimal and maximal elements") {
        Poset q = n_poset();
        CHECK(q.minimal_elements() == std::vector<int>{0});
        CHECK(q.maximal_elements() == std::vector<int>{2, 3});
    }
}

TEST_CASE("gradedness and rank") {
    CHECK(Poset::chain(4).is_graded());
    CHECK(Poset::chain(4).rank() == 3);
    CHECK(Poset::antichain(3).is_graded());
    CHECK(Poset::antichain(3).rank() == 0);
    CHECK(!n_poset().is_graded());
    CHECK_THROWS_AS(n_poset().rank(), Error);
    CHECK(v_poset().is_graded());
    CHECK(v_poset().rank() == 1);
    // A chain next to an isolated element has maximal chains of two lengths.
    CHECK(!Poset(3, {{0, 1}}).is_graded());
    CHECK(Poset(1, {}).is_graded());
    CHECK(Poset(1, {}).rank() == 0);
}

TEST_CASE("down-set enumeration") {
    CHECK(Poset::antichain(3).down_sets().size() == 8);
    CHECK(Poset::chain(3).down_sets().size() == 4);
    CHECK(n_poset().down_sets().size() == 7);
    Poset c3 = Poset::chain(3);
    const std::vector<unsigned>& ds = c3.down_sets();
    CHECK(std::is_sorted(ds.begin(), ds.end()));
    // Every down-set is closed downward.
    Poset q = n_poset();
    for (unsigned mask : q.down_sets())
        for (int b = 0; b < q.size(); ++b)
            if (mask & (1u << b))
                for (int a = 0; a < q.size(); ++a)
                    if (q.less_equal(a, b)) CHECK((mask & (1u << a)) != 0);
}

TEST_CASE("order polynomial values") {
    SUBCASE("chains count multisets") {
        CHECK(order_polynomial(Poset::chain(3), 2) == 4);  // C(4,3)
        for (int d = 1; d <= 6; ++d)
            for (int k = 1; k <= 6; ++k)
                CHECK(order_polynomial(Poset::chain(d), k) ==
                      binomial(d + k - 1, d));
    }
    SUBCASE("antichains count all maps") {
        CHECK(order_polynomial(Poset::antichain(3), 2) == 8);
        CHECK(strict_order_polynomial(Poset::antichain(3), 2) == 8);
        for (int d = 1; d <= 6; ++d) {
            Int expect = 1;
            for (int i = 0; i < d; ++i) expect *= 3;
            CHECK(order_polynomial(Poset::antichain(d), 3) == expect);
        }
    }
    SUBCASE("strict maps on chains count subsets") {
        CHECK(strict_order_polynomial(Poset::chain(3), 3) == 1);  // C(3,3)
        for (int d = 1; d <= 5; ++d)
            for (int k = 1; k <= 6; ++k)
                CHECK(strict_order_polynomial(Poset::chain(d), k) ==
                      binomial(k, d));
    }
    SUBCASE("k = 0 convention and negative rejection") {
        CHECK(order_polynomial(Poset::chain(2), 0) == 0);
        CHECK(strict_order_polynomial(Poset::chain(2), 0) == 0);
        CHECK_THROWS_AS(order_polynomial(Poset::chain(2), -1), Error);
    }
}

TEST_CASE("DP agrees with the exhaustive map scan") {
    for (const Poset& q : sweep_fixtures()) {
        CAPTURE(q.size());
        for (int k = 1; k <= 3; ++k) {
            CHECK(order_polynomial(q, k) == omega_scan(q, k, false));
            CHECK(strict_order_polynomial(q, k) == omega_scan(q, k, true));
        }
    }
    // One non-graded case at a larger k.
    CHECK(order_polynomial(n_poset(), 5) == omega_scan(n_poset(), 5, false));
}

TEST_CASE("linear extensions") {
    CHECK(linear_extensions(Poset::antichain(3)) == 6);
    CHECK(linear_extensions(Poset::chain(4)) == 1);
    CHECK(linear_extensions(n_poset()) == 3);
    CHECK(linear_extensions(v_poset()) == 2);
    CHECK(linear_extensions(Poset::antichain(6)) == 720);
}

TEST_CASE("surjective map counts") {
    SUBCASE("chain compositions") {
        std::vector<Int> es = surjective_counts(Poset::chain(3));
        REQUIRE(es.size() == 4);
        CHECK(es[1] == 1);
        CHECK(es[2] == 2);
        CHECK(es[3] == 1);
    }
    SUBCASE("antichain surjections") {
        std::vector<Int> es = surjective_counts(Poset::antichain(3));
        CHECK(es[1] == 1);
        CHECK(es[2] == 6);
        CHECK(es[3] == 6);
    }
    SUBCASE("the worked non-graded example") {
        std::vector<Int> es = surjective_counts(n_poset());
        CHECK(es[1] == 1);
        CHECK(es[2] == 5);
        CHECK(es[3] == 7);
        CHECK(es[4] == 3);  // cross-checked internally against e(Q)
    }
    SUBCASE("reassembling the order polynomial") {
        for (const Poset& q : sweep_fixtures()) {
            std::vector<Int> es = surjective_counts(q);
            for (int k = 1; k <= q.size() + 2; ++k) {
                Int acc = 0;
                for (int s = 1; s <= q.size(); ++s)
                    acc += es[s] * binomial(k, s);
                CHECK(acc == order_polynomial(q, k));
            }
        }
    }
}

TEST_CASE("interpolated order polynomial") {
    SUBCASE("chain of three") {
        Polynomial p = order_polynomial_interpolated(Poset::chain(3));
        REQUIRE(p.coeffs.size() == 4);
        CHECK(p.coeffs[0] == 0);
        CHECK(p.coeffs[1] == Rational(1, 3));
        CHECK(p.coeffs[2] == Rational(1, 2));
        CHECK(p.coeffs[3] == Rational(1, 6));
    }
    SUBCASE("the worked non-graded example") {
        Polynomial p = order_polynomial_interpolated(n_poset());
        REQUIRE(p.coeffs.size() == 5);
        CHECK(p.coeffs[0] == 0);
        CHECK(p.coeffs[1] == Rational(1, 12));
        CHECK(p.coeffs[2] == Rational(3, 8));
        CHECK(p.coeffs[3] == Rational(5, 12));
        CHECK(p.coeffs[4] == Rational(1, 8));
    }
    SUBCASE("vanishing pattern of the chain polynomial") {
        // Omega(-1) = ... = Omega(-r) = 0 and Omega(-r-1) = (-1)^d.
        Polynomial p = order_polynomial_interpolated(Poset::chain(3));
        CHECK(p.eval(Int(-1)) == 0);
        CHECK(p.eval(Int(-2)) == 0);
        CHECK(p.eval(Int(-3)) == -1);
    }
}

TEST_CASE("reciprocity and coefficient identities") {
    for (const Poset& q : sweep_fixtures()) {
        CAPTURE(q.size());
        OrderReciprocityReport r = reciprocity_checks(q, q.size() + 2);
        CHECK(r.all_hold);
        CHECK(r.strict_reciprocity);
        CHECK(r.leading_coeff);
        CHECK(r.graded == q.is_graded());
    }
    SUBCASE("graded clauses in numbers") {
        // Chain of three: subleading coefficient 1/2 = r e / (2 (d-1)!) and
        // the surjective identity 2 e_{d-1} = (d+r-1) e reads 4 = 4.
        OrderReciprocityReport r = reciprocity_checks(Poset::chain(3), 5);
        CHECK(r.graded);
        CHECK(r.subleading_coeff);
        CHECK(r.graded_symmetry);
        CHECK(r.surjective_identity);
        // Antichain of three: 2 * 6 = (3 + 0 - 1) * 6.
        OrderReciprocityReport a = reciprocity_checks(Poset::antichain(3), 5);
        CHECK(a.surjective_identity);
    }
    SUBCASE("k_max must leave verification headroom") {
        CHECK_THROWS_AS(reciprocity_checks(Poset::chain(3), 3), Error);
    }
}

TEST_CASE("order polytope geometry") {
    SUBCASE("antichain gives the unit cube") {
        LatticePolytope p = order_polytope(Poset::antichain(3));
        CHECK(p == cube01(3));
        CHECK(p.vertices().size() == 8);
        CHECK(p.facets().size() == 6);
    }
    SUBCASE("chain gives the order simplex") {
        LatticePolytope p = order_polytope(Poset::chain(3));
        CHECK(p.vertices().size() == 4);
        CHECK(p.facets().size() == 4);
    }
    SUBCASE("V poset") {
        LatticePolytope p = order_polytope(v_poset());
        CHECK(p.vertices().size() == 5);
        CHECK(p.facets().size() == 5);  // 2 covers + 1 minimal + 2 maximal
    }
    SUBCASE("vertices are up-set indicators") {
        Poset q = Poset::chain(2);
        LatticePolytope p = order_polytope(q);
        // Up-sets of a 2-chain: {}, {top}, {bottom, top}.
        std::vector<IntVec> expect = {{Int(0), Int(0)}, {Int(0), Int(1)},
                                      {Int(1), Int(1)}};
        CHECK(p.vertices() == expect);
    }
}

TEST_CASE("order polytope counting identities") {
    SUBCASE("frozen anchors") {
        LatticePolytope p = order_polytope(Poset::chain(3));
        CHECK(count_points(p, 2).total == 10);  // Omega(C3, 3) = C(5,3)
        CHECK(count_points(order_polytope(Poset::antichain(2)), 3).total == 16);
    }
    SUBCASE("identity sweep") {
        for (const Poset& q : sweep_fixtures()) {
            CAPTURE(q.size());
            OrderEhrhartReport r = order_ehrhart_checks(q, q.size() + 1);
            CHECK(r.all_hold);
            CHECK(r.counts_match);
            CHECK(r.interiors_match);
            CHECK(r.volume_matches);
        }
    }
}

TEST_CASE("boundary volume of order polytopes") {
    SUBCASE("graded anchors") {
        OrderBoundaryReport cube = order_boundary_volume_report(
            Poset::antichain(3));
        CHECK(cube.graded);
        CHECK(cube.graded_form == 6);  // (r+2) e / (d-1)! = 2*6/2
        CHECK(cube.general == 6);
        CHECK(cube.direct == 6);
        CHECK(cube.agree);

        OrderBoundaryReport simplex = order_boundary_volume_report(
            Poset::chain(4));
        CHECK(simplex.graded);
        CHECK(simplex.general == Rational(5, 6));  // 5 * 1 / 3!
        CHECK(simplex.graded_form == Rational(5, 6));
        CHECK(simplex.direct == Rational(5, 6));
    }
    SUBCASE("non-graded worked example") {
        OrderBoundaryReport r = order_boundary_volume_report(n_poset());
        CHECK(!r.graded);
        CHECK(r.general == Rational(11, 6));  // ((3-4)*3 + 2*7) / 3!
        CHECK(r.direct == Rational(11, 6));
        CHECK(r.agree);
        CHECK(order_boundary_volume(n_poset()) == Rational(11, 6));
    }
    SUBCASE("agreement sweep") {
        for (const Poset& q : sweep_fixtures()) {
            CAPTURE(q.size());
            OrderBoundaryReport r = order_boundary_volume_report(q);
            CHECK(r.agree);
            CHECK(r.general == r.direct);
            if (r.graded) CHECK(r.graded_form == r.direct);
        }
    }
}

TEST_CASE("reflexive dilate of graded order polytopes") {
    SUBCASE("antichain dilate is the centered cube") {
        CHECK(reflexive_dilate(Poset::antichain(3)) == cube_pm(3));
    }
    SUBCASE("small chains") {
        LatticePolytope t2 = reflexive_dilate(Poset::chain(2));
        CHECK(t2.vertices().size() == 3);
        CHECK(is_reflexive(t2));
        LatticePolytope t3 = reflexive_dilate(Poset::chain(3));
        CHECK(is_reflexive(t3));
    }
    SUBCASE("graded sweep") {
        for (const Poset& q : sweep_fixtures()) {
            if (!q.is_graded() || q.size() > 4) continue;
            CHECK(is_reflexive(reflexive_dilate(q)));
        }
    }
    SUBCASE("non-graded posets are rejected") {
        CHECK_THROWS_AS(reflexive_dilate(n_poset()), Error);
    }
}

TEST_CASE("reflexive order-polytope identities") {
    SUBCASE("antichain of two") {
        OrderReflexiveReport r = order_reflexive_identities(
            Poset::antichain(2));
        CHECK(r.lhs == 8);  // (r+2)^d e = 4 * 2
        CHECK(r.rhs == 8);
        CHECK(r.volume_identity);
        CHECK(!r.has_odd_identity);
    }
    SUBCASE("odd-dimension vanishing") {
        OrderReflexiveReport a3 = order_reflexive_identities(
            Poset::antichain(3));
        REQUIRE(a3.has_odd_identity);
        CHECK(a3.odd_value == 0);  // 10 - 135 + 125
        CHECK(a3.odd_identity);

        OrderReflexiveReport c3 = order_reflexive_identities(Poset::chain(3));
        REQUIRE(c3.has_odd_identity);
        CHECK(c3.odd_value == 0);  // 10 - 175 + 165
        CHECK(c3.lhs == 64);       // 4^3 * 1
        CHECK(c3.volume_identity);
    }
    SUBCASE("graded sweep") {
        for (const Poset& q : sweep_fixtures()) {
            if (!q.is_graded()) continue;
            CAPTURE(q.size());
            OrderReflexiveReport r = order_reflexive_identities(q);
            CHECK(r.all_hold);
            CHECK(r.volume_identity);
            if (q.size() % 2 == 1) {
                CHECK(r.has_odd_identity);
                CHECK(r.odd_value == 0);
            }
        }
    }
    SUBCASE("non-graded posets are rejected") {
        CHECK_THROWS_AS(order_reflexive_identities(n_poset()), Error);
    }
}

TEST_CASE("poset isomorphism classes") {
    std::vector<Poset> all4 = all_posets_up_to(4);
    CHECK(all4.size() == 24);  // 1 + 2 + 5 + 16 classes by size
    int by_size[5] = {0, 0, 0, 0, 0};
    for (const Poset& q : all4) {
        REQUIRE(q.size() <= 4);
        ++by_size[q.size()];
    }
    CHECK(by_size[1] == 1);
    CHECK(by_size[2] == 2);
    CHECK(by_size[3] == 5);
    CHECK(by_size[4] == 16);
    CHECK(all_posets_up_to(5).size() == 87);  // adds the 63 five-element ones
    CHECK_THROWS_AS(all_posets_up_to(6), Error);
    CHECK_THROWS_AS(all_posets_up_to(0), Error);
}
