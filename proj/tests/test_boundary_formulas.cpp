#include <doctest.h>

#include "core/boundary_formulas.hpp"
#include "core/ehrhart.hpp"
#include "fixtures.hpp"

using namespace latpoly;
using namespace fixtures;

namespace {

std::vector<Int> ints(std::initializer_list<long> xs) {
    std::vector<Int> v;
    for (long x : xs) v.push_back(Int(x));
    return v;
}

} // namespace

TEST_CASE("tabulated boundary-volume coefficients") {
    CHECK(table1_coefficients(2) == ints({0, 1}));
    CHECK(table1_coefficients(3) == ints({-4, 2}));
    CHECK(table1_coefficients(4) == ints({0, -2, 1}));
    CHECK(table1_coefficients(5) == ints({12, -8, 2}));
    CHECK(table1_coefficients(6) == ints({0, 5, -4, 1}));
    CHECK(table1_coefficients(7) == ints({-40, 30, -12, 2}));
    CHECK(table1_coefficients(8) == ints({0, -14, 14, -6, 1}));
    CHECK(table1_coefficients(9) == ints({140, -112, 56, -16, 2}));
    CHECK(table1_coefficients(10) == ints({0, 42, -48, 27, -8, 1}));
    CHECK_THROWS_AS(table1_coefficients(1), Error);
    CHECK_THROWS_AS(table1_coefficients(13), Error);
}

TEST_CASE("explicit boundary-volume sum") {
    SUBCASE("dimension 3 reduces to the boundary-point law") {
        // 2! vol = 2 B(1) - 4, i.e. vol = B(1) - 2.
        CHECK(boundary_volume_explicit(3, ints({1, 6})) == 4);
        CHECK(boundary_volume_explicit(3, ints({1, 8})) == 6);
    }
    SUBCASE("4-cross-polytope") {
        // 3! vol = B(2) - 2 B(1) = 32 - 16 = 16.
        CHECK(boundary_volume_explicit(4, ints({1, 8, 32})) == Rational(8, 3));
    }
    SUBCASE("5-cross-polytope") {
        // 4! vol = 2(B(2) - 4 B(1) + 6) = 2(50 - 40 + 6) = 32.
        CHECK(boundary_volume_explicit(5, ints({1, 10, 50})) == Rational(4, 3));
    }
    SUBCASE("missing counts are rejected") {
        CHECK_THROWS_AS(boundary_volume_explicit(4, ints({1, 8})), Error);
    }
}

TEST_CASE("determinant-ratio boundary volume") {
    SUBCASE("dimension 3 is a 1x1 ratio") {
        // det[B(1) - 2] / det[1].
        CHECK(boundary_volume_matrix(3, ints({1, 6})) == 4);
    }
    SUBCASE("4-cross-polytope ratio of 2x2 determinants") {
        // det[[8,1],[32,2]] / det[[1,1],[8,2]] = -16 / -6.
        CHECK(boundary_volume_matrix(4, ints({1, 8, 32})) == Rational(8, 3));
    }
    SUBCASE("5-cross-polytope") {
        CHECK(boundary_volume_matrix(5, ints({1, 10, 50})) == Rational(4, 3));
    }
}

TEST_CASE("boundary-volume forms agree with both oracles") {
    std::vector<LatticePolytope> ps = {
        cube01(2),      cross(2),       simplex_std(2),
        cube01(3),      cross(3),       simplex_pm(3),   reeve(4),
        cube01(4),      cross(4),       simplex_pm(4),
        cross(5),       simplex_std(5),
        cross(6),       simplex_std(6)};
    std::mt19937_64 rng(90210u);
    for (int d = 2; d <= 4; ++d) ps.push_back(random_polytope(rng, d, 3));
    for (const LatticePolytope& p : ps) {
        CAPTURE(p.dim());
        Rational direct = boundary_volume_direct(p);
        CHECK(boundary_volume_explicit(p) == direct);
        CHECK(boundary_volume_matrix(p) == direct);
        Rational via_ehrhart =
            boundary_volume_from_ehrhart(ehrhart_polynomial(p));
        CHECK(via_ehrhart == direct);
    }
}

TEST_CASE("general volume formula") {
    SUBCASE("frozen count lists") {
        CHECK(volume_general(3, ints({1, 7, 25}), ints({1, 6, 18})) ==
              Rational(4, 3));
        CHECK(volume_general(4, ints({1, 9, 41}), ints({1, 8, 32})) ==
              Rational(2, 3));
        CHECK(volume_general(2, ints({1, 4}), ints({1, 4})) == 1);
    }
    SUBCASE("agrees with the leading coefficient everywhere") {
        std::vector<LatticePolytope> ps = {
            cube01(2), cross(2),  cube01(3),     cross(3), simplex_pm(3),
            reeve(3),  cube01(4), cross(4),      cross(5), simplex_std(5),
            cross(6),  simplex_std(6), del_pezzo(3)};
        for (const LatticePolytope& p : ps) {
            CAPTURE(p.dim());
            Rational cd = volume_from_ehrhart(ehrhart_polynomial(p));
            CHECK(volume_general(p) == cd);
        }
    }
}

TEST_CASE("parity-split volume formulas") {
    SUBCASE("even dimensions use Macdonald's form") {
        CHECK(volume_macdonald_even(4, ints({0, 1, 9}), ints({1, 8, 32})) ==
              Rational(2, 3));
        CHECK(volume_macdonald_even(2, ints({0, 1}), ints({1, 4})) == 2);
        for (const LatticePolytope& p :
             {cube01(2), cross(2), cube01(4), cross(4), cross(6)}) {
            Rational cd = volume_from_ehrhart(ehrhart_polynomial(p));
            CHECK(volume_macdonald_even(p) == cd);
        }
        CHECK_THROWS_AS(volume_macdonald_even(3, ints({0, 1, 7}),
                                              ints({1, 6, 18})),
                        Error);
    }
    SUBCASE("odd dimensions use the (d+1)!-weighted form") {
        CHECK(volume_kolodziejczyk_odd(3, ints({0, 1, 7}), ints({1, 6, 18})) ==
              Rational(4, 3));
        for (const LatticePolytope& p :
             {cross(3), simplex_pm(3), reeve(5), cross(5), simplex_std(5)}) {
            Rational cd = volume_from_ehrhart(ehrhart_polynomial(p));
            CHECK(volume_kolodziejczyk_odd(p) == cd);
        }
        CHECK_THROWS_AS(volume_kolodziejczyk_odd(4, ints({0, 1, 9}),
                                                 ints({1, 8, 32})),
                        Error);
    }
}

TEST_CASE("formula layer accepts synthetic counts") {
    // The count lists need not come from an actual polytope: feeding the
    // Ehrhart values of 2 * (3-octahedron) reproduces its boundary volume.
    LatticePolytope big = dilate(cross(3), 2);
    std::vector<DilationCounts> cs = count_range(big, 1);
    std::vector<Int> boundary{cs[0].boundary, cs[1].boundary};
    CHECK(boundary_volume_explicit(3, boundary) == boundary_volume_direct(big));
}
