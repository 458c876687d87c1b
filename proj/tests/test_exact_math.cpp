#include <doctest.h>

#include "core/ehrhart.hpp"
#include "core/matrix.hpp"
#include "core/rational.hpp"

using namespace latpoly;

TEST_CASE("rational canonical form") {
    Rational q = make_rational(Int(4), Int(-6));
    CHECK(q == Rational(-2, 3));
    CHECK(to_string(q) == "-2/3");
    CHECK(to_string(make_rational(Int(6), Int(3))) == "2");
    CHECK(is_integral(make_rational(Int(8), Int(4))));
    CHECK(!is_integral(Rational(1, 3)));
    CHECK(to_integer(make_rational(Int(8), Int(4))) == 2);
    CHECK_THROWS_AS(make_rational(Int(1), Int(0)), Error);
    CHECK_THROWS_AS(to_integer(Rational(1, 2)), Error);
}

TEST_CASE("binomial coefficients") {
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(10, 5) == 252);
    CHECK(binomial(7, 0) == 1);
    CHECK(binomial(-1, 0) == 0);
    CHECK(binomial(6, -1) == 0);
    // Pascal's rule over a full triangle.
    for (int n = 1; n <= 30; ++n)
        for (int k = 1; k <= n; ++k)
            CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
}

TEST_CASE("factorial and floor/ceil division") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(5) == 120);
    CHECK(factorial(12) == 479001600);
    CHECK(floor_div(Int(7), Int(2)) == 3);
    CHECK(floor_div(Int(-7), Int(2)) == -4);
    CHECK(ceil_div(Int(7), Int(2)) == 4);
    CHECK(ceil_div(Int(-7), Int(2)) == -3);
}

TEST_CASE("integer determinant") {
    IntMatrix one(1, 1);
    one.at(0, 0) = 5;
    CHECK(det(one) == 5);

    // This 2x2 is the denominator matrix of the d = 4 determinant form.
    IntMatrix m(2, 2);
    m.at(0, 0) = 1; m.at(0, 1) = 1;
    m.at(1, 0) = 8; m.at(1, 1) = 2;
    CHECK(det(m) == -6);

    CHECK(det(IntMatrix::identity(3)) == 1);
    CHECK(det(IntMatrix(0, 0)) == 1);

    // Row swap flips the sign; a duplicated row kills the determinant.
    IntMatrix s(2, 2);
    s.at(0, 0) = 8; s.at(0, 1) = 2;
    s.at(1, 0) = 1; s.at(1, 1) = 1;
    CHECK(det(s) == 6);
    IntMatrix z(2, 2);
    z.at(0, 0) = 3; z.at(0, 1) = 4;
    z.at(1, 0) = 3; z.at(1, 1) = 4;
    CHECK(det(z) == 0);

    CHECK_THROWS_AS(det(IntMatrix(2, 3)), Error);
}

TEST_CASE("rational determinant") {
    RationalMatrix m(2, 2);
    m.at(0, 0) = Rational(1, 2); m.at(0, 1) = Rational(1, 3);
    m.at(1, 0) = Rational(1, 4); m.at(1, 1) = Rational(1, 5);
    CHECK(det(m) == Rational(1, 60));
}

TEST_CASE("hermite normal form") {
    SUBCASE("already in form") {
        IntMatrix m = IntMatrix::from_rows({{Int(2), Int(0)}, {Int(0), Int(3)}});
        HnfResult r = hermite_normal_form(m);
        CHECK(r.h == m);
        Int du = det(r.u);
        CHECK((du == 1 || du == -1));
    }
    SUBCASE("2x2 reduction") {
        IntMatrix m = IntMatrix::from_rows({{Int(2), Int(4)}, {Int(1), Int(3)}});
        HnfResult r = hermite_normal_form(m);
        // Pivots 1 and 2; the above-pivot entry is reduced into [0, 2).
        CHECK(r.h.at(0, 0) == 1);
        CHECK(r.h.at(1, 0) == 0);
        CHECK(r.h.at(1, 1) == 2);
        CHECK(r.h.at(0, 1) >= 0);
        CHECK(r.h.at(0, 1) < 2);
        Int du = det(r.u);
        CHECK((du == 1 || du == -1));
        // h = u * m, entry by entry.
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                Int acc = 0;
                for (int k = 0; k < 2; ++k) acc += r.u.at(i, k) * m.at(k, j);
                CHECK(acc == r.h.at(i, j));
            }
    }
    SUBCASE("zero row") {
        IntMatrix m = IntMatrix::from_rows({{Int(0), Int(0)}});
        HnfResult r = hermite_normal_form(m);
        CHECK(r.h == m);
    }
    SUBCASE("rank") {
        CHECK(rank(IntMatrix::identity(4)) == 4);
        IntMatrix m = IntMatrix::from_rows(
            {{Int(1), Int(2), Int(3)}, {Int(2), Int(4), Int(6)}});
        CHECK(rank(m) == 1);
    }
}

TEST_CASE("kernel basis") {
    IntMatrix m = IntMatrix::from_rows({{Int(1), Int(2), Int(3)}});
    std::vector<IntVec> basis = kernel_basis(m);
    REQUIRE(basis.size() == 2);
    for (const IntVec& v : basis) {
        Int acc = v[0] + 2 * v[1] + 3 * v[2];
        CHECK(acc == 0);
    }
    CHECK(kernel_basis(IntMatrix::identity(3)).empty());
}

TEST_CASE("lattice saturation") {
    SUBCASE("2 e1 saturates to e1") {
        std::vector<IntVec> basis = saturation_basis(2, {{Int(2), Int(0)}});
        REQUIRE(basis.size() == 1);
        CHECK(basis[0] == IntVec{Int(1), Int(0)});
    }
    SUBCASE("rank-2 saturated lattice in Z^3") {
        std::vector<IntVec> gens = {{Int(1), Int(1), Int(0)},
                                    {Int(0), Int(0), Int(1)}};
        std::vector<IntVec> basis = saturation_basis(3, gens);
        REQUIRE(basis.size() == 2);
        // The generators already span a saturated lattice, so the basis must
        // generate exactly the same lattice (index 1): identical HNFs.
        HnfResult hb = hermite_normal_form(IntMatrix::from_rows(basis));
        HnfResult hg = hermite_normal_form(IntMatrix::from_rows(gens));
        CHECK(hb.h == hg.h);
    }
    SUBCASE("empty input") {
        CHECK(saturation_basis(3, {}).empty());
    }
}

TEST_CASE("linear solve") {
    SUBCASE("identity") {
        RationalMatrix a(2, 2);
        a.at(0, 0) = 1; a.at(1, 1) = 1;
        RatVec b{Rational(3), Rational(-7)};
        CHECK(solve_linear(a, b) == b);
    }
    SUBCASE("1x1 halves") {
        RationalMatrix a(1, 1);
        a.at(0, 0) = 2;
        RatVec x = solve_linear(a, {Rational(3)});
        CHECK(x[0] == Rational(3, 2));
    }
    SUBCASE("odd-coefficient system of the unit 4-cube") {
        // L(m) - L(-m) = 2 c3 m^3 + 2 c1 m; with L(m) = (m+1)^4 the right
        // side at m = 1, 2 is (16, 80).  The solve must recover c1 = c3 = 4,
        // matching the interpolated Ehrhart coefficients.
        RationalMatrix a(2, 2);
        a.at(0, 0) = 2;  a.at(0, 1) = 2;   // m = 1: (2m, 2m^3)
        a.at(1, 0) = 4;  a.at(1, 1) = 16;  // m = 2
        RatVec x = solve_linear(a, {Rational(16), Rational(80)});
        CHECK(x[0] == 4);
        CHECK(x[1] == 4);
        Polynomial ehr = interpolate_at_nodes({Int(1), Int(16), Int(81),
                                               Int(256), Int(625)});
        CHECK(ehr.coeffs[1] == x[0]);
        CHECK(ehr.coeffs[3] == x[1]);
    }
    SUBCASE("singular") {
        RationalMatrix a(2, 2);
        a.at(0, 0) = 1; a.at(0, 1) = 2;
        a.at(1, 0) = 2; a.at(1, 1) = 4;
        CHECK_THROWS_AS(solve_linear(a, {Rational(1), Rational(1)}), Error);
    }
    SUBCASE("shape mismatch") {
        RationalMatrix a(2, 3);
        CHECK_THROWS_AS(solve_linear(a, {Rational(1), Rational(1)}), Error);
    }
}

TEST_CASE("polynomial interpolation") {
    Polynomial p = interpolate_at_nodes({Int(1), Int(4), Int(9), Int(16)});
    REQUIRE(p.coeffs.size() == 4);
    CHECK(p.coeffs[0] == 1);
    CHECK(p.coeffs[1] == 2);
    CHECK(p.coeffs[2] == 1);
    CHECK(p.coeffs[3] == 0);
    CHECK(p.eval(Int(10)) == 121);
    CHECK(p.eval(Rational(1, 2)) == Rational(9, 4));
    CHECK(p.eval(Int(-3)) == 4);
}
