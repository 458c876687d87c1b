#include "core/reflexive.hpp"

#include <algorithm>

#include "core/error.hpp"

namespace latpoly {

namespace {

std::pair<std::vector<Int>, std::vector<Int>> scan_counts(
    const LatticePolytope& p, long m_max) {
    std::vector<DilationCounts> counts = count_range(p, m_max);
    std::vector<Int> totals, boundary;
    for (const DilationCounts& c : counts) {
        totals.push_back(c.total);
        boundary.push_back(c.boundary);
    }
    return {totals, boundary};
}

void require_counts(const std::vector<Int>& counts, int upto,
                    const char* what) {
    if (static_cast<int>(counts.size()) <= upto) {
        fail(ErrorCode::Arity, std::string("need ") + what +
                                   " counts for m = 0.." + std::to_string(upto));
    }
}

} // namespace

bool is_reflexive(const LatticePolytope& p) {
    if (!is_fano(p)) {
        fail(ErrorCode::Precondition,
             "reflexivity is only defined for Fano polytopes");
    }
    return dual(p).all_vertices_integral();
}

CountExpansion gorenstein_expansion(int d) {
    if (d < 2) {
        fail(ErrorCode::Dimension,
             "the reflexivity criterion needs dimension >= 2");
    }
    const int big_n = (d + 1) / 2;
    // Raw rational coefficients of the alternating sum; the m = 0 terms
    // multiply L(0) = L∂(0) = 1 and fold into the constant.
    RatVec raw_total(big_n + 1, Rational(0));
    RatVec raw_boundary(big_n + 1, Rational(0));
    for (int m = 0; m <= big_n; ++m) {
        Rational binom = Rational(binomial(2 * big_n, big_n + m));
        if ((big_n + m) % 2 != 0) binom = -binom;
        if (d % 2 == 0) {
            raw_total[m] = binom * d;
            raw_boundary[m] = binom * Rational(-(big_n + m));
        } else {
            raw_total[m] = binom * m * d;
            raw_boundary[m] =
                binom * (Rational(Int(big_n) * big_n - Int(m) * m) -
                         make_rational(Int(m) * d, 2));
        }
    }
    Rational raw_constant = raw_total[0] + raw_boundary[0];
    raw_total[0] = 0;
    raw_boundary[0] = 0;

    // Normalize: clear denominators, divide by the common gcd, and fix the
    // sign so the L_P(N) coefficient is positive.
    Int denom_lcm = 1;
    auto fold_den = [&denom_lcm](const Rational& r) {
        Int den = r.get_den();
        mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(), den.get_mpz_t());
    };
    for (const Rational& r : raw_total) fold_den(r);
    for (const Rational& r : raw_boundary) fold_den(r);
    fold_den(raw_constant);

    CountExpansion exp;
    exp.d = d;
    exp.coeff_total.assign(big_n + 1, 0);
    exp.coeff_boundary.assign(big_n + 1, 0);
    for (int m = 0; m <= big_n; ++m) {
        exp.coeff_total[m] = to_integer(raw_total[m] * Rational(denom_lcm));
        exp.coeff_boundary[m] =
            to_integer(raw_boundary[m] * Rational(denom_lcm));
    }
    exp.constant = to_integer(raw_constant * Rational(denom_lcm));

    Int g = 0;
    auto fold_gcd = [&g](const Int& v) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    };
    for (const Int& v : exp.coeff_total) fold_gcd(v);
    for (const Int& v : exp.coeff_boundary) fold_gcd(v);
    fold_gcd(exp.constant);
    if (g == 0) fail(ErrorCode::Inconsistency, "criterion expansion is zero");
    if (exp.coeff_total[big_n] < 0) g = -g;
    for (Int& v : exp.coeff_total) v /= g;
    for (Int& v : exp.coeff_boundary) v /= g;
    exp.constant /= g;
    return exp;
}

Rational gorenstein_f(int d, const std::vector<Int>& totals,
                      const std::vector<Int>& boundary) {
    CountExpansion exp = gorenstein_expansion(d);
    const int big_n = static_cast<int>(exp.coeff_total.size()) - 1;
    require_counts(totals, big_n, "total");
    require_counts(boundary, big_n, "boundary");
    Int acc = exp.constant;
    for (int m = 1; m <= big_n; ++m) {
        acc += exp.coeff_total[m] * totals[m];
        acc += exp.coeff_boundary[m] * boundary[m];
    }
    return Rational(acc);
}

Rational gorenstein_f(const LatticePolytope& p) {
    auto [totals, boundary] = scan_counts(p, (p.dim() + 1) / 2);
    return gorenstein_f(p.dim(), totals, boundary);
}

std::vector<Int> odd_relation_coefficients(int d) {
    if (d < 1 || d % 2 != 1) {
        fail(ErrorCode::Parity, "the relation g(P) requires odd dimension");
    }
    const int big_n = (d + 1) / 2;
    std::vector<Int> coeff(big_n + 1);
    for (int m = 0; m <= big_n; ++m) {
        Int c = binomial(d + 2, big_n - m);
        coeff[m] = ((big_n + m) % 2 != 0) ? -c : c;
    }
    return coeff;
}

Rational odd_relation_g(int d, const std::vector<Int>& totals) {
    std::vector<Int> coeff = odd_relation_coefficients(d);
    const int big_n = static_cast<int>(coeff.size()) - 1;
    require_counts(totals, big_n, "total");
    Int acc = 0;
    for (int m = 0; m <= big_n; ++m) acc += coeff[m] * totals[m];
    return Rational(acc);
}

Rational odd_relation_g(const LatticePolytope& p) {
    auto [totals, boundary] = scan_counts(p, (p.dim() + 1) / 2);
    (void)boundary;
    return odd_relation_g(p.dim(), totals);
}

Rational reflexive_volume(int d, const std::vector<Int>& totals) {
    if (d < 1) fail(ErrorCode::Dimension, "dimension must be positive");
    const int n = d / 2;
    require_counts(totals, n, "total");
    if (totals[0] != 1) {
        fail(ErrorCode::Inconsistency, "count at m = 0 must be 1");
    }
    Int acc = 0;
    for (int m = 0; m <= n; ++m) {
        Int inner = binomial(d, n - m);
        Int outer = binomial(d, n + m + 1);
        Int coeff = inner + ((d % 2 == 1) ? outer : -outer);
        if ((n + m) % 2 != 0) coeff = -coeff;
        acc += coeff * totals[m];
    }
    return make_rational(acc, factorial(d));
}

LowerBoundReport volume_lower_bound_check(const LatticePolytope& p) {
    const int d = p.dim();
    std::vector<DilationCounts> counts = count_range(p, d);
    if (counts[1].interior == 0) {
        fail(ErrorCode::Precondition,
             "the volume lower bound requires an interior lattice point");
    }
    std::vector<Int> totals;
    for (const DilationCounts& c : counts) totals.push_back(c.total);

    LowerBoundReport rep;
    rep.delta = delta_vector(d, totals);
    rep.lhs = 0;
    for (const Int& x : rep.delta) rep.lhs += x;
    rep.rhs = (d - 1) * counts[1].total - Int(d) * d + 3;
    rep.holds = rep.lhs >= rep.rhs;
    rep.equality = rep.lhs == rep.rhs;
    Int d1 = counts[1].total - d - 1;
    rep.delta_flat = rep.delta.front() == 1 && rep.delta.back() == 1;
    for (int i = 1; i < d; ++i) {
        if (rep.delta[i] != d1) rep.delta_flat = false;
    }
    if (rep.equality && !rep.delta_flat) {
        fail(ErrorCode::Inconsistency,
             "lower bound met with equality but delta-vector is not flat");
    }
    return rep;
}

DilationBoundsReport dilation_bounds_check(const LatticePolytope& p) {
    const int d = p.dim();
    if (d != 4 && d != 5) {
        fail(ErrorCode::Dimension,
             "dilation bounds are stated for dimensions 4 and 5");
    }
    if (!is_reflexive(p)) {
        fail(ErrorCode::Precondition,
             "dilation bounds require a reflexive polytope");
    }
    std::vector<DilationCounts> counts = count_range(p, d);
    std::vector<Int> totals;
    for (const DilationCounts& c : counts) totals.push_back(c.total);

    DilationBoundsReport rep;
    rep.d = d;
    rep.delta = delta_vector(d, totals);
    const Int& l1 = totals[1];
    const Int& l2 = totals[2];
    if (d == 4) {
        rep.predicted_delta = {1, l1 - 5, l2 - 5 * l1 + 10, l1 - 5, 1};
        rep.slack1 = l2 + 15 - 6 * l1;
    } else {
        const Int& l3 = totals[3];
        Int mid = l2 - 6 * l1 + 15;
        rep.predicted_delta = {1, l1 - 6, mid, mid, l1 - 6, 1};
        rep.slack1 = l2 + 21 - 7 * l1;
        rep.has_bound2 = true;
        rep.slack2 = l3 + 28 - 4 * l2;
        rep.bound2_holds = rep.slack2 >= 0;
        rep.bound2_equality = rep.slack2 == 0;
    }
    rep.delta_matches = rep.delta == rep.predicted_delta;
    rep.bound1_holds = rep.slack1 >= 0;
    rep.bound1_equality = rep.slack1 == 0;
    if (!rep.delta_matches) {
        fail(ErrorCode::Inconsistency,
             "reflexive delta-vector does not match its count expression");
    }
    return rep;
}

bool palindrome_check(const std::vector<Int>& delta) {
    std::size_t n = delta.size();
    for (std::size_t i = 0; i < n / 2; ++i) {
        if (delta[i] != delta[n - 1 - i]) return false;
    }
    return true;
}

ReflexivityReport reflexivity_report(const LatticePolytope& p) {
    const int d = p.dim();
    ReflexivityReport rep;
    rep.d = d;
    rep.is_fano = is_fano(p);
    rep.dual_integral = rep.is_fano && dual(p).all_vertices_integral();
    rep.reflexive = rep.is_fano && rep.dual_integral;

    std::vector<DilationCounts> counts = count_range(p, d + 1);
    std::vector<Int> totals, boundary;
    for (const DilationCounts& c : counts) {
        totals.push_back(c.total);
        boundary.push_back(c.boundary);
    }

    rep.condition_ii = true;
    for (int m = 1; m <= d + 1; ++m) {
        if (totals[m] != boundary[m] + totals[m - 1]) {
            rep.condition_ii = false;
            break;
        }
    }

    Polynomial ehr = ehrhart_from_counts(d, totals);
    rep.volume = volume_from_ehrhart(ehr);
    rep.boundary_volume = boundary_volume_from_ehrhart(ehr);
    rep.condition_iii = Rational(d) * rep.volume == rep.boundary_volume;

    rep.delta = delta_vector(d, totals);
    rep.palindromic = palindrome_check(rep.delta);

    if (d >= 2) {
        rep.f_value = gorenstein_f(d, totals, boundary);
        rep.f_zero = rep.f_value == 0;
    }
    if (d % 2 == 1) {
        rep.has_g = true;
        rep.g_value = odd_relation_g(d, totals);
    }

    rep.eq4_volume = reflexive_volume(d, totals);
    rep.eq4_matches = rep.eq4_volume == rep.volume;

    // Equivalence of the criteria: for Fano p all of them coincide; the
    // count-based ones are translation invariant so they must still agree
    // with each other when p is not Fano.
    std::vector<bool> invariant = {rep.condition_ii, rep.condition_iii,
                                   rep.palindromic};
    if (d >= 2) invariant.push_back(rep.f_zero);
    rep.agree = true;
    for (bool b : invariant) {
        if (b != invariant.front()) rep.agree = false;
    }
    if (rep.is_fano && rep.dual_integral != invariant.front()) {
        rep.agree = false;
    }
    // Reflexivity forces both the odd-d relation and the volume formula.
    if (rep.reflexive && rep.agree) {
        if (rep.has_g && rep.g_value != 0) rep.agree = false;
        if (!rep.eq4_matches) rep.agree = false;
    }
    return rep;
}

} // namespace latpoly
