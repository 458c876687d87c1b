#pragma once
/// @file reflexive.hpp
/// Reflexivity machinery: the classical equivalences (dual integrality,
/// count recursion, d·vol = vol∂, palindromic delta-vector), the count-based
/// criterion f(P), the odd-dimension relation g(P), the reflexive volume
/// formula, and the delta-vector bounds for dilations.

#include <vector>

#include "core/counting.hpp"
#include "core/ehrhart.hpp"
#include "core/rational.hpp"

namespace latpoly {

/// Canonical reflexivity test: the dual polytope has integral vertices.
/// Precondition: p is Fano (origin the unique interior lattice point).
bool is_reflexive(const LatticePolytope& p);

/// Integer expansion of the reflexivity criterion as a linear functional of
/// the counts: value = Σ coeff_total[m]·L_P(m) + Σ coeff_boundary[m]·L_∂P(m)
/// + constant over m = 1..N, N = ⌈d/2⌉.  Coefficients are normalized to be
/// coprime integers with the L_P(N) coefficient positive; for a Fano
/// polytope the value vanishes exactly when the polytope is reflexive.
struct CountExpansion {
    int d;
    std::vector<Int> coeff_total;     // index m = 0..N; [0] unused (0)
    std::vector<Int> coeff_boundary;  // index m = 0..N; [0] unused (0)
    Int constant;
};
CountExpansion gorenstein_expansion(int d);

/// Evaluates the normalized criterion on count lists (index m, entry 0 = 1).
Rational gorenstein_f(int d, const std::vector<Int>& totals,
                      const std::vector<Int>& boundary);
Rational gorenstein_f(const LatticePolytope& p);

/// Coefficients of the odd-d relation Σ coeff[m]·L_P(m), coeff[m] =
/// (-1)^{N+m} C(d+2, N-m), m = 0..N = ⌈d/2⌉.  Vanishes on reflexive P.
std::vector<Int> odd_relation_coefficients(int d);
Rational odd_relation_g(int d, const std::vector<Int>& totals);
Rational odd_relation_g(const LatticePolytope& p);

/// Volume of a reflexive polytope from total counts at m = 0..n = ⌊d/2⌋:
///   vol P = (1/d!) Σ (-1)^{n+m} ( C(d,n-m) + (-1)^{d-1} C(d,n+m+1) ) L(m).
Rational reflexive_volume(int d, const std::vector<Int>& totals);

/// d!·vol P >= (d-1)·L_P(1) - d² + 3 for polytopes with interior points;
/// equality forces the flat delta-vector (1, L-d-1, ..., L-d-1, 1).
struct LowerBoundReport {
    Int lhs;  // d!·vol = Σ δ_i
    Int rhs;  // (d-1)·L_P(1) - d² + 3
    bool holds = false;
    bool equality = false;
    bool delta_flat = false;
    std::vector<Int> delta;
};
LowerBoundReport volume_lower_bound_check(const LatticePolytope& p);

/// Reflexive dilation bounds in dimensions 4 and 5: the delta-vector
/// expressed through L_P(1), L_P(2) (and L_P(3) for d = 5), and the sharp
/// count inequalities with their slack.
struct DilationBoundsReport {
    int d = 0;
    std::vector<Int> delta;
    std::vector<Int> predicted_delta;
    bool delta_matches = false;
    Int slack1;  // d=4: L(2)+15-6L(1); d=5: L(2)+21-7L(1)
    bool bound1_holds = false, bound1_equality = false;
    bool has_bound2 = false;  // d=5 only
    Int slack2;               // d=5: L(3)+28-4L(2)
    bool bound2_holds = false, bound2_equality = false;
};
DilationBoundsReport dilation_bounds_check(const LatticePolytope& p);

/// δ_i = δ_{d-i} for all i.
bool palindrome_check(const std::vector<Int>& delta);

/// Full evaluation of every reflexivity criterion on one polytope.  The
/// booleans must agree pairwise (reflexivity equivalences) whenever p is
/// Fano; dual integrality is only defined in the Fano case.
struct ReflexivityReport {
    int d = 0;
    bool is_fano = false;
    bool dual_integral = false;
    bool condition_ii = false;   // L(m) = L∂(m) + L(m-1), m = 1..d+1
    bool condition_iii = false;  // d·c_d = 2·c_{d-1}
    bool palindromic = false;
    bool f_zero = false;        // d >= 2 only
    Rational f_value;           // d >= 2 only
    bool has_g = false;         // d odd
    Rational g_value;
    std::vector<Int> delta;
    Rational volume;            // c_d
    Rational boundary_volume;   // 2 c_{d-1}
    Rational eq4_volume;        // reflexive volume formula value
    bool eq4_matches = false;
    bool reflexive = false;     // is_fano && dual_integral
    bool agree = false;         // the equivalent criteria are consistent
};
ReflexivityReport reflexivity_report(const LatticePolytope& p);

} // namespace latpoly
