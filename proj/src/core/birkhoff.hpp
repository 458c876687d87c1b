#pragma once
/// @file birkhoff.hpp
/// Magic-square counting, the Birkhoff polytope of doubly stochastic
/// matrices in its minor chart, and its volume and reciprocity identities.

#include "core/ehrhart.hpp"
#include "core/polytope.hpp"
#include "core/rational.hpp"

namespace latpoly {

/// H_d(s): d x d nonnegative integer matrices with all row and column sums
/// equal to s, counted by a column-by-column DP.
Int magic_count(int d, long s);

/// P_d(s): as above with every entry strictly positive.
Int positive_magic_count(int d, long s);

/// The Birkhoff polytope B(d) in the top-left (d-1)x(d-1) minor chart,
/// a full-dimensional lattice polytope in Z^((d-1)^2) whose vertices are
/// the charts of the d! permutation matrices.  Supported for d = 2..4.
LatticePolytope birkhoff_polytope(int d);

/// The Ehrhart polynomial of the chart (so L(s) = H_d(s)), interpolated
/// from the DP at s = 0..(d-1)^2 and verified at the two following values.
Polynomial birkhoff_ehrhart(int d);

/// Reciprocity data for B(d), d = 2..3: the chart point counts against the
/// DP, interior counts against P_d, and L(-d-t) = (-1)^D L(t).
struct BirkhoffReciprocityReport {
    bool counts_match = false;     // chart scan = H_d(s), s = 0..D+2
    bool interiors_match = false;  // chart interior scan = P_d(s)
    bool one_positive_square = false;  // P_d(d) = 1, P_d(s) = 0 for s < d
    bool reciprocity = false;      // L(-d-t) = (-1)^D L(t), t = 0..3
    bool all_hold = false;
};
BirkhoffReciprocityReport birkhoff_reciprocity_check(int d);

/// Reflexivity data for the dilation d.B(d), d = 2..3: unique interior
/// point (the all-ones matrix), reflexivity after recentring, and the
/// functional equation L_{dB}(m) = (-1)^D L_{dB}(-m-1) for m = 0..3.
struct BirkhoffReflexiveReport {
    bool unique_interior = false;
    bool dilate_reflexive = false;
    bool functional_equation = false;
    bool all_hold = false;
};
BirkhoffReflexiveReport birkhoff_reflexive_checks(int d);

/// vol(B(d)) in the chart, from the alternating binomial identity
///   vol = (1/(D! d^D)) sum_m (-1)^(n+m) (C(D,n-m) + (-1)^d C(D,n+m+1)) H_d(md)
/// with D = (d-1)^2 and n = floor(D/2).  Supported for d = 2..4.
Rational birkhoff_volume(int d);

/// The identity value against the leading Ehrhart coefficient of the chart.
struct BirkhoffVolumeReport {
    Rational formula;
    Rational oracle;  // leading coefficient of the interpolated H_d
    bool agree = false;
};
BirkhoffVolumeReport birkhoff_volume_report(int d);

/// Even d only: the alternating sum
///   sum_{m=0}^{N} (-1)^(N+m) C(d^2-2d+3, N-m) H_d(dm),  N = ceil(D/2),
/// which must vanish.  Returns the sum; d = 2 or 4.
Int birkhoff_even_identity(int d);

/// The dilation d.B(d) has the single interior point, so the volume lower
/// bound applies to it: D! d^D vol(B) >= (D-1) H_d(d) - D^2 + 3.
struct BirkhoffBoundReport {
    Int lhs;
    Int rhs;
    bool holds = false;
    bool equality = false;
};
BirkhoffBoundReport birkhoff_lower_bound_check(int d);

} // namespace latpoly
