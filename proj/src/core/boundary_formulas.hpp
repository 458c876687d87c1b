#pragma once
/// @file boundary_formulas.hpp
/// Closed-form expressions for the boundary volume and the volume of a
/// lattice polytope in terms of finitely many dilation point counts.
///
/// Count arrays are indexed by the dilation factor m, with the m = 0 entry
/// equal to 1 for both total and boundary counts (the counting module's
/// convention for the degenerate dilate).

#include <vector>

#include "core/counting.hpp"
#include "core/rational.hpp"

namespace latpoly {

/// Coefficients (α_0, ..., α_n), n = ⌊d/2⌋, of the boundary-volume formula
///   (d-1)! vol(∂P) = Σ_m α_m |∂(mP) ∩ Z^d|,
///   α_m = (-1)^{n+m} ( C(d-1, n-m) + (-1)^{d-1} C(d-1, n+m) ).
/// Valid for 2 <= d <= 12 (the supported table range).
std::vector<Int> table1_coefficients(int d);

/// Boundary volume via the explicit alternating sum above.
Rational boundary_volume_explicit(int d, const std::vector<Int>& boundary);
Rational boundary_volume_explicit(const LatticePolytope& p);

/// Boundary volume as a ratio of two n x n determinants:
///   vol(∂P) = det A / det D,
///   A_{ij} = |∂(iP) ∩ Z^d| - 2(d - 2n)  if j = 1,  i^{d-2j+1} otherwise,
///   D_{ij} = i^{d-2j+1},     1 <= i, j <= n = ⌊d/2⌋.
Rational boundary_volume_matrix(int d, const std::vector<Int>& boundary);
Rational boundary_volume_matrix(const LatticePolytope& p);

/// Volume from mixed counts, N = ⌈d/2⌉:
///   vol P = (1/d!) Σ_{m=0}^{N} (-1)^{N+m}
///           ( C(d, N-m) + (-1)^d C(d, N+m) ) ( L(m) - L∂(m)/2 ).
Rational volume_general(int d, const std::vector<Int>& totals,
                        const std::vector<Int>& boundary);
Rational volume_general(const LatticePolytope& p);

/// Macdonald's even-dimensional volume formula (d even), from interior
/// counts I(m) and boundary counts B(m), m = 1..d/2:
///   d! vol P = Σ_{m=1}^{d/2} (-1)^{d/2-m} C(d, d/2-m) (2 I(m) + B(m))
///              + (-1)^{d/2} C(d, d/2).
Rational volume_macdonald_even(int d, const std::vector<Int>& interiors,
                               const std::vector<Int>& boundary);
Rational volume_macdonald_even(const LatticePolytope& p);

/// The odd-dimensional counterpart (d odd):
///   (d+1)! vol P = Σ_{m=1}^{(d+1)/2} (-1)^{(d+1)/2-m} C(d+1, (d+1)/2-m)
///                  * m (2 I(m) + B(m)).
Rational volume_kolodziejczyk_odd(int d, const std::vector<Int>& interiors,
                                  const std::vector<Int>& boundary);
Rational volume_kolodziejczyk_odd(const LatticePolytope& p);

} // namespace latpoly
