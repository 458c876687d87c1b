#pragma once
/// @file ehrhart.hpp
/// Ehrhart polynomials recovered by exact interpolation from point counts,
/// the delta-vector (h*-vector), and the degree-3 Reeve identities.

#include <vector>

#include "core/counting.hpp"
#include "core/rational.hpp"

namespace latpoly {

/// A polynomial with exact rational coefficients, c[0] + c[1] x + ... .
struct Polynomial {
    RatVec coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    Rational eval(const Rational& x) const;
    Rational eval(const Int& x) const { return eval(Rational(x)); }
};

/// Interpolates the unique polynomial of degree <= values.size()-1 through
/// the nodes (0, values[0]), (1, values[1]), ... .
Polynomial interpolate_at_nodes(const std::vector<Int>& values);

/// The Ehrhart polynomial of a d-dimensional polytope from its counts at
/// m = 0..m_max (m_max >= d).  Interpolates on the first d+1 nodes and
/// requires every further count to match the polynomial exactly; a mismatch
/// means the counts cannot come from a lattice polytope of that dimension.
Polynomial ehrhart_from_counts(int d, const std::vector<Int>& totals);

/// Convenience: scan counts, then interpolate.  m_max defaults to d+1 so at
/// least one node is left over as a consistency check.
Polynomial ehrhart_polynomial(const LatticePolytope& p, long m_max = -1);

/// Leading coefficient c_d = vol(P).
Rational volume_from_ehrhart(const Polynomial& ehr);

/// Second coefficient doubled, 2 c_{d-1} = vol(∂P).
Rational boundary_volume_from_ehrhart(const Polynomial& ehr);

/// The delta-vector (δ_0, ..., δ_d) via the binomial transform
/// δ_i = Σ_j (-1)^j C(d+1, j) L(i-j) of counts at m = 0..d.  Negative
/// entries are impossible for genuine lattice polytopes and raise
/// ErrorCode::Inconsistency.
std::vector<Int> delta_vector(int d, const std::vector<Int>& totals);
std::vector<Int> delta_vector(const LatticePolytope& p);

/// The two degree-3 identities tying counts of a 3-polytope to its volume:
///   2(m-1)m(m+1) vol P = 2(L(m) - m L(1)) - (L∂(m) - m L∂(1))
///   L∂(m) = 2(1 - m^2) + m^2 L∂(1)
/// evaluated for m = 1..m_max against scanned counts.
struct ReeveReport {
    std::vector<long> m_values;
    std::vector<Rational> volume_lhs, volume_rhs;  // both sides of the first
    std::vector<Int> boundary_lhs, boundary_rhs;   // both sides of the second
    bool all_agree = false;
};
ReeveReport reeve_check(const LatticePolytope& p, long m_max);

} // namespace latpoly
