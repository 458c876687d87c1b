#pragma once
/// @file counting.hpp
/// Exact lattice-point counting for dilates of a lattice polytope.  This is
/// the brute-force oracle the closed-form identities are checked against:
/// a bounding-box scan over integer points with per-coordinate interval
/// narrowing derived from the facet inequalities.

#include "core/polytope.hpp"

namespace latpoly {

struct DilationCounts {
    Int total;     // |mP ∩ Z^d|
    Int boundary;  // |∂(mP) ∩ Z^d|
    Int interior;  // |(mP)° ∩ Z^d|
};

/// Counts for the dilate m*P, m >= 0.  The degenerate dilate 0*P = {0}
/// counts as (1, 1, 0) by convention.
DilationCounts count_points(const LatticePolytope& p, const Int& m);

/// Counts for m = 0, 1, ..., m_max (index = dilation factor).
std::vector<DilationCounts> count_range(const LatticePolytope& p, long m_max);

/// The interior lattice points of m*P, in lexicographic order.
std::vector<IntVec> interior_points(const LatticePolytope& p, const Int& m);

} // namespace latpoly
