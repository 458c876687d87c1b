#pragma once
/// @file smooth.hpp
/// f-vectors of smooth polytopes in dimensions 3-5 recovered from boundary
/// counts of the first two dilations, together with the Euler and
/// Dehn-Sommerville consistency relations and the smooth-polytope bounds.

#include <optional>
#include <vector>

#include "core/counting.hpp"
#include "core/rational.hpp"

namespace latpoly {

/// f-vector (f_0, ..., f_{d-1}) of a smooth d-polytope from b1 = |∂P ∩ Z^d|
/// and, for d in {4,5}, b2 = |∂(2P) ∩ Z^d|:
///   d=3: (b1, 3b1-6, 2b1-4)
///   d=4: (b1, b2-b1, 2b2-4b1, b2-2b1)
///   d=5: (b1, b2-b1, 4b2-14b1+20, 5b2-20b1+30, 2b2-8b1+12)
std::vector<Int> smooth_f_vector(int d, const Int& b1,
                                 const std::optional<Int>& b2 = std::nullopt);
std::vector<Int> smooth_f_vector(const LatticePolytope& p);

/// Euler's relation Σ_{i=-1}^{d} (-1)^i f_i = 0 with f_{-1} = f_d = 1.
bool euler_relation_check(const std::vector<Int>& f);

/// Dehn-Sommerville relations of a simplicial d-polytope:
///   f_i = Σ_{j=i}^{d-1} (-1)^{d-1-j} C(j+1, i+1) f_j,  1 <= i <= d-2.
bool dehn_sommerville_check(const std::vector<Int>& f);

/// The smooth-polytope inequalities with their slacks:
///   (i)   b1 <= 3d (d even) / 3d-1 (d odd)
///   (ii)  12 f_{d-3} >= (3d-4) f_{d-2}
///   (iii) d f_0 <= f_1 + C(d+1, 2)
/// plus, for d in {4,5}, the two-sided bounds on b2 and the volume bound.
struct SmoothBoundsReport {
    int d = 0;
    std::vector<Int> f;
    Int b1, b2;  // b2 = 0 for d = 3
    Int slack_vertex_bound;    // 3d (or 3d-1) - b1
    Int slack_facet_ineq;      // 12 f_{d-3} - (3d-4) f_{d-2}
    Int slack_edge_ineq;       // f_1 + C(d+1,2) - d f_0
    bool has_b2_bounds = false;
    Int slack_b2_lower, slack_b2_upper;
    bool has_volume_bound = false;
    Rational volume;           // c_d from interpolation
    Rational slack_volume;     // bound minus d!·vol
    bool all_hold = false;
};
SmoothBoundsReport smooth_bounds_check(const LatticePolytope& p);

} // namespace latpoly
