#pragma once
/// @file order.hpp
/// Finite posets, order/strict-order polynomials, linear extensions, order
/// polytopes, and their boundary-volume and reflexivity identities.

#include <utility>
#include <vector>

#include "core/counting.hpp"
#include "core/ehrhart.hpp"
#include "core/rational.hpp"

namespace latpoly {

/// A finite poset on elements 0..d-1, built from an arbitrary acyclic
/// relation list (the reflexive-transitive closure is derived, cover
/// relations are recomputed).  Immutable after construction.
class Poset {
public:
    Poset(int size, const std::vector<std::pair<int, int>>& relations);

    static Poset chain(int d);
    static Poset antichain(int d);

    int size() const { return d_; }
    /// a <= b in the partial order.
    bool less_equal(int a, int b) const { return leq_[a][b]; }
    /// Cover relations as (lower, upper) pairs, lexicographically sorted.
    const std::vector<std::pair<int, int>>& cover_relations() const {
        return covers_;
    }
    std::vector<int> minimal_elements() const;
    std::vector<int> maximal_elements() const;

    /// All maximal chains share one length (measured in cover steps).
    bool is_graded() const { return graded_; }
    /// The common maximal chain length; error when not graded.
    int rank() const;

    /// All down-sets (down-closed subsets) as bitmasks, increasing.
    const std::vector<unsigned>& down_sets() const { return down_sets_; }

    bool operator==(const Poset& o) const {
        return d_ == o.d_ && covers_ == o.covers_;
    }

private:
    int d_;
    std::vector<std::vector<bool>> leq_;
    std::vector<std::pair<int, int>> covers_;
    std::vector<unsigned> down_sets_;
    bool graded_ = false;
    int rank_ = -1;
};

/// Ω(Q,k): order-preserving maps Q -> C_k, by DP over down-set multichains.
/// Ω(Q,0) = 0 by convention (consistent with the polynomial).
Int order_polynomial(const Poset& q, long k);
/// Ω̄(Q,k): strictly order-preserving maps Q -> C_k.
Int strict_order_polynomial(const Poset& q, long k);

/// e(Q): linear extensions, counted by a down-set lattice walk.
Int linear_extensions(const Poset& q);

/// e_s(Q) for s = 1..d (index 0 unused and set to 0): surjective
/// order-preserving map counts, from the triangular system
/// Ω(Q,k) = Σ_s e_s C(k,s).  Cross-checked against e_d = e(Q).
std::vector<Int> surjective_counts(const Poset& q);

/// The order polynomial as an exact polynomial in k (degree d),
/// interpolated at k = 0..d and verified against the DP at d+1 and d+2.
Polynomial order_polynomial_interpolated(const Poset& q);

/// Stanley's reciprocity and coefficient identities for Ω.
struct OrderReciprocityReport {
    bool strict_reciprocity = false;   // Ω̄(k) = (-1)^d Ω(-k), k = 1..k_max
    bool leading_coeff = false;        // a_d = e/d!
    bool graded = false;
    bool subleading_coeff = true;      // graded: a_{d-1} = r·e/(2(d-1)!)
    bool graded_symmetry = true;       // graded: Ω(-r-k) = (-1)^d Ω(k)
    bool surjective_identity = true;   // graded, d >= 2: 2e_{d-1} = (d+r-1)e
    bool all_hold = false;
};
OrderReciprocityReport reciprocity_checks(const Poset& q, long k_max);

/// The order polytope 𝒪(Q) ⊂ [0,1]^d: vertices are indicator vectors of
/// up-sets.  The facet count is asserted to equal the number of cover
/// relations of Q with adjoined bottom and top elements.
LatticePolytope order_polytope(const Poset& q);

/// L_{𝒪(Q)}(k) = Ω(Q,k+1), interior counts = Ω̄(Q,k-1), vol = e(Q)/d!.
struct OrderEhrhartReport {
    bool counts_match = false;
    bool interiors_match = false;
    bool volume_matches = false;
    bool all_hold = false;
};
OrderEhrhartReport order_ehrhart_checks(const Poset& q, long k_max);

/// Boundary volume of 𝒪(Q) by formula and by the geometric oracle.
struct OrderBoundaryReport {
    Rational general;   // ((3-d)e + 2e_{d-1}) / (d-1)!
    bool graded = false;
    Rational graded_form;  // (r+2)e/(d-1)!, graded only
    Rational direct;       // boundary_volume_direct(𝒪(Q))
    bool agree = false;
};
OrderBoundaryReport order_boundary_volume_report(const Poset& q);
Rational order_boundary_volume(const Poset& q);

/// (r+2)·𝒪(Q) translated by the negative of its unique interior lattice
/// point; graded Q only.  Verifies the Ω(Q,-1) = ... = Ω(Q,-r) = 0 and
/// Ω(Q,-r-1) = (-1)^d vanishing pattern along the way.
LatticePolytope reflexive_dilate(const Poset& q);

/// The two reflexive order-polytope identities.
struct OrderReflexiveReport {
    Int lhs;       // (r+2)^d e(Q)
    Int rhs;       // alternating binomial sum over Ω(Q, m(r+2)+1)
    bool volume_identity = false;
    bool has_odd_identity = false;
    Int odd_value;  // odd d: must be 0
    bool odd_identity = true;
    bool all_hold = false;
};
OrderReflexiveReport order_reflexive_identities(const Poset& q);

/// Canonical representatives of all isomorphism classes of posets on
/// 1..max_size elements (1, 2, 5, 16 classes for sizes 1-4).
std::vector<Poset> all_posets_up_to(int max_size);

} // namespace latpoly
