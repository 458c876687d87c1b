#pragma once
/// @file polytope.hpp
/// Full-dimensional lattice polytopes with exact vertex and facet data.
/// Hulls are built by incremental (beneath-beyond) insertion over the
/// integers; facets carry primitive outward integer normals, so a facet is
/// the face on the hyperplane <normal, x> = offset and the polytope is the
/// solution set of <normal, x> <= offset over all facets.

#include <vector>

#include "core/matrix.hpp"

namespace latpoly {

struct Facet {
    IntVec normal;                    // primitive outward integer normal
    Int offset;                       // <normal, x> <= offset for all of P
    std::vector<int> vertex_indices;  // sorted indices into vertices()

    bool operator==(const Facet&) const = default;
};

class LatticePolytope {
public:
    int dim() const { return dim_; }
    const std::vector<IntVec>& vertices() const { return vertices_; }
    const std::vector<Facet>& facets() const { return facets_; }

    /// Convex hull of the given integer points.  The points must affinely
    /// span R^dim; otherwise ErrorCode::Dimension reports the actual affine
    /// dimension.  Vertices are reduced to extreme points and stored in
    /// lexicographic order, facets sorted by (normal, offset) — so equal
    /// polytopes compare equal regardless of input order.
    static LatticePolytope hull_from_vertices(int dim,
                                              const std::vector<IntVec>& points);

    bool operator==(const LatticePolytope&) const = default;

private:
    int dim_ = 0;
    std::vector<IntVec> vertices_;
    std::vector<Facet> facets_;
};

struct RationalFacet {
    IntVec normal;    // primitive integer normal, outward
    Rational offset;  // <normal, x> <= offset
    std::vector<int> vertex_indices;
};

/// A polytope with rational vertices (duals of lattice polytopes live here).
class RationalPolytope {
public:
    int dim() const { return dim_; }
    const std::vector<RatVec>& vertices() const { return vertices_; }
    const std::vector<RationalFacet>& facets() const { return facets_; }

    /// Hull of rational points, computed by clearing denominators and
    /// running the integer hull on the scaled copy.
    static RationalPolytope hull_from_vertices(int dim,
                                               const std::vector<RatVec>& points);

    bool all_vertices_integral() const;

private:
    int dim_ = 0;
    std::vector<RatVec> vertices_;
    std::vector<RationalFacet> facets_;
};

/// Membership tests against the facet description (exact).
bool contains(const LatticePolytope& p, const RatVec& x);
bool strictly_contains(const LatticePolytope& p, const RatVec& x);
bool contains(const LatticePolytope& p, const IntVec& x);
bool strictly_contains(const LatticePolytope& p, const IntVec& x);

/// Polar dual {y : <y, x> <= 1 for all x in P}.  Requires the origin in the
/// strict interior (ErrorCode::Position otherwise).  Vertices of the dual
/// are normal/offset over the facets of P.
RationalPolytope dual(const LatticePolytope& p);
RationalPolytope dual(const RationalPolytope& p);

/// All proper nonempty faces as sorted vertex-index sets, grouped by face
/// dimension: faces_by_dim[k] lists the k-faces, k = 0 .. dim-1.  Computed
/// by closing the facet vertex sets under pairwise intersection.
struct FaceLattice {
    std::vector<std::vector<std::vector<int>>> faces_by_dim;
};
FaceLattice face_lattice(const LatticePolytope& p);

/// (f_0, ..., f_{d-1}): face counts per dimension.
std::vector<Int> f_vector_direct(const LatticePolytope& p);

/// Volume of one facet, normalized to the lattice induced on the facet's
/// affine hull: the facet is fan-triangulated from its lexicographically
/// smallest vertex, each simplex contributes |det| / (d-1)! with edge
/// vectors expressed in a basis of the saturated direction lattice.
Rational facet_lattice_volume(const LatticePolytope& p, const Facet& f);

/// Sum of facet_lattice_volume over all facets: the lattice-normalized
/// surface volume used throughout the boundary identities.
Rational boundary_volume_direct(const LatticePolytope& p);

/// Exactly one interior lattice point, namely the origin.
bool is_fano(const LatticePolytope& p);

/// Fano, every facet has exactly dim vertices, and those vertices form a
/// basis of Z^dim (vertex matrix determinant ±1).
bool is_smooth(const LatticePolytope& p);

/// Image of p under x -> t x + shift with t unimodular (|det t| = 1);
/// used by invariance tests.  t is given row-wise.
LatticePolytope unimodular_image(const LatticePolytope& p, const IntMatrix& t,
                                 const IntVec& shift);

/// p translated by the integer vector s.
LatticePolytope translate(const LatticePolytope& p, const IntVec& s);

/// dilation factor * p (vertex-wise).
LatticePolytope dilate(const LatticePolytope& p, const Int& factor);

} // namespace latpoly
