#include "core/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

namespace latpoly {

namespace {

// ---------------------------------------------------------------------------
// hull machinery (beneath-beyond with exact arithmetic)
// ---------------------------------------------------------------------------

struct SimplicialFacet {
    std::vector<int> vix;  // sorted point indices, size = dim
    IntVec normal;
    Int offset;
};

int affine_rank(const std::vector<IntVec>& pts, const std::vector<int>& idx)
{
    if (idx.size() <= 1)
        return 0;
    std::vector<IntVec> diffs;
    diffs.reserve(idx.size() - 1);
    for (size_t i = 1; i < idx.size(); ++i) {
        IntVec d(pts[idx[0]].size());
        for (size_t j = 0; j < d.size(); ++j)
            d[j] = pts[idx[i]][j] - pts[idx[0]][j];
        diffs.push_back(std::move(d));
    }
    return rank(IntMatrix::from_rows(diffs));
}

// Facet through the dim points pts[vix], oriented away from the reference
// point refsum/refcnt (a strictly interior rational point kept as an integer
// sum to avoid rational arithmetic).
SimplicialFacet make_simplicial_facet(const std::vector<IntVec>& pts,
                                      std::vector<int> vix, const IntVec& refsum,
                                      int refcnt, int dim)
{
    std::vector<IntVec> edges;
    edges.reserve(vix.size() - 1);
    for (size_t i = 1; i < vix.size(); ++i) {
        IntVec e(dim);
        for (int j = 0; j < dim; ++j)
            e[j] = pts[vix[i]][j] - pts[vix[0]][j];
        edges.push_back(std::move(e));
    }
    std::vector<IntVec> kern = kernel_basis(
        edges.empty() ? IntMatrix(0, dim) : IntMatrix::from_rows(edges));
    if (kern.size() != 1)
        fail(ErrorCode::Inconsistency, "degenerate facet candidate in hull");
    IntVec n = std::move(kern[0]);
    Int b = dot(n, pts[vix[0]]);

    Int side = dot(n, refsum);  // compare side/refcnt against b
    const Int scaled = b * refcnt;
    if (side == scaled)
        fail(ErrorCode::Inconsistency, "interior reference point on a facet hyperplane");
    if (side > scaled) {
        for (Int& c : n)
            c = -c;
        b = -b;
    }
    return {std::move(vix), std::move(n), std::move(b)};
}

std::vector<int> sorted_with(const std::vector<int>& base, int extra)
{
    std::vector<int> out = base;
    out.push_back(extra);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

LatticePolytope LatticePolytope::hull_from_vertices(int dim,
                                                    const std::vector<IntVec>& points)
{
    if (dim < 1)
        fail(ErrorCode::Dimension, "polytope dimension must be at least 1");
    for (const IntVec& p : points)
        if (static_cast<int>(p.size()) != dim)
            fail(ErrorCode::Arity, "vertex of wrong length");

    // Deduplicate and sort; the whole construction is then a pure function
    // of the point set.
    std::vector<IntVec> pts(points);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    // Greedy affinely independent seed simplex.
    std::vector<int> simplex;
    for (size_t i = 0; i < pts.size() && simplex.size() < size_t(dim) + 1; ++i) {
        simplex.push_back(static_cast<int>(i));
        if (affine_rank(pts, simplex) != static_cast<int>(simplex.size()) - 1)
            simplex.pop_back();
    }
    if (simplex.size() != size_t(dim) + 1) {
        std::vector<int> all(pts.size());
        for (size_t i = 0; i < pts.size(); ++i)
            all[i] = static_cast<int>(i);
        fail(ErrorCode::Dimension,
             "points span affine dimension " + std::to_string(affine_rank(pts, all)) +
                 ", expected " + std::to_string(dim));
    }

    IntVec refsum(dim, Int(0));  // sum of seed vertices: interior reference
    for (int ix : simplex)
        for (int j = 0; j < dim; ++j)
            refsum[j] += pts[ix][j];
    const int refcnt = dim + 1;

    std::vector<SimplicialFacet> facets;
    for (int omit = 0; omit <= dim; ++omit) {
        std::vector<int> vix;
        for (int k = 0; k <= dim; ++k)
            if (k != omit)
                vix.push_back(simplex[k]);
        facets.push_back(make_simplicial_facet(pts, std::move(vix), refsum, refcnt, dim));
    }

    // Insert the remaining points one at a time.
    std::set<int> seeded(simplex.begin(), simplex.end());
    for (int pi = 0; pi < static_cast<int>(pts.size()); ++pi) {
        if (seeded.count(pi))
            continue;
        const IntVec& p = pts[pi];
        std::vector<char> visible(facets.size(), 0);
        bool any = false;
        for (size_t fi = 0; fi < facets.size(); ++fi) {
            if (dot(facets[fi].normal, p) > facets[fi].offset) {
                visible[fi] = 1;
                any = true;
            }
        }
        if (!any)
            continue;  // p is inside or on the current hull: never a vertex

        // Ridges (dim-1 point subsets) with incident facet pairs; a ridge
        // seen by exactly one visible facet lies on the horizon.
        std::map<std::vector<int>, std::vector<int>> ridges;
        for (size_t fi = 0; fi < facets.size(); ++fi) {
            const std::vector<int>& v = facets[fi].vix;
            for (size_t k = 0; k < v.size(); ++k) {
                std::vector<int> r;
                r.reserve(v.size() - 1);
                for (size_t t = 0; t < v.size(); ++t)
                    if (t != k)
                        r.push_back(v[t]);
                ridges[r].push_back(static_cast<int>(fi));
            }
        }
        std::vector<SimplicialFacet> next;
        for (size_t fi = 0; fi < facets.size(); ++fi)
            if (!visible[fi])
                next.push_back(std::move(facets[fi]));
        for (const auto& [ridge, fids] : ridges) {
            if (fids.size() != 2)
                fail(ErrorCode::Inconsistency, "hull boundary is not closed");
            const int vis = visible[fids[0]] + visible[fids[1]];
            if (vis == 1)
                next.push_back(make_simplicial_facet(pts, sorted_with(ridge, pi),
                                                     refsum, refcnt, dim));
        }
        facets = std::move(next);
    }

    // Merge simplicial pieces sharing a hyperplane into geometric facets.
    std::set<std::pair<IntVec, Int>> planes;
    for (const SimplicialFacet& f : facets)
        planes.insert({f.normal, f.offset});

    // A point is a vertex iff it satisfies every facet inequality and its
    // tight facet normals span the full dimension.
    std::vector<IntVec> verts;
    for (const IntVec& q : pts) {
        std::vector<IntVec> active;
        bool inside = true;
        for (const auto& [n, b] : planes) {
            const Int s = dot(n, q);
            if (s > b) {
                inside = false;
                break;
            }
            if (s == b)
                active.push_back(n);
        }
        if (!inside)
            fail(ErrorCode::Inconsistency, "input point outside computed hull");
        if (!active.empty() &&
            rank(IntMatrix::from_rows(active)) == dim)
            verts.push_back(q);
    }
    // pts was sorted, so verts is lexicographically sorted already.

    LatticePolytope out;
    out.dim_ = dim;
    out.vertices_ = std::move(verts);
    for (const auto& [n, b] : planes) {
        Facet f;
        f.normal = n;
        f.offset = b;
        for (size_t vi = 0; vi < out.vertices_.size(); ++vi)
            if (dot(n, out.vertices_[vi]) == b)
                f.vertex_indices.push_back(static_cast<int>(vi));
        if (static_cast<int>(f.vertex_indices.size()) < dim)
            fail(ErrorCode::Inconsistency, "facet with too few vertices");
        out.facets_.push_back(std::move(f));
    }
    // std::set ordering of (normal, offset) already fixes the facet order.
    return out;
}

RationalPolytope RationalPolytope::hull_from_vertices(int dim,
                                                      const std::vector<RatVec>& points)
{
    if (dim < 1)
        fail(ErrorCode::Dimension, "polytope dimension must be at least 1");
    Int scale = 1;
    for (const RatVec& p : points) {
        if (static_cast<int>(p.size()) != dim)
            fail(ErrorCode::Arity, "vertex of wrong length");
        for (const Rational& c : p)
            scale = lcm(scale, c.get_den());
    }
    std::vector<IntVec> scaled;
    scaled.reserve(points.size());
    for (const RatVec& p : points) {
        IntVec q(dim);
        for (int j = 0; j < dim; ++j)
            q[j] = to_integer(p[j] * Rational(scale));
        scaled.push_back(std::move(q));
    }
    LatticePolytope hull = LatticePolytope::hull_from_vertices(dim, scaled);

    RationalPolytope out;
    out.dim_ = dim;
    for (const IntVec& v : hull.vertices()) {
        RatVec w(dim);
        for (int j = 0; j < dim; ++j)
            w[j] = make_rational(v[j], scale);
        out.vertices_.push_back(std::move(w));
    }
    for (const Facet& f : hull.facets()) {
        RationalFacet rf;
        rf.normal = f.normal;
        rf.offset = make_rational(f.offset, scale);
        rf.vertex_indices = f.vertex_indices;
        out.facets_.push_back(std::move(rf));
    }
    return out;
}

bool RationalPolytope::all_vertices_integral() const
{
    for (const RatVec& v : vertices_)
        for (const Rational& c : v)
            if (!is_integral(c))
                return false;
    return true;
}

bool contains(const LatticePolytope& p, const RatVec& x)
{
    for (const Facet& f : p.facets())
        if (dot(f.normal, x) > Rational(f.offset))
            return false;
    return true;
}

bool strictly_contains(const LatticePolytope& p, const RatVec& x)
{
    for (const Facet& f : p.facets())
        if (dot(f.normal, x) >= Rational(f.offset))
            return false;
    return true;
}

bool contains(const LatticePolytope& p, const IntVec& x)
{
    for (const Facet& f : p.facets())
        if (dot(f.normal, x) > f.offset)
            return false;
    return true;
}

bool strictly_contains(const LatticePolytope& p, const IntVec& x)
{
    for (const Facet& f : p.facets())
        if (dot(f.normal, x) >= f.offset)
            return false;
    return true;
}

RationalPolytope dual(const LatticePolytope& p)
{
    std::vector<RatVec> verts;
    for (const Facet& f : p.facets()) {
        if (f.offset <= 0)
            fail(ErrorCode::Position, "dual requires the origin strictly inside");
        RatVec v(p.dim());
        for (int j = 0; j < p.dim(); ++j)
            v[j] = make_rational(f.normal[j], f.offset);
        verts.push_back(std::move(v));
    }
    return RationalPolytope::hull_from_vertices(p.dim(), verts);
}

RationalPolytope dual(const RationalPolytope& p)
{
    std::vector<RatVec> verts;
    for (const RationalFacet& f : p.facets()) {
        if (f.offset <= 0)
            fail(ErrorCode::Position, "dual requires the origin strictly inside");
        RatVec v(p.dim());
        for (int j = 0; j < p.dim(); ++j)
            v[j] = Rational(f.normal[j]) / f.offset;
        verts.push_back(std::move(v));
    }
    return RationalPolytope::hull_from_vertices(p.dim(), verts);
}

FaceLattice face_lattice(const LatticePolytope& p)
{
    // Every proper face is an intersection of facets and is determined by
    // its vertex set, so closing the facet vertex sets under pairwise
    // intersection enumerates exactly the proper nonempty faces.
    std::vector<std::vector<int>> facet_sets;
    for (const Facet& f : p.facets())
        facet_sets.push_back(f.vertex_indices);

    std::set<std::vector<int>> all(facet_sets.begin(), facet_sets.end());
    std::vector<std::vector<int>> work(facet_sets);
    while (!work.empty()) {
        std::vector<int> s = std::move(work.back());
        work.pop_back();
        for (const std::vector<int>& f : facet_sets) {
            std::vector<int> t;
            std::set_intersection(s.begin(), s.end(), f.begin(), f.end(),
                                  std::back_inserter(t));
            if (t.empty())
                continue;
            if (all.insert(t).second)
                work.push_back(std::move(t));
        }
    }

    FaceLattice fl;
    fl.faces_by_dim.assign(p.dim(), {});
    for (const std::vector<int>& s : all) {
        const int d = affine_rank(p.vertices(), s);
        if (d < 0 || d >= p.dim())
            fail(ErrorCode::Inconsistency, "face of impossible dimension");
        fl.faces_by_dim[d].push_back(s);
    }
    for (auto& bucket : fl.faces_by_dim)
        std::sort(bucket.begin(), bucket.end());
    return fl;
}

std::vector<Int> f_vector_direct(const LatticePolytope& p)
{
    FaceLattice fl = face_lattice(p);
    std::vector<Int> f(p.dim());
    for (int k = 0; k < p.dim(); ++k)
        f[k] = static_cast<long>(fl.faces_by_dim[k].size());
    return f;
}

namespace {

// Fan triangulation of a k-face: cone from the lexicographically smallest
// vertex over the triangulated (k-1)-subfaces that avoid it.
struct Triangulator {
    const LatticePolytope& p;
    const FaceLattice& fl;
    std::map<std::vector<int>, std::vector<std::vector<int>>> memo;

    const std::vector<std::vector<int>>& run(const std::vector<int>& face, int k)
    {
        auto it = memo.find(face);
        if (it != memo.end())
            return it->second;
        std::vector<std::vector<int>> out;
        if (static_cast<int>(face.size()) == k + 1) {
            out.push_back(face);
        } else {
            int apex = face[0];
            for (int v : face)
                if (p.vertices()[v] < p.vertices()[apex])
                    apex = v;
            for (const std::vector<int>& g : fl.faces_by_dim[k - 1]) {
                if (std::binary_search(g.begin(), g.end(), apex))
                    continue;
                if (!std::includes(face.begin(), face.end(), g.begin(), g.end()))
                    continue;
                for (std::vector<int> s : run(g, k - 1)) {
                    s.push_back(apex);
                    std::sort(s.begin(), s.end());
                    out.push_back(std::move(s));
                }
            }
        }
        return memo.emplace(face, std::move(out)).first->second;
    }
};

Rational facet_volume_with(const LatticePolytope& p, const Facet& f,
                           Triangulator& tri)
{
    const int d = p.dim();
    const int k = d - 1;
    if (k == 0)
        return 1;  // a single point has normalized volume 1

    // Basis of the saturated direction lattice of the facet's affine hull;
    // edge vectors of facet simplices have integer coordinates in it.
    const std::vector<IntVec>& vs = p.vertices();
    std::vector<IntVec> dirs;
    for (size_t i = 1; i < f.vertex_indices.size(); ++i) {
        IntVec e(d);
        for (int j = 0; j < d; ++j)
            e[j] = vs[f.vertex_indices[i]][j] - vs[f.vertex_indices[0]][j];
        dirs.push_back(std::move(e));
    }
    std::vector<IntVec> basis = saturation_basis(d, dirs);
    if (static_cast<int>(basis.size()) != k)
        fail(ErrorCode::Inconsistency, "facet direction space of wrong rank");

    // Independent column set of the basis matrix: solving on those columns
    // determines the coordinates, the remaining columns are verified.
    std::vector<int> cols;
    {
        std::vector<IntVec> picked;
        for (int c = 0; c < d && static_cast<int>(cols.size()) < k; ++c) {
            IntVec colv(k);
            for (int r = 0; r < k; ++r)
                colv[r] = basis[r][c];
            picked.push_back(colv);
            if (rank(IntMatrix::from_rows(picked)) == static_cast<int>(picked.size()))
                cols.push_back(c);
            else
                picked.pop_back();
        }
    }
    RationalMatrix sys(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            sys.at(j, i) = Rational(basis[i][cols[j]]);  // transposed: unknowns are coefficients

    Rational total = 0;
    for (const std::vector<int>& splx : tri.run(f.vertex_indices, k)) {
        IntMatrix coords(k, k);
        for (int i = 1; i <= k; ++i) {
            RatVec rhs(k);
            for (int j = 0; j < k; ++j)
                rhs[j] = Rational(vs[splx[i]][cols[j]] - vs[splx[0]][cols[j]]);
            RatVec c = solve_linear(sys, rhs);
            for (int j = 0; j < k; ++j)
                coords.at(i - 1, j) = to_integer(c[j]);
            // Verify on the full coordinate list, not just the solved columns.
            for (int cc = 0; cc < d; ++cc) {
                Int want = vs[splx[i]][cc] - vs[splx[0]][cc];
                Int got = 0;
                for (int j = 0; j < k; ++j)
                    got += coords.at(i - 1, j) * basis[j][cc];
                if (got != want)
                    fail(ErrorCode::Inconsistency, "edge outside facet lattice");
            }
        }
        Int dv = det(coords);
        total += Rational(abs(dv));
    }
    return total / Rational(factorial(k));
}

} // namespace

Rational facet_lattice_volume(const LatticePolytope& p, const Facet& f)
{
    FaceLattice fl = face_lattice(p);
    Triangulator tri{p, fl, {}};
    return facet_volume_with(p, f, tri);
}

Rational boundary_volume_direct(const LatticePolytope& p)
{
    FaceLattice fl = face_lattice(p);
    Triangulator tri{p, fl, {}};
    Rational total = 0;
    for (const Facet& f : p.facets())
        total += facet_volume_with(p, f, tri);
    return total;
}

LatticePolytope unimodular_image(const LatticePolytope& p, const IntMatrix& t,
                                 const IntVec& shift)
{
    if (t.rows != p.dim() || t.cols != p.dim() ||
        static_cast<int>(shift.size()) != p.dim())
        fail(ErrorCode::Dimension, "transform shape mismatch");
    Int dv = det(t);
    if (dv != 1 && dv != -1)
        fail(ErrorCode::Precondition, "transform is not unimodular");
    std::vector<IntVec> mapped;
    for (const IntVec& v : p.vertices()) {
        IntVec w(p.dim());
        for (int i = 0; i < p.dim(); ++i) {
            w[i] = shift[i];
            for (int j = 0; j < p.dim(); ++j)
                w[i] += t.at(i, j) * v[j];
        }
        mapped.push_back(std::move(w));
    }
    return LatticePolytope::hull_from_vertices(p.dim(), mapped);
}

LatticePolytope translate(const LatticePolytope& p, const IntVec& s)
{
    return unimodular_image(p, IntMatrix::identity(p.dim()), s);
}

LatticePolytope dilate(const LatticePolytope& p, const Int& factor)
{
    if (factor <= 0)
        fail(ErrorCode::Scale, "dilation factor must be positive");
    std::vector<IntVec> mapped;
    for (const IntVec& v : p.vertices()) {
        IntVec w(p.dim());
        for (int j = 0; j < p.dim(); ++j)
            w[j] = factor * v[j];
        mapped.push_back(std::move(w));
    }
    return LatticePolytope::hull_from_vertices(p.dim(), mapped);
}

} // namespace latpoly
