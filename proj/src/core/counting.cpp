#include "core/counting.hpp"

#include <algorithm>

#include "core/error.hpp"
#include "core/matrix.hpp"
#include "core/rational.hpp"

namespace latpoly {

namespace {

/// Depth-first scan over the integer points of m*P.  Coordinates are fixed
/// one at a time; at depth k the admissible interval for x_k is computed
/// from every facet inequality <a, x> <= m*b using the partial sum over the
/// fixed coordinates and a precomputed lower bound for the free tail.
class Scanner {
public:
    Scanner(const LatticePolytope& p, const Int& m) : d_(p.dim()) {
        for (const Facet& f : p.facets()) {
            normals_.push_back(f.normal);
            offsets_.push_back(f.offset * m);
        }
        nf_ = static_cast<int>(normals_.size());
        lo_.assign(d_, 0);
        hi_.assign(d_, 0);
        for (int j = 0; j < d_; ++j) {
            Int mn = p.vertices().front()[j];
            Int mx = mn;
            for (const IntVec& v : p.vertices()) {
                mn = std::min(mn, v[j]);
                mx = std::max(mx, v[j]);
            }
            lo_[j] = mn * m;
            hi_[j] = mx * m;
        }
        // tail_min_[k][f] = min over x_k..x_{d-1} in the box of the facet
        // normal's partial dot product over those coordinates.
        tail_min_.assign(d_ + 1, IntVec(nf_, 0));
        for (int k = d_ - 1; k >= 0; --k) {
            for (int f = 0; f < nf_; ++f) {
                const Int& a = normals_[f][k];
                tail_min_[k][f] =
                    tail_min_[k + 1][f] + std::min(a * lo_[k], a * hi_[k]);
            }
        }
        partial_.assign(nf_, 0);
        point_.assign(d_, 0);
    }

    void run() { descend(0); }

    Int total = 0;
    Int boundary = 0;
    std::vector<IntVec>* collect_interior = nullptr;

private:
    void descend(int k) {
        if (k == d_) {
            bool on_boundary = false;
            for (int f = 0; f < nf_; ++f) {
                if (partial_[f] == offsets_[f]) {
                    on_boundary = true;
                    break;
                }
            }
            total += 1;
            if (on_boundary) {
                boundary += 1;
            } else if (collect_interior != nullptr) {
                collect_interior->push_back(point_);
            }
            return;
        }
        Int x_lo = lo_[k];
        Int x_hi = hi_[k];
        for (int f = 0; f < nf_; ++f) {
            // a*x_k <= offset - partial - tail_min over the remaining coords.
            Int rem = offsets_[f] - partial_[f] - tail_min_[k + 1][f];
            const Int& a = normals_[f][k];
            if (a > 0) {
                x_hi = std::min(x_hi, floor_div(rem, a));
            } else if (a < 0) {
                x_lo = std::max(x_lo, ceil_div(rem, a));
            } else if (rem < 0) {
                return;
            }
        }
        if (x_lo > x_hi) return;
        for (int f = 0; f < nf_; ++f) partial_[f] += normals_[f][k] * x_lo;
        Int x = x_lo;
        for (;;) {
            point_[k] = x;
            descend(k + 1);
            if (x == x_hi) break;
            x += 1;
            for (int f = 0; f < nf_; ++f) partial_[f] += normals_[f][k];
        }
        for (int f = 0; f < nf_; ++f) partial_[f] -= normals_[f][k] * x;
    }

    int d_;
    int nf_ = 0;
    std::vector<IntVec> normals_;
    IntVec offsets_;
    IntVec lo_, hi_;
    std::vector<IntVec> tail_min_;
    IntVec partial_;
    IntVec point_;
};

} // namespace

DilationCounts count_points(const LatticePolytope& p, const Int& m) {
    if (m < 0) fail(ErrorCode::Scale, "dilation factor must be nonnegative");
    if (m == 0) return DilationCounts{1, 1, 0};
    Scanner scan(p, m);
    scan.run();
    return DilationCounts{scan.total, scan.boundary,
                          scan.total - scan.boundary};
}

std::vector<DilationCounts> count_range(const LatticePolytope& p, long m_max) {
    if (m_max < 0) fail(ErrorCode::Scale, "dilation range must be nonnegative");
    std::vector<DilationCounts> out;
    out.reserve(static_cast<std::size_t>(m_max) + 1);
    for (long m = 0; m <= m_max; ++m) out.push_back(count_points(p, Int(m)));
    return out;
}

std::vector<IntVec> interior_points(const LatticePolytope& p, const Int& m) {
    if (m < 0) fail(ErrorCode::Scale, "dilation factor must be nonnegative");
    std::vector<IntVec> pts;
    if (m == 0) return pts;
    Scanner scan(p, m);
    scan.collect_interior = &pts;
    scan.run();
    std::sort(pts.begin(), pts.end());
    return pts;
}

// Defined here rather than in polytope.cpp: both predicates need the
// interior-point enumerator.

bool is_fano(const LatticePolytope& p) {
    std::vector<IntVec> inner = interior_points(p, 1);
    if (inner.size() != 1) return false;
    for (const Int& c : inner.front()) {
        if (c != 0) return false;
    }
    return true;
}

bool is_smooth(const LatticePolytope& p) {
    if (!is_fano(p)) return false;
    const int d = p.dim();
    for (const Facet& f : p.facets()) {
        if (static_cast<int>(f.vertex_indices.size()) != d) return false;
        IntMatrix m(d, d);
        for (int i = 0; i < d; ++i) {
            const IntVec& v = p.vertices()[f.vertex_indices[i]];
            for (int j = 0; j < d; ++j) m.at(i, j) = v[j];
        }
        Int dv = det(m);
        if (dv != 1 && dv != -1) return false;
    }
    return true;
}

} // namespace latpoly
