#include "core/order.hpp"

#include <algorithm>
#include <numeric>

#include "core/error.hpp"
#include "core/matrix.hpp"
#include "core/reflexive.hpp"

namespace latpoly {

namespace {

constexpr int kMaxPosetSize = 16;

/// Sub-down-set adjacency: for each down-set (by index) the indices of the
/// down-sets contained in it.  Shared by the two polynomial DPs.
struct DownSetTables {
    explicit DownSetTables(const Poset& q) : sets(q.down_sets()) {
        const int d = q.size();
        index.assign(std::size_t(1) << d, -1);
        for (std::size_t i = 0; i < sets.size(); ++i) {
            index[sets[i]] = static_cast<int>(i);
        }
        subsets.resize(sets.size());
        for (std::size_t i = 0; i < sets.size(); ++i) {
            unsigned mask = sets[i];
            for (unsigned sub = mask;; sub = (sub - 1) & mask) {
                if (index[sub] >= 0) subsets[i].push_back(index[sub]);
                if (sub == 0) break;
            }
        }
        full = index[(1u << d) - 1];
    }

    const std::vector<unsigned>& sets;
    std::vector<int> index;
    std::vector<std::vector<int>> subsets;
    int full;
};

std::vector<bool> antichain_table(const Poset& q) {
    const int d = q.size();
    std::vector<unsigned> cmp(d, 0);
    for (int a = 0; a < d; ++a) {
        for (int b = 0; b < d; ++b) {
            if (a != b && (q.less_equal(a, b) || q.less_equal(b, a))) {
                cmp[a] |= 1u << b;
            }
        }
    }
    std::vector<bool> anti(std::size_t(1) << d, false);
    anti[0] = true;
    for (unsigned m = 1; m < anti.size(); ++m) {
        unsigned low = m & (~m + 1);
        int x = __builtin_ctz(low);
        anti[m] = anti[m ^ low] && (cmp[x] & m) == 0;
    }
    return anti;
}

} // namespace

Poset::Poset(int size, const std::vector<std::pair<int, int>>& relations)
    : d_(size) {
    if (d_ < 1) fail(ErrorCode::Dimension, "poset must be non-empty");
    if (d_ > kMaxPosetSize) fail(ErrorCode::Scale, "poset too large");
    leq_.assign(d_, std::vector<bool>(d_, false));
    for (int i = 0; i < d_; ++i) leq_[i][i] = true;
    for (const auto& [lo, hi] : relations) {
        if (lo < 0 || lo >= d_ || hi < 0 || hi >= d_) {
            fail(ErrorCode::Precondition, "relation element out of range");
        }
        leq_[lo][hi] = true;
    }
    for (int k = 0; k < d_; ++k) {
        for (int i = 0; i < d_; ++i) {
            if (!leq_[i][k]) continue;
            for (int j = 0; j < d_; ++j) {
                if (leq_[k][j]) leq_[i][j] = true;
            }
        }
    }
    for (int i = 0; i < d_; ++i) {
        for (int j = i + 1; j < d_; ++j) {
            if (leq_[i][j] && leq_[j][i]) {
                fail(ErrorCode::Cycle, "relation list contains a cycle");
            }
        }
    }
    for (int a = 0; a < d_; ++a) {
        for (int b = 0; b < d_; ++b) {
            if (a == b || !leq_[a][b]) continue;
            bool cover = true;
            for (int c = 0; c < d_ && cover; ++c) {
                if (c != a && c != b && leq_[a][c] && leq_[c][b]) {
                    cover = false;
                }
            }
            if (cover) covers_.emplace_back(a, b);
        }
    }
    std::sort(covers_.begin(), covers_.end());

    std::vector<unsigned> down_mask(d_, 0);
    for (int x = 0; x < d_; ++x) {
        for (int y = 0; y < d_; ++y) {
            if (leq_[y][x]) down_mask[x] |= 1u << y;
        }
    }
    for (unsigned m = 0; m < (1u << d_); ++m) {
        bool closed = true;
        for (int x = 0; x < d_ && closed; ++x) {
            if ((m >> x & 1u) != 0 && (down_mask[x] & ~m) != 0) closed = false;
        }
        if (closed) down_sets_.push_back(m);
    }

    // Gradedness: all maximal chains (cover paths from a minimal to a
    // maximal element) have one common length.  Chains through x decompose
    // into a downward and an upward part, so it is enough that the extreme
    // path lengths agree elementwise and share one value.
    std::vector<int> order(d_);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [this](int a, int b) {
        int na = 0, nb = 0;
        for (int y = 0; y < d_; ++y) {
            na += leq_[y][a] ? 1 : 0;
            nb += leq_[y][b] ? 1 : 0;
        }
        return na < nb;
    });
    std::vector<std::vector<int>> below(d_), above(d_);
    for (const auto& [lo, hi] : covers_) {
        below[hi].push_back(lo);
        above[lo].push_back(hi);
    }
    std::vector<int> dmin(d_, 0), dmax(d_, 0), umin(d_, 0), umax(d_, 0);
    for (int x : order) {
        for (int y : below[x]) {
            dmin[x] = below[x].front() == y ? dmin[y] + 1
                                            : std::min(dmin[x], dmin[y] + 1);
            dmax[x] = std::max(dmax[x], dmax[y] + 1);
        }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int x = *it;
        for (int y : above[x]) {
            umin[x] = above[x].front() == y ? umin[y] + 1
                                            : std::min(umin[x], umin[y] + 1);
            umax[x] = std::max(umax[x], umax[y] + 1);
        }
    }
    graded_ = true;
    int common = dmin[order[0]] + umin[order[0]];
    for (int x = 0; x < d_; ++x) {
        int lo = dmin[x] + umin[x];
        int hi = dmax[x] + umax[x];
        if (lo != hi || lo != common) graded_ = false;
    }
    if (graded_) rank_ = common;
}

Poset Poset::chain(int d) {
    std::vector<std::pair<int, int>> rel;
    for (int i = 0; i + 1 < d; ++i) rel.emplace_back(i, i + 1);
    return Poset(d, rel);
}

Poset Poset::antichain(int d) { return Poset(d, {}); }

std::vector<int> Poset::minimal_elements() const {
    std::vector<int> out;
    for (int x = 0; x < d_; ++x) {
        bool minimal = true;
        for (int y = 0; y < d_; ++y) {
            if (y != x && leq_[y][x]) minimal = false;
        }
        if (minimal) out.push_back(x);
    }
    return out;
}

std::vector<int> Poset::maximal_elements() const {
    std::vector<int> out;
    for (int x = 0; x < d_; ++x) {
        bool maximal = true;
        for (int y = 0; y < d_; ++y) {
            if (y != x && leq_[x][y]) maximal = false;
        }
        if (maximal) out.push_back(x);
    }
    return out;
}

int Poset::rank() const {
    if (!graded_) fail(ErrorCode::Precondition, "poset is not graded");
    return rank_;
}

Int order_polynomial(const Poset& q, long k) {
    if (k < 0) fail(ErrorCode::Scale, "chain length must be nonnegative");
    if (k == 0) return 0;
    // Ω(Q,k) counts multichains D_1 ⊆ ... ⊆ D_{k-1} ⊆ D_k = Q of down-sets
    // (level sets of the map).
    DownSetTables tab(q);
    std::vector<Int> cur(tab.sets.size(), 1);
    for (long t = 2; t <= k; ++t) {
        std::vector<Int> next(tab.sets.size(), 0);
        for (std::size_t i = 0; i < tab.sets.size(); ++i) {
            for (int j : tab.subsets[i]) next[i] += cur[j];
        }
        cur = std::move(next);
    }
    return cur[tab.full];
}

Int strict_order_polynomial(const Poset& q, long k) {
    if (k < 0) fail(ErrorCode::Scale, "chain length must be nonnegative");
    if (k == 0) return 0;
    // As above, but successive level differences must be antichains.
    DownSetTables tab(q);
    std::vector<bool> anti = antichain_table(q);
    std::vector<Int> cur(tab.sets.size());
    for (std::size_t i = 0; i < tab.sets.size(); ++i) {
        cur[i] = anti[tab.sets[i]] ? 1 : 0;
    }
    for (long t = 2; t <= k; ++t) {
        std::vector<Int> next(tab.sets.size(), 0);
        for (std::size_t i = 0; i < tab.sets.size(); ++i) {
            unsigned mask = tab.sets[i];
            for (int j : tab.subsets[i]) {
                if (anti[mask ^ tab.sets[j]]) next[i] += cur[j];
            }
        }
        cur = std::move(next);
    }
    return cur[tab.full];
}

Int linear_extensions(const Poset& q) {
    DownSetTables tab(q);
    std::vector<Int> count(tab.sets.size(), 0);
    count[0] = 1;
    for (std::size_t i = 1; i < tab.sets.size(); ++i) {
        unsigned mask = tab.sets[i];
        for (unsigned rest = mask; rest != 0;) {
            unsigned low = rest & (~rest + 1);
            rest ^= low;
            int j = tab.index[mask ^ low];
            if (j >= 0) count[i] += count[j];
        }
    }
    return count[tab.full];
}

std::vector<Int> surjective_counts(const Poset& q) {
    const int d = q.size();
    std::vector<Int> es(static_cast<std::size_t>(d) + 1, 0);
    for (int k = 1; k <= d; ++k) {
        Int acc = order_polynomial(q, k);
        for (int s = 1; s < k; ++s) acc -= es[s] * binomial(k, s);
        es[k] = acc;
    }
    if (es[d] != linear_extensions(q)) {
        fail(ErrorCode::Inconsistency,
             "surjection counts disagree with the linear extension count");
    }
    return es;
}

Polynomial order_polynomial_interpolated(const Poset& q) {
    const int d = q.size();
    std::vector<Int> values;
    for (int k = 0; k <= d; ++k) values.push_back(order_polynomial(q, k));
    Polynomial poly = interpolate_at_nodes(values);
    for (int k = d + 1; k <= d + 2; ++k) {
        if (poly.eval(Int(k)) != Rational(order_polynomial(q, k))) {
            fail(ErrorCode::Inconsistency,
                 "order polynomial DP is not a degree-d polynomial");
        }
    }
    return poly;
}

OrderReciprocityReport reciprocity_checks(const Poset& q, long k_max) {
    const int d = q.size();
    if (k_max < d + 2) {
        fail(ErrorCode::Precondition,
             "k_max must be at least d+2 to pin the polynomial");
    }
    OrderReciprocityReport rep;
    Polynomial poly = order_polynomial_interpolated(q);
    Int e = linear_extensions(q);

    rep.strict_reciprocity = true;
    for (long k = 1; k <= k_max; ++k) {
        Rational lhs = Rational(strict_order_polynomial(q, k));
        Rational rhs = poly.eval(Rational(-Int(k)));
        if (d % 2 != 0) rhs = -rhs;
        if (lhs != rhs) rep.strict_reciprocity = false;
    }
    rep.leading_coeff = poly.coeffs.back() == make_rational(e, factorial(d));

    rep.graded = q.is_graded();
    if (rep.graded) {
        const int r = q.rank();
        Rational a_sub = d >= 1 ? poly.coeffs[d - 1] : Rational(0);
        rep.subleading_coeff =
            a_sub == make_rational(r * e, 2 * factorial(d - 1));
        rep.graded_symmetry = true;
        for (long k = 1; k <= k_max; ++k) {
            Rational lhs = poly.eval(Rational(-Int(r) - Int(k)));
            Rational rhs = poly.eval(Rational(Int(k)));
            if (d % 2 != 0) rhs = -rhs;
            if (lhs != rhs) rep.graded_symmetry = false;
        }
        if (d >= 2) {
            // 2 e_{d-1} = (d+r-1) e: expand Ω(k) = Σ e_s C(k,s) at the two
            // top coefficients and eliminate a_{d-1} via clause (ii); this
            // is also what Prop-5.9-style boundary volume computations use.
            std::vector<Int> es = surjective_counts(q);
            rep.surjective_identity = 2 * es[d - 1] == (d + r - 1) * e;
        }
    }
    rep.all_hold = rep.strict_reciprocity && rep.leading_coeff &&
                   rep.subleading_coeff && rep.graded_symmetry &&
                   rep.surjective_identity;
    return rep;
}

LatticePolytope order_polytope(const Poset& q) {
    const int d = q.size();
    if (d > 8) {
        fail(ErrorCode::Scale,
             "order polytope construction supports up to 8 elements");
    }
    std::vector<IntVec> vertices;
    for (unsigned dset : q.down_sets()) {
        unsigned up = ~dset & ((1u << d) - 1);  // up-sets are complements
        IntVec v(d, 0);
        for (int x = 0; x < d; ++x) {
            if (up >> x & 1u) v[x] = 1;
        }
        vertices.push_back(std::move(v));
    }
    LatticePolytope p = LatticePolytope::hull_from_vertices(d, vertices);
    if (p.vertices().size() != q.down_sets().size()) {
        fail(ErrorCode::Inconsistency,
             "order polytope vertex count differs from the up-set count");
    }
    std::size_t expected_facets = q.cover_relations().size() +
                                  q.minimal_elements().size() +
                                  q.maximal_elements().size();
    if (p.facets().size() != expected_facets) {
        fail(ErrorCode::Inconsistency,
             "order polytope facet count differs from the cover count");
    }
    return p;
}

OrderEhrhartReport order_ehrhart_checks(const Poset& q, long k_max) {
    const int d = q.size();
    if (k_max < d + 1) {
        fail(ErrorCode::Precondition, "k_max must be at least d+1");
    }
    LatticePolytope p = order_polytope(q);
    std::vector<DilationCounts> counts = count_range(p, k_max);

    OrderEhrhartReport rep;
    rep.counts_match = true;
    rep.interiors_match = true;
    for (long k = 0; k <= k_max; ++k) {
        if (counts[k].total != order_polynomial(q, k + 1)) {
            rep.counts_match = false;
        }
        if (k >= 1 && counts[k].interior != strict_order_polynomial(q, k - 1)) {
            rep.interiors_match = false;
        }
    }
    std::vector<Int> totals;
    for (const DilationCounts& c : counts) totals.push_back(c.total);
    Rational vol = volume_from_ehrhart(ehrhart_from_counts(d, totals));
    rep.volume_matches = vol == make_rational(linear_extensions(q), factorial(d));
    rep.all_hold = rep.counts_match && rep.interiors_match && rep.volume_matches;
    return rep;
}

OrderBoundaryReport order_boundary_volume_report(const Poset& q) {
    const int d = q.size();
    Int e = linear_extensions(q);
    Int e_sub = 0;  // e_{d-1}; zero when d = 1 (no surjections onto C_0)
    if (d >= 2) e_sub = surjective_counts(q)[d - 1];

    OrderBoundaryReport rep;
    rep.general = make_rational((3 - d) * e + 2 * e_sub, factorial(d - 1));
    rep.graded = q.is_graded();
    if (rep.graded) {
        rep.graded_form =
            make_rational((q.rank() + 2) * e, factorial(d - 1));
    }
    rep.direct = boundary_volume_direct(order_polytope(q));
    rep.agree = rep.general == rep.direct &&
                (!rep.graded || rep.graded_form == rep.direct);
    return rep;
}

Rational order_boundary_volume(const Poset& q) {
    return order_boundary_volume_report(q).general;
}

LatticePolytope reflexive_dilate(const Poset& q) {
    if (!q.is_graded()) {
        fail(ErrorCode::Precondition,
             "the reflexive dilate requires a graded poset");
    }
    const int d = q.size();
    const int r = q.rank();
    Polynomial poly = order_polynomial_interpolated(q);
    for (int j = 1; j <= r; ++j) {
        if (poly.eval(Rational(-j)) != 0) {
            fail(ErrorCode::Inconsistency,
                 "order polynomial does not vanish at negative arguments");
        }
    }
    Rational at_minus = poly.eval(Rational(-(r + 1)));
    if (at_minus != Rational(d % 2 == 0 ? 1 : -1)) {
        fail(ErrorCode::Inconsistency,
             "order polynomial misses the (-1)^d value at -(r+1)");
    }
    LatticePolytope p = dilate(order_polytope(q), Int(r + 2));
    std::vector<IntVec> inner = interior_points(p, 1);
    if (inner.size() != 1) {
        fail(ErrorCode::Inconsistency,
             "dilated order polytope lacks a unique interior point");
    }
    IntVec shift = inner.front();
    for (Int& c : shift) c = -c;
    LatticePolytope t = translate(p, shift);
    if (!is_reflexive(t)) {
        fail(ErrorCode::Inconsistency,
             "translated dilated order polytope is not reflexive");
    }
    return t;
}

OrderReflexiveReport order_reflexive_identities(const Poset& q) {
    if (!q.is_graded()) {
        fail(ErrorCode::Precondition,
             "the reflexive identities require a graded poset");
    }
    const int d = q.size();
    const int r = q.rank();
    Int e = linear_extensions(q);

    OrderReflexiveReport rep;
    const int n = d / 2;
    rep.rhs = 0;
    for (int m = 0; m <= n; ++m) {
        Int inner = binomial(d, n - m);
        Int outer = binomial(d, n + m + 1);
        Int coeff = inner + ((d % 2 == 1) ? outer : -outer);
        if ((n + m) % 2 != 0) coeff = -coeff;
        rep.rhs += coeff * order_polynomial(q, long(m) * (r + 2) + 1);
    }
    Int pw = 1;
    for (int i = 0; i < d; ++i) pw *= r + 2;
    rep.lhs = pw * e;
    rep.volume_identity = rep.lhs == rep.rhs;

    if (d % 2 == 1) {
        rep.has_odd_identity = true;
        const int big_n = (d + 1) / 2;
        rep.odd_value = 0;
        for (int m = 0; m <= big_n; ++m) {
            Int coeff = binomial(d + 2, big_n - m);
            if ((big_n + m) % 2 != 0) coeff = -coeff;
            rep.odd_value += coeff * order_polynomial(q, long(m) * (r + 2) + 1);
        }
        rep.odd_identity = rep.odd_value == 0;
    }
    rep.all_hold = rep.volume_identity && rep.odd_identity;
    return rep;
}

std::vector<Poset> all_posets_up_to(int max_size) {
    if (max_size < 1 || max_size > 5) {
        fail(ErrorCode::Scale, "poset enumeration supports sizes 1 to 5");
    }
    std::vector<Poset> out;
    for (int d = 1; d <= max_size; ++d) {
        std::vector<std::pair<int, int>> pairs;
        for (int a = 0; a < d; ++a) {
            for (int b = 0; b < d; ++b) {
                if (a != b) pairs.emplace_back(a, b);
            }
        }
        const int np = static_cast<int>(pairs.size());
        for (unsigned long rel = 0; rel < (1ul << np); ++rel) {
            std::vector<std::vector<bool>> lt(d, std::vector<bool>(d, false));
            for (int i = 0; i < np; ++i) {
                if (rel >> i & 1ul) lt[pairs[i].first][pairs[i].second] = true;
            }
            bool ok = true;
            for (int a = 0; a < d && ok; ++a) {
                for (int b = 0; b < d && ok; ++b) {
                    if (lt[a][b] && lt[b][a]) ok = false;
                    for (int c = 0; c < d && ok; ++c) {
                        if (lt[a][b] && lt[b][c] && !lt[a][c]) ok = false;
                    }
                }
            }
            if (!ok) continue;
            // Canonical form: minimum relation bitstring over relabelings.
            std::vector<int> p(d);
            std::iota(p.begin(), p.end(), 0);
            unsigned long canon = ~0ul;
            do {
                unsigned long enc = 0;
                for (int i = 0; i < np; ++i) {
                    if (lt[p[pairs[i].first]][p[pairs[i].second]]) {
                        enc |= 1ul << i;
                    }
                }
                canon = std::min(canon, enc);
            } while (std::next_permutation(p.begin(), p.end()));
            if (canon != rel) continue;  // keep only the class representative
            std::vector<std::pair<int, int>> rel_list;
            for (int i = 0; i < np; ++i) {
                if (rel >> i & 1ul) rel_list.push_back(pairs[i]);
            }
            out.emplace_back(d, rel_list);
        }
    }
    return out;
}

} // namespace latpoly
