#include "core/birkhoff.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include "core/counting.hpp"
#include "core/error.hpp"
#include "core/reflexive.hpp"

namespace latpoly {

namespace {

/// Column-by-column magic-square counter.  The state after placing a
/// column is the vector of residual row sums; counts only depend on it up
/// to permutation, so states are memoised in sorted form.
class MagicDP {
public:
    MagicDP(int d, long s, long lo) : d_(d), s_(s), lo_(lo) {}

    Int run() { return rec(d_, std::vector<long>(d_, s_)); }

private:
    Int rec(int cols_left, std::vector<long> residual) {
        std::sort(residual.begin(), residual.end());
        if (cols_left == 0) {
            return residual.back() == 0 ? 1 : 0;
        }
        std::vector<long> key = residual;
        key.push_back(cols_left);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;

        std::vector<long> tail(d_ + 1, 0);
        for (int i = d_ - 1; i >= 0; --i) tail[i] = tail[i + 1] + residual[i];
        Int total = 0;
        std::vector<long> col(d_, 0);
        gen(0, s_, residual, tail, col, cols_left, total);
        memo_.emplace(std::move(key), total);
        return total;
    }

    /// Enumerate column entries col[i..] with lo_ <= col[j] <= residual[j]
    /// summing to rem, recursing into the next column at the leaves.
    void gen(int i, long rem, const std::vector<long>& residual,
             const std::vector<long>& tail, std::vector<long>& col,
             int cols_left, Int& total) {
        if (i == d_) {
            std::vector<long> next(d_);
            for (int j = 0; j < d_; ++j) next[j] = residual[j] - col[j];
            total += rec(cols_left - 1, std::move(next));
            return;
        }
        long hi = std::min(residual[i], rem - lo_ * (d_ - i - 1));
        for (long c = lo_; c <= hi; ++c) {
            if (rem - c > tail[i + 1]) continue;
            col[i] = c;
            gen(i + 1, rem - c, residual, tail, col, cols_left, total);
        }
    }

    int d_;
    long s_;
    long lo_;
    std::map<std::vector<long>, Int> memo_;
};

void require_magic_args(int d, long s) {
    if (d < 1) fail(ErrorCode::Dimension, "matrix order must be positive");
    if (s < 0) fail(ErrorCode::Scale, "line sum must be nonnegative");
}

void require_chart_order(int d) {
    if (d < 2 || d > 4) {
        fail(ErrorCode::Scale, "chart computations support d = 2..4");
    }
}

void require_small_order(int d) {
    if (d < 2 || d > 3) {
        fail(ErrorCode::Scale, "polytope scans support d = 2..3");
    }
}

/// The alternating binomial sum D! d^D vol(B(d)), kept as an integer.
Int chart_volume_numerator(int d) {
    const int big_d = (d - 1) * (d - 1);
    const int n = big_d / 2;
    Int sum = 0;
    for (int m = 0; m <= n; ++m) {
        Int coeff = binomial(big_d, n - m);
        Int outer = binomial(big_d, n + m + 1);
        coeff += (d % 2 == 0) ? outer : -outer;
        if ((n + m) % 2 != 0) coeff = -coeff;
        sum += coeff * magic_count(d, long(m) * d);
    }
    return sum;
}

} // namespace

Int magic_count(int d, long s) {
    require_magic_args(d, s);
    return MagicDP(d, s, 0).run();
}

Int positive_magic_count(int d, long s) {
    require_magic_args(d, s);
    return MagicDP(d, s, 1).run();
}

LatticePolytope birkhoff_polytope(int d) {
    require_chart_order(d);
    const int big_d = (d - 1) * (d - 1);
    std::vector<int> perm(d);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<IntVec> charts;
    do {
        IntVec v(big_d, 0);
        for (int i = 0; i < d - 1; ++i) {
            if (perm[i] < d - 1) v[i * (d - 1) + perm[i]] = 1;
        }
        charts.push_back(std::move(v));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return LatticePolytope::hull_from_vertices(big_d, charts);
}

Polynomial birkhoff_ehrhart(int d) {
    require_chart_order(d);
    const int big_d = (d - 1) * (d - 1);
    std::vector<Int> values;
    for (int s = 0; s <= big_d; ++s) values.push_back(magic_count(d, s));
    Polynomial poly = interpolate_at_nodes(values);
    for (int s = big_d + 1; s <= big_d + 2; ++s) {
        if (poly.eval(Int(s)) != Rational(magic_count(d, s))) {
            fail(ErrorCode::Inconsistency,
                 "magic-square counts are not a degree-(d-1)^2 polynomial");
        }
    }
    return poly;
}

BirkhoffReciprocityReport birkhoff_reciprocity_check(int d) {
    require_small_order(d);
    const int big_d = (d - 1) * (d - 1);
    Polynomial poly = birkhoff_ehrhart(d);
    LatticePolytope chart = birkhoff_polytope(d);
    std::vector<DilationCounts> counts = count_range(chart, big_d + 2);

    BirkhoffReciprocityReport rep;
    rep.counts_match = true;
    rep.interiors_match = true;
    for (int s = 0; s <= big_d + 2; ++s) {
        Int h = magic_count(d, s);
        if (counts[s].total != h || poly.eval(Int(s)) != Rational(h)) {
            rep.counts_match = false;
        }
        if (counts[s].interior != positive_magic_count(d, s)) {
            rep.interiors_match = false;
        }
    }
    rep.one_positive_square = positive_magic_count(d, d) == 1;
    for (int s = 0; s < d; ++s) {
        if (positive_magic_count(d, s) != 0) rep.one_positive_square = false;
    }
    rep.reciprocity = true;
    for (int t = 0; t <= 3; ++t) {
        Rational lhs = poly.eval(Rational(-d - t));
        Rational rhs = poly.eval(Rational(t));
        if (big_d % 2 != 0) rhs = -rhs;
        if (lhs != rhs) rep.reciprocity = false;
    }
    rep.all_hold = rep.counts_match && rep.interiors_match &&
                   rep.one_positive_square && rep.reciprocity;
    return rep;
}

BirkhoffReflexiveReport birkhoff_reflexive_checks(int d) {
    require_small_order(d);
    const int big_d = (d - 1) * (d - 1);
    LatticePolytope dilated = dilate(birkhoff_polytope(d), Int(d));
    std::vector<IntVec> inner = interior_points(dilated, 1);

    BirkhoffReflexiveReport rep;
    rep.unique_interior =
        inner.size() == 1 && inner.front() == IntVec(big_d, 1);
    if (rep.unique_interior) {
        rep.dilate_reflexive =
            is_reflexive(translate(dilated, IntVec(big_d, -1)));
    }
    Polynomial poly = birkhoff_ehrhart(d);
    rep.functional_equation = true;
    for (int m = 0; m <= 3; ++m) {
        // L_{dB}(m) = H_d(dm) and L_{dB}(-m-1) = L_chart(-d(m+1)).
        Rational lhs = poly.eval(Rational(d * m));
        Rational rhs = poly.eval(Rational(-d * (m + 1)));
        if (big_d % 2 != 0) rhs = -rhs;
        if (lhs != rhs) rep.functional_equation = false;
    }
    rep.all_hold = rep.unique_interior && rep.dilate_reflexive &&
                   rep.functional_equation;
    return rep;
}

Rational birkhoff_volume(int d) {
    require_chart_order(d);
    const int big_d = (d - 1) * (d - 1);
    Int denom = factorial(big_d);
    for (int i = 0; i < big_d; ++i) denom *= d;
    return make_rational(chart_volume_numerator(d), denom);
}

BirkhoffVolumeReport birkhoff_volume_report(int d) {
    BirkhoffVolumeReport rep;
    rep.formula = birkhoff_volume(d);
    rep.oracle = birkhoff_ehrhart(d).coeffs.back();
    rep.agree = rep.formula == rep.oracle;
    return rep;
}

Int birkhoff_even_identity(int d) {
    if (d % 2 != 0) {
        fail(ErrorCode::Parity, "the vanishing identity needs even d");
    }
    if (d < 2 || d > 4) {
        fail(ErrorCode::Scale, "the vanishing identity supports d = 2 and 4");
    }
    const int big_d = (d - 1) * (d - 1);
    const int big_n = (big_d + 1) / 2;
    Int sum = 0;
    for (int m = 0; m <= big_n; ++m) {
        Int coeff = binomial(big_d + 2, big_n - m);
        if ((big_n + m) % 2 != 0) coeff = -coeff;
        sum += coeff * magic_count(d, long(d) * m);
    }
    return sum;
}

BirkhoffBoundReport birkhoff_lower_bound_check(int d) {
    require_chart_order(d);
    const int big_d = (d - 1) * (d - 1);
    BirkhoffBoundReport rep;
    rep.lhs = chart_volume_numerator(d);
    rep.rhs = (big_d - 1) * magic_count(d, d) - big_d * big_d + 3;
    rep.holds = rep.lhs >= rep.rhs;
    rep.equality = rep.lhs == rep.rhs;
    return rep;
}

} // namespace latpoly
