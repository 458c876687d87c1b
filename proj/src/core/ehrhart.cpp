#include "core/ehrhart.hpp"

#include "core/error.hpp"
#include "core/matrix.hpp"

namespace latpoly {

Rational Polynomial::eval(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

Polynomial interpolate_at_nodes(const std::vector<Int>& values) {
    if (values.empty()) fail(ErrorCode::Arity, "no interpolation nodes given");
    const int n = static_cast<int>(values.size());
    RationalMatrix vand(n, n);
    RatVec rhs(n);
    for (int i = 0; i < n; ++i) {
        Rational pow = 1;
        for (int j = 0; j < n; ++j) {
            vand.at(i, j) = pow;
            pow *= i;
        }
        rhs[i] = Rational(values[i]);
    }
    return Polynomial{solve_linear(vand, rhs)};
}

Polynomial ehrhart_from_counts(int d, const std::vector<Int>& totals) {
    if (d < 1) fail(ErrorCode::Dimension, "dimension must be positive");
    if (static_cast<int>(totals.size()) < d + 1) {
        fail(ErrorCode::Arity, "need counts for m = 0..d to interpolate");
    }
    if (totals[0] != 1) {
        fail(ErrorCode::Inconsistency, "count at m = 0 must be 1");
    }
    std::vector<Int> nodes(totals.begin(), totals.begin() + d + 1);
    Polynomial ehr = interpolate_at_nodes(nodes);
    for (std::size_t m = static_cast<std::size_t>(d) + 1; m < totals.size();
         ++m) {
        if (ehr.eval(Int(m)) != Rational(totals[m])) {
            fail(ErrorCode::Inconsistency,
                 "counts do not extend the interpolated Ehrhart polynomial");
        }
    }
    return ehr;
}

Polynomial ehrhart_polynomial(const LatticePolytope& p, long m_max) {
    if (m_max < 0) m_max = p.dim() + 1;
    std::vector<DilationCounts> counts = count_range(p, m_max);
    std::vector<Int> totals;
    totals.reserve(counts.size());
    for (const DilationCounts& c : counts) totals.push_back(c.total);
    return ehrhart_from_counts(p.dim(), totals);
}

Rational volume_from_ehrhart(const Polynomial& ehr) {
    if (ehr.coeffs.empty()) fail(ErrorCode::Arity, "empty polynomial");
    return ehr.coeffs.back();
}

Rational boundary_volume_from_ehrhart(const Polynomial& ehr) {
    if (ehr.coeffs.size() < 2) {
        fail(ErrorCode::Dimension, "polynomial has no subleading coefficient");
    }
    return 2 * ehr.coeffs[ehr.coeffs.size() - 2];
}

std::vector<Int> delta_vector(int d, const std::vector<Int>& totals) {
    if (d < 1) fail(ErrorCode::Dimension, "dimension must be positive");
    if (static_cast<int>(totals.size()) < d + 1) {
        fail(ErrorCode::Arity, "need counts for m = 0..d");
    }
    if (totals[0] != 1) {
        fail(ErrorCode::Inconsistency, "count at m = 0 must be 1");
    }
    std::vector<Int> delta(static_cast<std::size_t>(d) + 1, 0);
    for (int i = 0; i <= d; ++i) {
        Int acc = 0;
        for (int j = 0; j <= i; ++j) {
            Int term = binomial(d + 1, j) * totals[i - j];
            if (j % 2 == 0) {
                acc += term;
            } else {
                acc -= term;
            }
        }
        if (acc < 0) {
            fail(ErrorCode::Inconsistency,
                 "delta-vector entry is negative; counts are not Ehrhart");
        }
        delta[i] = acc;
    }
    return delta;
}

std::vector<Int> delta_vector(const LatticePolytope& p) {
    std::vector<DilationCounts> counts = count_range(p, p.dim());
    std::vector<Int> totals;
    totals.reserve(counts.size());
    for (const DilationCounts& c : counts) totals.push_back(c.total);
    return delta_vector(p.dim(), totals);
}

ReeveReport reeve_check(const LatticePolytope& p, long m_max) {
    if (p.dim() != 3) {
        fail(ErrorCode::Dimension, "the Reeve identities require dimension 3");
    }
    if (m_max < 1) fail(ErrorCode::Scale, "m_max must be at least 1");
    std::vector<DilationCounts> counts = count_range(p, std::max(m_max, 3L));
    std::vector<Int> totals;
    for (const DilationCounts& c : counts) totals.push_back(c.total);
    Rational vol = volume_from_ehrhart(ehrhart_from_counts(3, totals));

    ReeveReport rep;
    rep.all_agree = true;
    const Int& l1 = counts[1].total;
    const Int& b1 = counts[1].boundary;
    for (long m = 1; m <= m_max; ++m) {
        const Int& lm = counts[m].total;
        const Int& bm = counts[m].boundary;
        Rational lhs = Rational(2 * Int(m - 1) * Int(m) * Int(m + 1)) * vol;
        Rational rhs = Rational(2 * (lm - m * l1) - (bm - m * b1));
        Int blhs = bm;
        Int brhs = 2 * (1 - Int(m) * Int(m)) + Int(m) * Int(m) * b1;
        rep.m_values.push_back(m);
        rep.volume_lhs.push_back(lhs);
        rep.volume_rhs.push_back(rhs);
        rep.boundary_lhs.push_back(blhs);
        rep.boundary_rhs.push_back(brhs);
        if (lhs != rhs || blhs != brhs) rep.all_agree = false;
    }
    return rep;
}

} // namespace latpoly
