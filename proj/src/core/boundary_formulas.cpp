#include "core/boundary_formulas.hpp"

#include "core/error.hpp"
#include "core/matrix.hpp"

namespace latpoly {

namespace {

Int pow_int(long base, long exp) {
    Int acc = 1;
    for (long i = 0; i < exp; ++i) acc *= base;
    return acc;
}

void require_counts(const std::vector<Int>& counts, int upto,
                    const char* what) {
    if (static_cast<int>(counts.size()) <= upto) {
        fail(ErrorCode::Arity, std::string("need ") + what +
                                   " counts for m = 0.." + std::to_string(upto));
    }
}

std::pair<std::vector<Int>, std::vector<Int>> scan_counts(
    const LatticePolytope& p, long m_max) {
    std::vector<DilationCounts> counts = count_range(p, m_max);
    std::vector<Int> totals, boundary;
    for (const DilationCounts& c : counts) {
        totals.push_back(c.total);
        boundary.push_back(c.boundary);
    }
    return {totals, boundary};
}

} // namespace

std::vector<Int> table1_coefficients(int d) {
    if (d < 2 || d > 12) {
        fail(ErrorCode::Dimension,
             "boundary-volume coefficients are tabulated for 2 <= d <= 12");
    }
    const int n = d / 2;
    std::vector<Int> alpha(static_cast<std::size_t>(n) + 1);
    for (int m = 0; m <= n; ++m) {
        Int inner = binomial(d - 1, n - m);
        Int outer = binomial(d - 1, n + m);
        Int val = inner + ((d % 2 == 1) ? outer : -outer);
        if ((n + m) % 2 != 0) val = -val;
        alpha[m] = val;
    }
    return alpha;
}

Rational boundary_volume_explicit(int d, const std::vector<Int>& boundary) {
    const int n = d / 2;
    require_counts(boundary, n, "boundary");
    std::vector<Int> alpha = table1_coefficients(d);
    Int acc = 0;
    for (int m = 0; m <= n; ++m) acc += alpha[m] * boundary[m];
    return make_rational(acc, factorial(d - 1));
}

Rational boundary_volume_explicit(const LatticePolytope& p) {
    auto [totals, boundary] = scan_counts(p, p.dim() / 2);
    (void)totals;
    return boundary_volume_explicit(p.dim(), boundary);
}

Rational boundary_volume_matrix(int d, const std::vector<Int>& boundary) {
    if (d < 2 || d > 12) {
        fail(ErrorCode::Dimension,
             "matrix boundary-volume form is supported for 2 <= d <= 12");
    }
    const int n = d / 2;
    require_counts(boundary, n, "boundary");
    IntMatrix a(n, n), dd(n, n);
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            Int power = pow_int(i, d - 2 * j + 1);
            a.at(i - 1, j - 1) =
                (j == 1) ? boundary[i] - 2 * (d - 2 * n) : power;
            dd.at(i - 1, j - 1) = power;
        }
    }
    Int denom = det(dd);
    if (denom == 0) fail(ErrorCode::Singular, "denominator determinant is 0");
    return make_rational(det(a), denom);
}

Rational boundary_volume_matrix(const LatticePolytope& p) {
    auto [totals, boundary] = scan_counts(p, p.dim() / 2);
    (void)totals;
    return boundary_volume_matrix(p.dim(), boundary);
}

Rational volume_general(int d, const std::vector<Int>& totals,
                        const std::vector<Int>& boundary) {
    if (d < 1) fail(ErrorCode::Dimension, "dimension must be positive");
    const int big_n = (d + 1) / 2;
    require_counts(totals, big_n, "total");
    require_counts(boundary, big_n, "boundary");
    Rational acc = 0;
    for (int m = 0; m <= big_n; ++m) {
        Int inner = binomial(d, big_n - m);
        Int outer = binomial(d, big_n + m);
        Int coeff = inner + ((d % 2 == 0) ? outer : -outer);
        if ((big_n + m) % 2 != 0) coeff = -coeff;
        acc += Rational(coeff) *
               (Rational(totals[m]) - make_rational(boundary[m], 2));
    }
    return acc / Rational(factorial(d));
}

Rational volume_general(const LatticePolytope& p) {
    const int d = p.dim();
    auto [totals, boundary] = scan_counts(p, (d + 1) / 2);
    return volume_general(d, totals, boundary);
}

Rational volume_macdonald_even(int d, const std::vector<Int>& interiors,
                               const std::vector<Int>& boundary) {
    if (d < 2 || d % 2 != 0) {
        fail(ErrorCode::Parity, "Macdonald's formula requires even dimension");
    }
    const int half = d / 2;
    require_counts(interiors, half, "interior");
    require_counts(boundary, half, "boundary");
    Int acc = 0;
    for (int m = 1; m <= half; ++m) {
        Int term = binomial(d, half - m) * (2 * interiors[m] + boundary[m]);
        if ((half - m) % 2 != 0) term = -term;
        acc += term;
    }
    Int tail = binomial(d, half);
    acc += (half % 2 != 0) ? -tail : tail;
    return make_rational(acc, factorial(d));
}

Rational volume_macdonald_even(const LatticePolytope& p) {
    const int d = p.dim();
    std::vector<DilationCounts> counts = count_range(p, d / 2);
    std::vector<Int> interiors, boundary;
    for (const DilationCounts& c : counts) {
        interiors.push_back(c.interior);
        boundary.push_back(c.boundary);
    }
    return volume_macdonald_even(d, interiors, boundary);
}

Rational volume_kolodziejczyk_odd(int d, const std::vector<Int>& interiors,
                                  const std::vector<Int>& boundary) {
    if (d < 1 || d % 2 != 1) {
        fail(ErrorCode::Parity,
             "the odd-dimensional formula requires odd dimension");
    }
    const int half = (d + 1) / 2;
    require_counts(interiors, half, "interior");
    require_counts(boundary, half, "boundary");
    Int acc = 0;
    for (int m = 1; m <= half; ++m) {
        Int term =
            binomial(d + 1, half - m) * m * (2 * interiors[m] + boundary[m]);
        if ((half - m) % 2 != 0) term = -term;
        acc += term;
    }
    return make_rational(acc, factorial(d + 1));
}

Rational volume_kolodziejczyk_odd(const LatticePolytope& p) {
    const int d = p.dim();
    std::vector<DilationCounts> counts = count_range(p, (d + 1) / 2);
    std::vector<Int> interiors, boundary;
    for (const DilationCounts& c : counts) {
        interiors.push_back(c.interior);
        boundary.push_back(c.boundary);
    }
    return volume_kolodziejczyk_odd(d, interiors, boundary);
}

} // namespace latpoly
