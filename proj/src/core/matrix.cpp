#include "core/matrix.hpp"

#include <utility>

namespace latpoly {

IntMatrix IntMatrix::identity(int n)
{
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVec>& rows_in)
{
    const int r = static_cast<int>(rows_in.size());
    const int c = r == 0 ? 0 : static_cast<int>(rows_in[0].size());
    IntMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows_in[i].size()) != c)
            fail(ErrorCode::Arity, "ragged rows in matrix construction");
        for (int j = 0; j < c; ++j)
            m.at(i, j) = rows_in[i][j];
    }
    return m;
}

std::vector<IntVec> IntMatrix::to_rows() const
{
    std::vector<IntVec> out(rows);
    for (int i = 0; i < rows; ++i)
        out[i] = IntVec(data.begin() + static_cast<size_t>(i) * cols,
                        data.begin() + static_cast<size_t>(i + 1) * cols);
    return out;
}

IntMatrix IntMatrix::transposed() const
{
    IntMatrix t(cols, rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            t.at(j, i) = at(i, j);
    return t;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<RatVec>& rows_in)
{
    const int r = static_cast<int>(rows_in.size());
    const int c = r == 0 ? 0 : static_cast<int>(rows_in[0].size());
    RationalMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows_in[i].size()) != c)
            fail(ErrorCode::Arity, "ragged rows in matrix construction");
        for (int j = 0; j < c; ++j)
            m.at(i, j) = rows_in[i][j];
    }
    return m;
}

Int det(const IntMatrix& m)
{
    if (m.rows != m.cols)
        fail(ErrorCode::Dimension, "determinant of non-square matrix");
    const int n = m.rows;
    if (n == 0)
        return 1;

    IntMatrix w = m;
    int sign = 1;
    Int prev = 1;  // previous pivot; divisions by it are exact (Bareiss)
    for (int k = 0; k + 1 < n; ++k) {
        int piv = -1;
        for (int r = k; r < n; ++r) {
            if (w.at(r, k) != 0) {
                piv = r;
                break;
            }
        }
        if (piv < 0)
            return 0;
        if (piv != k) {
            for (int j = k; j < n; ++j)
                std::swap(w.at(piv, j), w.at(k, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Int t = w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j);
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                w.at(i, j) = std::move(t);
            }
        }
        prev = w.at(k, k);
    }
    return sign > 0 ? w.at(n - 1, n - 1) : Int(-w.at(n - 1, n - 1));
}

Rational det(const RationalMatrix& m)
{
    if (m.rows != m.cols)
        fail(ErrorCode::Dimension, "determinant of non-square matrix");
    const int n = m.rows;
    if (n == 0)
        return 1;

    // Clear each row's denominators, divide the scales back out at the end.
    IntMatrix w(n, n);
    Int scale = 1;
    for (int i = 0; i < n; ++i) {
        Int l = 1;
        for (int j = 0; j < n; ++j)
            l = lcm(l, m.at(i, j).get_den());
        for (int j = 0; j < n; ++j)
            w.at(i, j) = to_integer(m.at(i, j) * Rational(l));
        scale *= l;
    }
    return make_rational(det(w), scale);
}

namespace {

void row_axpy(IntMatrix& m, int target, int source, const Int& q)
{
    // row[target] -= q * row[source]
    for (int j = 0; j < m.cols; ++j)
        m.at(target, j) -= q * m.at(source, j);
}

void row_swap(IntMatrix& m, int a, int b)
{
    for (int j = 0; j < m.cols; ++j)
        std::swap(m.at(a, j), m.at(b, j));
}

void row_negate(IntMatrix& m, int r)
{
    for (int j = 0; j < m.cols; ++j)
        m.at(r, j) = -m.at(r, j);
}

} // namespace

HnfResult hermite_normal_form(const IntMatrix& m)
{
    IntMatrix h = m;
    IntMatrix u = IntMatrix::identity(m.rows);
    int row = 0;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        // Euclidean descent in this column: repeatedly move the entry of
        // minimal absolute value into position and reduce the others by it.
        // Floor division keeps every remainder strictly smaller in absolute
        // value than the pivot, so this terminates with the column gcd.
        while (true) {
            int best = -1;
            for (int r = row; r < h.rows; ++r) {
                if (h.at(r, col) != 0 &&
                    (best < 0 ||
                     mpz_cmpabs(h.at(r, col).get_mpz_t(),
                                h.at(best, col).get_mpz_t()) < 0))
                    best = r;
            }
            if (best < 0)
                break;
            if (best != row) {
                row_swap(h, best, row);
                row_swap(u, best, row);
            }
            bool clean = true;
            for (int r = row + 1; r < h.rows; ++r) {
                if (h.at(r, col) == 0)
                    continue;
                Int q = floor_div(h.at(r, col), h.at(row, col));
                if (q != 0) {
                    row_axpy(h, r, row, q);
                    row_axpy(u, r, row, q);
                }
                if (h.at(r, col) != 0)
                    clean = false;
            }
            if (clean)
                break;
        }
        if (h.at(row, col) == 0)
            continue;  // no pivot in this column
        if (h.at(row, col) < 0) {
            row_negate(h, row);
            row_negate(u, row);
        }
        for (int r = 0; r < row; ++r) {
            Int q = floor_div(h.at(r, col), h.at(row, col));
            if (q != 0) {
                row_axpy(h, r, row, q);
                row_axpy(u, r, row, q);
            }
        }
        ++row;
    }
    return {std::move(h), std::move(u)};
}

namespace {

bool is_zero_row(const IntMatrix& m, int r)
{
    for (int j = 0; j < m.cols; ++j)
        if (m.at(r, j) != 0)
            return false;
    return true;
}

} // namespace

int rank(const IntMatrix& m)
{
    HnfResult res = hermite_normal_form(m);
    int rk = 0;
    for (int r = 0; r < res.h.rows; ++r)
        if (!is_zero_row(res.h, r))
            ++rk;
    return rk;
}

std::vector<IntVec> kernel_basis(const IntMatrix& m)
{
    // {x : m x = 0} is the left kernel of m^T; rows of u paired with zero
    // rows of h = u * m^T span it, and that lattice is saturated because u
    // is unimodular.  Canonicalize the basis through a second HNF.
    HnfResult res = hermite_normal_form(m.transposed());
    std::vector<IntVec> raw;
    std::vector<IntVec> urows = res.u.to_rows();
    for (int r = 0; r < res.h.rows; ++r)
        if (is_zero_row(res.h, r))
            raw.push_back(urows[r]);
    if (raw.empty())
        return {};
    HnfResult canon = hermite_normal_form(IntMatrix::from_rows(raw));
    std::vector<IntVec> out;
    for (int r = 0; r < canon.h.rows; ++r)
        if (!is_zero_row(canon.h, r))
            out.push_back(canon.h.to_rows()[r]);
    return out;
}

std::vector<IntVec> saturation_basis(int dim, const std::vector<IntVec>& vectors)
{
    if (dim < 0)
        fail(ErrorCode::Dimension, "negative ambient dimension");
    if (vectors.empty())
        return {};
    for (const IntVec& v : vectors)
        if (static_cast<int>(v.size()) != dim)
            fail(ErrorCode::Arity, "saturation input vector of wrong length");

    // span_Q(V) ∩ Z^dim is the double orthogonal complement: both kernel
    // computations below produce saturated lattices, and the second one
    // recovers exactly the rational span intersected with Z^dim.
    std::vector<IntVec> ortho = kernel_basis(IntMatrix::from_rows(vectors));
    if (ortho.empty()) {
        // Full rational span: the saturation is all of Z^dim.
        return IntMatrix::identity(dim).to_rows();
    }
    return kernel_basis(IntMatrix::from_rows(ortho));
}

RatVec solve_linear(const RationalMatrix& a, const RatVec& b)
{
    if (a.rows != a.cols)
        fail(ErrorCode::Dimension, "solve requires a square system");
    if (static_cast<int>(b.size()) != a.rows)
        fail(ErrorCode::Dimension, "right-hand side length mismatch");
    const int n = a.rows;

    RationalMatrix w = a;
    RatVec rhs = b;
    for (int k = 0; k < n; ++k) {
        int piv = -1;
        for (int r = k; r < n; ++r) {
            if (w.at(r, k) != 0) {
                piv = r;
                break;
            }
        }
        if (piv < 0)
            fail(ErrorCode::Singular, "singular system in solve_linear");
        if (piv != k) {
            for (int j = k; j < n; ++j)
                std::swap(w.at(piv, j), w.at(k, j));
            std::swap(rhs[piv], rhs[k]);
        }
        for (int r = k + 1; r < n; ++r) {
            if (w.at(r, k) == 0)
                continue;
            Rational f = w.at(r, k) / w.at(k, k);
            for (int j = k; j < n; ++j)
                w.at(r, j) -= f * w.at(k, j);
            rhs[r] -= f * rhs[k];
        }
    }
    RatVec x(n);
    for (int k = n - 1; k >= 0; --k) {
        Rational s = rhs[k];
        for (int j = k + 1; j < n; ++j)
            s -= w.at(k, j) * x[j];
        x[k] = s / w.at(k, k);
    }
    return x;
}

} // namespace latpoly
