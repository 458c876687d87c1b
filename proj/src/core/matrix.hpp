#pragma once
/// @file matrix.hpp
/// Dense exact matrices and the integer linear-algebra kernel: fraction-free
/// (Bareiss) determinants, row Hermite normal form with its unimodular
/// transform, integer kernels, lattice saturation, and rational solves.

#include <vector>

#include "core/rational.hpp"

namespace latpoly {

struct IntMatrix {
    int rows = 0, cols = 0;
    std::vector<Int> data;  // row-major

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), data(static_cast<size_t>(r) * c) {}

    Int& at(int r, int c) { return data[static_cast<size_t>(r) * cols + c]; }
    const Int& at(int r, int c) const { return data[static_cast<size_t>(r) * cols + c]; }

    static IntMatrix identity(int n);
    static IntMatrix from_rows(const std::vector<IntVec>& rows_in);
    std::vector<IntVec> to_rows() const;
    IntMatrix transposed() const;

    bool operator==(const IntMatrix&) const = default;
};

struct RationalMatrix {
    int rows = 0, cols = 0;
    std::vector<Rational> data;  // row-major

    RationalMatrix() = default;
    RationalMatrix(int r, int c) : rows(r), cols(c), data(static_cast<size_t>(r) * c) {}

    Rational& at(int r, int c) { return data[static_cast<size_t>(r) * cols + c]; }
    const Rational& at(int r, int c) const { return data[static_cast<size_t>(r) * cols + c]; }

    static RationalMatrix from_rows(const std::vector<RatVec>& rows_in);

    bool operator==(const RationalMatrix&) const = default;
};

/// Determinant of a square integer matrix, computed fraction-free so every
/// intermediate value stays integral.  det of the empty 0x0 matrix is 1.
Int det(const IntMatrix& m);

/// Determinant of a square rational matrix: rows are scaled to integer rows,
/// the integer determinant divided back out.  Exact.
Rational det(const RationalMatrix& m);

/// Row Hermite normal form h of m together with a unimodular u (|det u| = 1)
/// such that h = u * m.  Convention: row-echelon shape with zero rows last,
/// pivots positive, and every entry above a pivot reduced into [0, pivot).
struct HnfResult {
    IntMatrix h;
    IntMatrix u;
};
HnfResult hermite_normal_form(const IntMatrix& m);

int rank(const IntMatrix& m);

/// Basis (possibly empty) of the integer kernel {x in Z^cols : m x = 0}.
/// The kernel of an integer matrix is automatically a saturated sublattice;
/// the returned basis is canonicalized via HNF.
std::vector<IntVec> kernel_basis(const IntMatrix& m);

/// Basis of span_Q(vectors) ∩ Z^dim, the saturation of the lattice generated
/// by the inputs.  Empty input yields an empty basis.
std::vector<IntVec> saturation_basis(int dim, const std::vector<IntVec>& vectors);

/// Unique solution of the square nonsingular system a x = b via Gaussian
/// elimination over the rationals.  Throws ErrorCode::Singular if a is
/// singular, ErrorCode::Dimension on shape mismatch.
RatVec solve_linear(const RationalMatrix& a, const RatVec& b);

} // namespace latpoly
