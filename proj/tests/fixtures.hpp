#pragma once
/// Shared geometry fixtures and deterministic random generators.

#include <random>
#include <vector>

#include "core/matrix.hpp"
#include "core/polytope.hpp"

namespace fixtures {

using namespace latpoly;

inline IntVec unit(int d, int i, int sign = 1) {
    IntVec v(d, 0);
    v[i] = sign;
    return v;
}

/// [0,1]^d.
inline LatticePolytope cube01(int d) {
    std::vector<IntVec> pts;
    for (unsigned m = 0; m < (1u << d); ++m) {
        IntVec v(d);
        for (int i = 0; i < d; ++i) v[i] = (m >> i) & 1u;
        pts.push_back(std::move(v));
    }
    return LatticePolytope::hull_from_vertices(d, pts);
}

/// [-1,1]^d.
inline LatticePolytope cube_pm(int d) {
    std::vector<IntVec> pts;
    for (unsigned m = 0; m < (1u << d); ++m) {
        IntVec v(d);
        for (int i = 0; i < d; ++i) v[i] = ((m >> i) & 1u) ? 1 : -1;
        pts.push_back(std::move(v));
    }
    return LatticePolytope::hull_from_vertices(d, pts);
}

/// conv{±e_1, ..., ±e_d}.
inline LatticePolytope cross(int d) {
    std::vector<IntVec> pts;
    for (int i = 0; i < d; ++i) {
        pts.push_back(unit(d, i, 1));
        pts.push_back(unit(d, i, -1));
    }
    return LatticePolytope::hull_from_vertices(d, pts);
}

/// conv{0, e_1, ..., e_d}.
inline LatticePolytope simplex_std(int d) {
    std::vector<IntVec> pts{IntVec(d, 0)};
    for (int i = 0; i < d; ++i) pts.push_back(unit(d, i));
    return LatticePolytope::hull_from_vertices(d, pts);
}

/// conv{e_1, ..., e_d, -(e_1 + ... + e_d)}: the reflexive simplex of
/// normalized volume d+1.
inline LatticePolytope simplex_pm(int d) {
    std::vector<IntVec> pts;
    for (int i = 0; i < d; ++i) pts.push_back(unit(d, i));
    pts.push_back(IntVec(d, -1));
    return LatticePolytope::hull_from_vertices(d, pts);
}

/// Reeve's simplex conv{0, e_1, e_2, (1, 1, t)}, t >= 1: normalized
/// volume t with no interior or non-vertex boundary points.
inline LatticePolytope reeve(long t) {
    std::vector<IntVec> pts{IntVec{0, 0, 0}, IntVec{1, 0, 0}, IntVec{0, 1, 0},
                            IntVec{1, 1, Int(t)}};
    return LatticePolytope::hull_from_vertices(3, pts);
}

/// Fano but not reflexive, dimension 3.
inline LatticePolytope fano_nonreflexive3() {
    std::vector<IntVec> pts{IntVec{1, 0, 0}, IntVec{0, 1, 0}, IntVec{0, 0, 1},
                            IntVec{-1, -1, -2}};
    return LatticePolytope::hull_from_vertices(3, pts);
}

/// Fano but not reflexive, dimension 4.
inline LatticePolytope fano_nonreflexive4() {
    std::vector<IntVec> pts{IntVec{1, 0, 0, 0}, IntVec{0, 1, 0, 0},
                            IntVec{0, 0, 1, 0}, IntVec{0, 0, 0, 1},
                            IntVec{-1, -1, -1, -3}};
    return LatticePolytope::hull_from_vertices(4, pts);
}

/// conv{±e_i, ±(1,...,1)}: the del Pezzo polytope, smooth in even
/// dimensions (and for d = 3).
inline LatticePolytope del_pezzo(int d) {
    std::vector<IntVec> pts;
    for (int i = 0; i < d; ++i) {
        pts.push_back(unit(d, i, 1));
        pts.push_back(unit(d, i, -1));
    }
    pts.push_back(IntVec(d, 1));
    pts.push_back(IntVec(d, -1));
    return LatticePolytope::hull_from_vertices(d, pts);
}

/// A random full-dimensional lattice polytope with coordinates in
/// [-span, span].
inline LatticePolytope random_polytope(std::mt19937_64& rng, int d,
                                       int span = 4) {
    std::uniform_int_distribution<int> coord(-span, span);
    std::uniform_int_distribution<int> count(d + 1, d + 6);
    for (;;) {
        std::vector<IntVec> pts;
        int n = count(rng);
        for (int k = 0; k < n; ++k) {
            IntVec v(d);
            for (int i = 0; i < d; ++i) v[i] = coord(rng);
            pts.push_back(std::move(v));
        }
        try {
            return LatticePolytope::hull_from_vertices(d, pts);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::Dimension) throw;
        }
    }
}

/// A random unimodular matrix: a product of row shears, swaps, and sign
/// flips applied to the identity.
inline IntMatrix random_unimodular(std::mt19937_64& rng, int d,
                                   int steps = 12) {
    std::vector<IntVec> t(d, IntVec(d, 0));
    for (int i = 0; i < d; ++i) t[i][i] = 1;
    std::uniform_int_distribution<int> pick(0, d - 1);
    std::uniform_int_distribution<int> kind(0, 2);
    std::uniform_int_distribution<int> shear(-2, 2);
    for (int s = 0; s < steps; ++s) {
        int i = pick(rng), j = pick(rng);
        switch (kind(rng)) {
        case 0:
            if (i != j) {
                Int c(shear(rng));
                for (int k = 0; k < d; ++k) t[i][k] += c * t[j][k];
            }
            break;
        case 1:
            if (i != j) std::swap(t[i], t[j]);
            break;
        default:
            for (int k = 0; k < d; ++k) t[i][k] = -t[i][k];
            break;
        }
    }
    return IntMatrix::from_rows(t);
}

inline IntVec random_shift(std::mt19937_64& rng, int d, int span = 3) {
    std::uniform_int_distribution<int> coord(-span, span);
    IntVec v(d);
    for (int i = 0; i < d; ++i) v[i] = coord(rng);
    return v;
}

} // namespace fixtures
