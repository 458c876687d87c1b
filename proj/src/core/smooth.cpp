#include "core/smooth.hpp"

#include "core/ehrhart.hpp"
#include "core/error.hpp"

namespace latpoly {

std::vector<Int> smooth_f_vector(int d, const Int& b1,
                                 const std::optional<Int>& b2) {
    if (d < 3 || d > 5) {
        fail(ErrorCode::Dimension,
             "smooth f-vector formulas cover dimensions 3 to 5");
    }
    if (d == 3) return {b1, 3 * b1 - 6, 2 * b1 - 4};
    if (!b2.has_value()) {
        fail(ErrorCode::Arity,
             "the second boundary count is required for dimensions 4 and 5");
    }
    const Int& c2 = *b2;
    if (d == 4) return {b1, c2 - b1, 2 * c2 - 4 * b1, c2 - 2 * b1};
    return {b1, c2 - b1, 4 * c2 - 14 * b1 + 20, 5 * c2 - 20 * b1 + 30,
            2 * c2 - 8 * b1 + 12};
}

std::vector<Int> smooth_f_vector(const LatticePolytope& p) {
    const int d = p.dim();
    if (d < 3 || d > 5) {
        fail(ErrorCode::Dimension,
             "smooth f-vector formulas cover dimensions 3 to 5");
    }
    if (!is_smooth(p)) {
        fail(ErrorCode::Precondition, "polytope is not smooth");
    }
    Int b1 = count_points(p, 1).boundary;
    if (d == 3) return smooth_f_vector(3, b1);
    return smooth_f_vector(d, b1, count_points(p, 2).boundary);
}

bool euler_relation_check(const std::vector<Int>& f) {
    const int d = static_cast<int>(f.size());
    Int acc = -1;  // the empty face, (-1)^{-1} f_{-1}
    for (int i = 0; i < d; ++i) {
        acc += (i % 2 == 0) ? f[i] : -f[i];
    }
    acc += (d % 2 == 0) ? 1 : -1;  // (-1)^d f_d
    return acc == 0;
}

bool dehn_sommerville_check(const std::vector<Int>& f) {
    const int d = static_cast<int>(f.size());
    for (int i = 1; i <= d - 2; ++i) {
        Int acc = 0;
        for (int j = i; j <= d - 1; ++j) {
            Int term = binomial(j + 1, i + 1) * f[j];
            acc += ((d - 1 - j) % 2 != 0) ? -term : term;
        }
        if (acc != f[i]) return false;
    }
    return true;
}

SmoothBoundsReport smooth_bounds_check(const LatticePolytope& p) {
    const int d = p.dim();
    if (d < 3 || d > 5) {
        fail(ErrorCode::Dimension,
             "smooth bounds are evaluated for dimensions 3 to 5");
    }
    if (!is_smooth(p)) {
        fail(ErrorCode::Precondition, "polytope is not smooth");
    }
    SmoothBoundsReport rep;
    rep.d = d;
    rep.f = f_vector_direct(p);
    rep.b1 = count_points(p, 1).boundary;
    rep.b2 = (d >= 4) ? count_points(p, 2).boundary : Int(0);

    Int vertex_cap = (d % 2 == 0) ? Int(3 * d) : Int(3 * d - 1);
    rep.slack_vertex_bound = vertex_cap - rep.b1;
    rep.slack_facet_ineq = 12 * rep.f[d - 3] - (3 * d - 4) * rep.f[d - 2];
    rep.slack_edge_ineq = rep.f[1] + binomial(d + 1, 2) - d * rep.f[0];

    bool ok = rep.slack_vertex_bound >= 0 && rep.slack_facet_ineq >= 0 &&
              rep.slack_edge_ineq >= 0;

    if (d == 4) {
        rep.has_b2_bounds = true;
        rep.slack_b2_lower = rep.b2 - (5 * rep.b1 - 10);
        rep.slack_b2_upper = 5 * rep.b1 - rep.b2;
    } else if (d == 5) {
        rep.has_b2_bounds = true;
        rep.slack_b2_lower = 7 * rep.b2 - (42 * rep.b1 - 105);
        rep.slack_b2_upper = (52 * rep.b1 - 90) - 7 * rep.b2;
    }
    if (rep.has_b2_bounds) {
        ok = ok && rep.slack_b2_lower >= 0 && rep.slack_b2_upper >= 0;
    }

    if (d >= 4) {
        rep.has_volume_bound = true;
        rep.volume = volume_from_ehrhart(ehrhart_polynomial(p));
        if (d == 4) {
            rep.slack_volume =
                Rational(3 * rep.f[0]) - Rational(factorial(4)) * rep.volume;
        } else {
            rep.slack_volume = make_rational(48 * rep.f[0] - 96, 7) -
                               Rational(factorial(5)) * rep.volume;
        }
        ok = ok && rep.slack_volume >= 0;
    }
    rep.all_hold = ok;
    return rep;
}

} // namespace latpoly
