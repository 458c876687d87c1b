#include "io/json_io.hpp"

#include <set>
#include <sstream>

#include "core/birkhoff.hpp"
#include "core/boundary_formulas.hpp"
#include "core/ehrhart.hpp"
#include "core/reflexive.hpp"
#include "core/smooth.hpp"

namespace latpoly {

namespace {

using nlohmann::json;

json j_int(const Int& v) { return to_string(v); }
json j_rat(const Rational& v) { return to_string(v); }

json j_int_list(const std::vector<Int>& v) {
    json a = json::array();
    for (const Int& x : v) a.push_back(j_int(x));
    return a;
}

json j_rat_list(const RatVec& v) {
    json a = json::array();
    for (const Rational& x : v) a.push_back(j_rat(x));
    return a;
}

json parse_text(const std::string& text) {
    json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded()) fail(ErrorCode::Parse, "malformed JSON input");
    return j;
}

Int parse_big_int(const json& v, const std::string& where) {
    if (v.is_number_integer()) return Int(v.get<long>());
    if (v.is_number_unsigned()) return Int(v.get<unsigned long>());
    if (v.is_string()) {
        const std::string s = v.get<std::string>();
        std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        bool ok = i < s.size();
        for (; i < s.size(); ++i) ok = ok && s[i] >= '0' && s[i] <= '9';
        if (ok) return Int(s);
    }
    fail(ErrorCode::Parse, where + " must be an integer");
}

int parse_small_int(const json& v, const std::string& where) {
    if (!v.is_number_integer()) {
        fail(ErrorCode::Parse, where + " must be an integer");
    }
    long x = v.get<long>();
    if (x < -(1 << 20) || x > (1 << 20)) {
        fail(ErrorCode::Parse, where + " is out of range");
    }
    return static_cast<int>(x);
}

long to_long(const Int& v, const std::string& where) {
    if (!v.fits_slong_p()) fail(ErrorCode::Scale, where + " is too large");
    return v.get_si();
}

} // namespace

LatticePolytope parse_polytope_json(const std::string& text) {
    json j = parse_text(text);
    if (!j.is_object() || !j.contains("dim") || !j.contains("vertices")) {
        fail(ErrorCode::Parse,
             "polytope input needs \"dim\" and \"vertices\" fields");
    }
    int dim = parse_small_int(j["dim"], "\"dim\"");
    if (dim < 1) fail(ErrorCode::Parse, "\"dim\" must be positive");
    const json& verts = j["vertices"];
    if (!verts.is_array() || verts.empty()) {
        fail(ErrorCode::Parse, "\"vertices\" must be a non-empty array");
    }
    std::vector<IntVec> points;
    for (const json& row : verts) {
        if (!row.is_array() || static_cast<int>(row.size()) != dim) {
            fail(ErrorCode::Parse,
                 "every vertex must be an array of \"dim\" integers");
        }
        IntVec v;
        for (const json& c : row) v.push_back(parse_big_int(c, "vertex entry"));
        points.push_back(std::move(v));
    }
    return LatticePolytope::hull_from_vertices(dim, points);
}

Poset parse_poset_json(const std::string& text) {
    json j = parse_text(text);
    if (!j.is_object() || !j.contains("size")) {
        fail(ErrorCode::Parse, "poset input needs a \"size\" field");
    }
    int size = parse_small_int(j["size"], "\"size\"");
    std::vector<std::pair<int, int>> covers;
    if (j.contains("covers")) {
        const json& cs = j["covers"];
        if (!cs.is_array()) {
            fail(ErrorCode::Parse, "\"covers\" must be an array of pairs");
        }
        for (const json& c : cs) {
            if (!c.is_array() || c.size() != 2) {
                fail(ErrorCode::Parse,
                     "every cover must be a [lower, upper] pair");
            }
            covers.emplace_back(parse_small_int(c[0], "cover entry"),
                                parse_small_int(c[1], "cover entry"));
        }
    }
    return Poset(size, covers);
}

const char* error_tag(ErrorCode code) {
    switch (code) {
    case ErrorCode::Parse: return "parse";
    case ErrorCode::Dimension: return "dimension";
    case ErrorCode::Arity: return "arity";
    case ErrorCode::Parity: return "parity";
    case ErrorCode::Scale: return "scale";
    case ErrorCode::Position: return "position";
    case ErrorCode::Precondition: return "precondition";
    case ErrorCode::Singular: return "singular";
    case ErrorCode::Cycle: return "cycle";
    case ErrorCode::Inconsistency: return "inconsistency";
    }
    return "internal";
}

nlohmann::json error_json(ErrorCode code, const std::string& message) {
    return json{{"error", error_tag(code)}, {"message", message}};
}

nlohmann::json ehrhart_report_json(const LatticePolytope& p, long m_max) {
    const int d = p.dim();
    if (m_max < 0) m_max = d + 1;
    if (m_max < d) {
        fail(ErrorCode::Precondition,
             "m_max must be at least the dimension to pin the polynomial");
    }
    std::vector<DilationCounts> counts = count_range(p, m_max);
    std::vector<Int> totals;
    for (const DilationCounts& c : counts) totals.push_back(c.total);
    Polynomial poly = ehrhart_from_counts(d, totals);
    std::vector<Int> delta =
        delta_vector(d, std::vector<Int>(totals.begin(), totals.begin() + d + 1));

    bool counts_consistent = true;
    bool reciprocity = true;
    json rows = json::array();
    for (long m = 0; m <= m_max; ++m) {
        const DilationCounts& c = counts[m];
        rows.push_back({{"m", m},
                        {"total", j_int(c.total)},
                        {"boundary", j_int(c.boundary)},
                        {"interior", j_int(c.interior)}});
        if (c.total != c.boundary + c.interior) counts_consistent = false;
        if (m >= 1) {
            Rational lhs = poly.eval(Rational(-Int(m)));
            if (d % 2 != 0) lhs = -lhs;
            if (lhs != Rational(c.interior)) reciprocity = false;
        }
    }
    Int delta_sum = 0;
    for (const Int& v : delta) delta_sum += v;
    Rational norm_vol = Rational(factorial(d)) * volume_from_ehrhart(poly);
    bool delta_ok = Rational(delta_sum) == norm_vol;

    json rep;
    rep["d"] = d;
    rep["m_max"] = m_max;
    rep["counts"] = rows;
    rep["coefficients"] = j_rat_list(poly.coeffs);
    rep["volume"] = j_rat(volume_from_ehrhart(poly));
    rep["boundary_volume"] = j_rat(boundary_volume_from_ehrhart(poly));
    rep["delta"] = j_int_list(delta);
    rep["normalized_volume"] = j_rat(norm_vol);
    rep["reciprocity"] = reciprocity;
    rep["counts_consistent"] = counts_consistent;
    rep["agree"] = reciprocity && counts_consistent && delta_ok;
    return rep;
}

nlohmann::json boundary_volume_report_json(const LatticePolytope& p) {
    const int d = p.dim();
    Rational direct = boundary_volume_direct(p);
    Rational expl = boundary_volume_explicit(p);
    Rational matrix = boundary_volume_matrix(p);
    Rational ehrhart = boundary_volume_from_ehrhart(ehrhart_polynomial(p));

    json rep;
    rep["d"] = d;
    rep["boundary_volume"] = j_rat(direct);
    rep["direct"] = j_rat(direct);
    rep["explicit"] = j_rat(expl);
    rep["matrix"] = j_rat(matrix);
    rep["ehrhart"] = j_rat(ehrhart);
    rep["agree"] = direct == expl && direct == matrix && direct == ehrhart;
    return rep;
}

nlohmann::json volume_report_json(const LatticePolytope& p) {
    const int d = p.dim();
    Rational oracle = volume_from_ehrhart(ehrhart_polynomial(p));
    Rational general = volume_general(p);
    Rational parity_form = (d % 2 == 0) ? volume_macdonald_even(p)
                                        : volume_kolodziejczyk_odd(p);

    json rep;
    rep["d"] = d;
    rep["volume"] = j_rat(oracle);
    rep["general"] = j_rat(general);
    rep[d % 2 == 0 ? "macdonald" : "kolodziejczyk"] = j_rat(parity_form);
    rep["agree"] = oracle == general && oracle == parity_form;
    return rep;
}

nlohmann::json reflexivity_report_json(const LatticePolytope& p) {
    ReflexivityReport r = reflexivity_report(p);
    json rep;
    rep["d"] = r.d;
    rep["is_fano"] = r.is_fano;
    rep["dual_integral"] = r.dual_integral;
    rep["condition_ii"] = r.condition_ii;
    rep["condition_iii"] = r.condition_iii;
    rep["palindromic"] = r.palindromic;
    if (r.d >= 2) {
        rep["f_zero"] = r.f_zero;
        rep["f_value"] = j_rat(r.f_value);
    }
    if (r.has_g) {
        rep["g_value"] = j_rat(r.g_value);
    }
    rep["delta"] = j_int_list(r.delta);
    rep["volume"] = j_rat(r.volume);
    rep["boundary_volume"] = j_rat(r.boundary_volume);
    if (r.reflexive) {
        rep["eq4_volume"] = j_rat(r.eq4_volume);
        rep["eq4_matches"] = r.eq4_matches;
    }
    rep["reflexive"] = r.reflexive;
    rep["agree"] = r.agree;
    return rep;
}

nlohmann::json delta_report_json(const LatticePolytope& p) {
    const int d = p.dim();
    std::vector<Int> delta = delta_vector(p);
    Int delta_sum = 0;
    for (const Int& v : delta) delta_sum += v;
    Rational norm_vol =
        Rational(factorial(d)) * volume_from_ehrhart(ehrhart_polynomial(p));

    json rep;
    rep["d"] = d;
    rep["delta"] = j_int_list(delta);
    rep["palindromic"] = palindrome_check(delta);
    rep["delta_sum"] = j_int(delta_sum);
    rep["normalized_volume"] = j_rat(norm_vol);
    bool agree = Rational(delta_sum) == norm_vol;
    if (delta.back() > 0) {
        LowerBoundReport lb = volume_lower_bound_check(p);
        rep["lower_bound"] = json{{"lhs", j_int(lb.lhs)},
                                  {"rhs", j_int(lb.rhs)},
                                  {"holds", lb.holds},
                                  {"equality", lb.equality},
                                  {"delta_flat", lb.delta_flat}};
        agree = agree && lb.holds;
    }
    rep["agree"] = agree;
    return rep;
}

nlohmann::json f_vector_report_json(const LatticePolytope& p) {
    const int d = p.dim();
    std::vector<Int> f = f_vector_direct(p);
    bool euler = euler_relation_check(f);
    bool smooth = is_smooth(p);

    json rep;
    rep["d"] = d;
    rep["f_vector"] = j_int_list(f);
    rep["euler"] = euler;
    rep["smooth"] = smooth;
    bool agree = euler;
    if (smooth && d >= 3 && d <= 5) {
        std::vector<Int> formula = smooth_f_vector(p);
        bool matches = formula == f;
        bool ds = dehn_sommerville_check(f);
        SmoothBoundsReport b = smooth_bounds_check(p);
        json bounds;
        bounds["slack_vertex_bound"] = j_int(b.slack_vertex_bound);
        bounds["slack_facet_ineq"] = j_int(b.slack_facet_ineq);
        bounds["slack_edge_ineq"] = j_int(b.slack_edge_ineq);
        if (b.has_b2_bounds) {
            bounds["slack_b2_lower"] = j_int(b.slack_b2_lower);
            bounds["slack_b2_upper"] = j_int(b.slack_b2_upper);
        }
        if (b.has_volume_bound) {
            bounds["volume"] = j_rat(b.volume);
            bounds["slack_volume"] = j_rat(b.slack_volume);
        }
        bounds["all_hold"] = b.all_hold;
        rep["formula"] = j_int_list(formula);
        rep["formula_matches"] = matches;
        rep["dehn_sommerville"] = ds;
        rep["bounds"] = bounds;
        agree = agree && matches && ds && b.all_hold;
    }
    rep["agree"] = agree;
    return rep;
}

nlohmann::json order_report_json(const Poset& q, long k_max) {
    const int d = q.size();
    if (k_max < 0) k_max = d + 2;
    json rep;
    rep["size"] = d;
    json covers = json::array();
    for (const auto& [lo, hi] : q.cover_relations()) {
        covers.push_back({lo, hi});
    }
    rep["covers"] = covers;
    rep["minimal"] = q.minimal_elements();
    rep["maximal"] = q.maximal_elements();
    rep["graded"] = q.is_graded();
    if (q.is_graded()) rep["rank"] = q.rank();
    rep["down_sets"] = q.down_sets().size();

    Int e = linear_extensions(q);
    rep["linear_extensions"] = j_int(e);
    std::vector<Int> es = surjective_counts(q);
    rep["surjective"] = j_int_list(std::vector<Int>(es.begin() + 1, es.end()));
    std::vector<Int> omega, omega_bar;
    for (long k = 0; k <= k_max; ++k) {
        omega.push_back(order_polynomial(q, k));
        omega_bar.push_back(strict_order_polynomial(q, k));
    }
    rep["order_polynomial"] = j_int_list(omega);
    rep["strict_order_polynomial"] = j_int_list(omega_bar);
    rep["coefficients"] = j_rat_list(order_polynomial_interpolated(q).coeffs);

    OrderReciprocityReport rec = reciprocity_checks(q, k_max);
    json rj;
    rj["strict_reciprocity"] = rec.strict_reciprocity;
    rj["leading_coeff"] = rec.leading_coeff;
    if (rec.graded) {
        rj["subleading_coeff"] = rec.subleading_coeff;
        rj["graded_symmetry"] = rec.graded_symmetry;
        rj["surjective_identity"] = rec.surjective_identity;
    }
    rj["all_hold"] = rec.all_hold;
    rep["reciprocity"] = rj;

    LatticePolytope poly = order_polytope(q);
    rep["polytope"] = json{{"dim", poly.dim()},
                           {"vertices", poly.vertices().size()},
                           {"facets", poly.facets().size()}};

    OrderEhrhartReport ehr = order_ehrhart_checks(q, k_max);
    rep["ehrhart"] = json{{"counts_match", ehr.counts_match},
                          {"interiors_match", ehr.interiors_match},
                          {"volume_matches", ehr.volume_matches},
                          {"all_hold", ehr.all_hold}};

    OrderBoundaryReport bd = order_boundary_volume_report(q);
    json bj;
    bj["general"] = j_rat(bd.general);
    if (bd.graded) bj["graded_form"] = j_rat(bd.graded_form);
    bj["direct"] = j_rat(bd.direct);
    bj["agree"] = bd.agree;
    rep["boundary"] = bj;

    bool agree = rec.all_hold && ehr.all_hold && bd.agree;
    if (q.is_graded()) {
        LatticePolytope refl = reflexive_dilate(q);
        OrderReflexiveReport orr = order_reflexive_identities(q);
        json oj;
        oj["dilate_reflexive"] = is_reflexive(refl);
        oj["lhs"] = j_int(orr.lhs);
        oj["rhs"] = j_int(orr.rhs);
        oj["volume_identity"] = orr.volume_identity;
        if (orr.has_odd_identity) {
            oj["odd_value"] = j_int(orr.odd_value);
            oj["odd_identity"] = orr.odd_identity;
        }
        oj["all_hold"] = orr.all_hold && is_reflexive(refl);
        rep["reflexive"] = oj;
        agree = agree && oj["all_hold"].get<bool>();
    }
    rep["agree"] = agree;
    return rep;
}

nlohmann::json birkhoff_report_json(int d, const std::string& checks,
                                    long m_max) {
    if (d < 2 || d > 4) {
        fail(ErrorCode::Scale, "birkhoff reports support d = 2..4");
    }
    const int big_d = (d - 1) * (d - 1);
    if (m_max < 0) m_max = big_d + 2;

    std::set<std::string> want;
    std::stringstream ss(checks);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        if (tok != "reciprocity" && tok != "reflexive" && tok != "volume" &&
            tok != "identity" && tok != "bound") {
            fail(ErrorCode::Precondition, "unknown check \"" + tok + "\"");
        }
        want.insert(tok);
    }
    if (want.empty()) {
        if (d <= 3) {
            want.insert("reciprocity");
            want.insert("reflexive");
        }
        if (d % 2 == 0) want.insert("identity");
        want.insert("volume");
        want.insert("bound");
    }

    json rep;
    rep["d"] = d;
    rep["D"] = big_d;
    std::vector<Int> h, pos;
    for (long s = 0; s <= m_max; ++s) {
        h.push_back(magic_count(d, s));
        pos.push_back(positive_magic_count(d, s));
    }
    rep["h_values"] = j_int_list(h);
    rep["p_values"] = j_int_list(pos);

    bool agree = true;
    if (want.count("volume")) {
        BirkhoffVolumeReport v = birkhoff_volume_report(d);
        rep["volume"] = json{{"formula", j_rat(v.formula)},
                             {"oracle", j_rat(v.oracle)},
                             {"agree", v.agree}};
        agree = agree && v.agree;
    }
    if (want.count("reciprocity")) {
        BirkhoffReciprocityReport r = birkhoff_reciprocity_check(d);
        rep["reciprocity"] = json{{"counts_match", r.counts_match},
                                  {"interiors_match", r.interiors_match},
                                  {"one_positive_square", r.one_positive_square},
                                  {"reciprocity", r.reciprocity},
                                  {"all_hold", r.all_hold}};
        agree = agree && r.all_hold;
    }
    if (want.count("reflexive")) {
        BirkhoffReflexiveReport r = birkhoff_reflexive_checks(d);
        rep["reflexive"] = json{{"unique_interior", r.unique_interior},
                                {"dilate_reflexive", r.dilate_reflexive},
                                {"functional_equation", r.functional_equation},
                                {"all_hold", r.all_hold}};
        agree = agree && r.all_hold;
    }
    if (want.count("identity")) {
        Int value = birkhoff_even_identity(d);
        rep["identity"] = json{{"value", j_int(value)}, {"agree", value == 0}};
        agree = agree && value == 0;
    }
    if (want.count("bound")) {
        BirkhoffBoundReport b = birkhoff_lower_bound_check(d);
        rep["bound"] = json{{"lhs", j_int(b.lhs)},
                            {"rhs", j_int(b.rhs)},
                            {"holds", b.holds},
                            {"equality", b.equality}};
        agree = agree && b.holds;
    }
    rep["agree"] = agree;
    return rep;
}

nlohmann::json table1_json(int d) {
    std::vector<Int> coeffs = table1_coefficients(d);
    json a = json::array();
    for (const Int& c : coeffs) a.push_back(to_long(c, "coefficient"));
    return json{{"coeffs", a}, {"d", d}};
}

bool report_agrees(const nlohmann::json& report) {
    if (report.is_object()) {
        for (const auto& [key, value] : report.items()) {
            if ((key == "agree" || key == "all_hold") && value.is_boolean() &&
                !value.get<bool>()) {
                return false;
            }
            if (!report_agrees(value)) return false;
        }
    } else if (report.is_array()) {
        for (const auto& value : report) {
            if (!report_agrees(value)) return false;
        }
    }
    return true;
}

} // namespace latpoly
