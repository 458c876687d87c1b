#include <doctest.h>

#include <json.hpp>

#include <cstring>
#include <string>

#include "latpoly.h"

using nlohmann::json;

namespace {

const char* kOctahedron =
    R"({"dim": 3, "vertices": [[1,0,0],[-1,0,0],[0,1,0],[0,-1,0],[0,0,1],[0,0,-1]]})";

struct PolytopeHandle {
    lp_polytope* p = nullptr;
    explicit PolytopeHandle(const char* text) {
        REQUIRE(lp_polytope_parse(text, &p) == LP_OK);
        REQUIRE(p != nullptr);
    }
    ~PolytopeHandle() { lp_polytope_free(p); }
};

// Takes &out rather than out: the report call in the argument list and the
// read of the filled pointer must not race on evaluation order.
json take_report(lp_status status, char** out) {
    REQUIRE(status == LP_OK);
    REQUIRE(*out != nullptr);
    json j = json::parse(std::string(*out));
    lp_string_free(*out);
    *out = nullptr;
    return j;
}

} // namespace

TEST_CASE("polytope parse and free round trip") {
    lp_polytope* p = nullptr;
    CHECK(lp_polytope_parse(kOctahedron, &p) == LP_OK);
    REQUIRE(p != nullptr);
    lp_polytope_free(p);
    lp_polytope_free(nullptr);  // must be a no-op
}

TEST_CASE("parse failures set status and tag") {
    lp_polytope* p = nullptr;
    SUBCASE("malformed text") {
        CHECK(lp_polytope_parse("{oops", &p) == LP_EPARSE);
        CHECK(p == nullptr);
        CHECK(std::strcmp(lp_last_error_tag(), "parse") == 0);
        CHECK(std::strlen(lp_last_error()) > 0);
    }
    SUBCASE("schema violation") {
        CHECK(lp_polytope_parse(R"({"dim": 2})", &p) == LP_EPARSE);
        CHECK(std::strcmp(lp_last_error_tag(), "parse") == 0);
    }
    SUBCASE("degenerate geometry is invalid, not a parse error") {
        const char* flat =
            R"({"dim": 2, "vertices": [[0,0],[1,1],[2,2]]})";
        CHECK(lp_polytope_parse(flat, &p) == LP_EINVALID);
        CHECK(std::strcmp(lp_last_error_tag(), "dimension") == 0);
    }
    SUBCASE("null arguments") {
        CHECK(lp_polytope_parse(nullptr, &p) == LP_EINVALID);
        CHECK(lp_polytope_parse(kOctahedron, nullptr) == LP_EINVALID);
    }
}

TEST_CASE("poset parse and cycle rejection") {
    lp_poset* q = nullptr;
    REQUIRE(lp_poset_parse(R"({"size": 3, "covers": [[0,1],[1,2]]})", &q) ==
            LP_OK);
    lp_poset_free(q);

    q = nullptr;
    CHECK(lp_poset_parse(R"({"size": 2, "covers": [[0,1],[1,0]]})", &q) ==
          LP_EINVALID);
    CHECK(q == nullptr);
    CHECK(std::strcmp(lp_last_error_tag(), "cycle") == 0);
}

TEST_CASE("ehrhart report") {
    PolytopeHandle oct(kOctahedron);
    char* out = nullptr;
    json j = take_report(lp_ehrhart_report(oct.p, 4, &out), &out);
    CHECK(j["agree"] == true);
    CHECK(j["volume"] == "4/3");
    CHECK(j["boundary_volume"] == "4");
    CHECK(j["delta"] == json::array({"1", "3", "3", "1"}));
    CHECK(j["reciprocity"] == true);
    CHECK(j["counts"].size() == 5);
    CHECK(j["counts"][2]["total"] == "25");
}

TEST_CASE("boundary volume report pairs the four routes") {
    PolytopeHandle oct(kOctahedron);
    char* out = nullptr;
    json j = take_report(lp_boundary_volume_report(oct.p, &out), &out);
    CHECK(j["d"] == 3);
    CHECK(j["boundary_volume"] == "4");
    CHECK(j["direct"] == "4");
    CHECK(j["explicit"] == "4");
    CHECK(j["matrix"] == "4");
    CHECK(j["ehrhart"] == "4");
    CHECK(j["agree"] == true);
}

TEST_CASE("volume and reflexivity reports") {
    PolytopeHandle oct(kOctahedron);
    char* out = nullptr;
    json v = take_report(lp_volume_report(oct.p, &out), &out);
    CHECK(v["volume"] == "4/3");
    CHECK(v["general"] == "4/3");
    CHECK(v["agree"] == true);

    out = nullptr;
    json r = take_report(lp_reflexive_report(oct.p, &out), &out);
    CHECK(r["reflexive"] == true);
    CHECK(r["f_value"] == "0");
    CHECK(r["g_value"] == "0");
    CHECK(r["agree"] == true);
}

TEST_CASE("delta and f-vector reports") {
    PolytopeHandle oct(kOctahedron);
    char* out = nullptr;
    json d = take_report(lp_delta_report(oct.p, &out), &out);
    CHECK(d["delta"] == json::array({"1", "3", "3", "1"}));
    CHECK(d["palindromic"] == true);
    CHECK(d["normalized_volume"] == "8");

    out = nullptr;
    json f = take_report(lp_f_vector_report(oct.p, &out), &out);
    CHECK(f["f_vector"] == json::array({"6", "12", "8"}));
    CHECK(f["smooth"] == true);
    CHECK(f["euler"] == true);
    CHECK(f["formula_matches"] == true);
}

TEST_CASE("order report") {
    lp_poset* q = nullptr;
    REQUIRE(lp_poset_parse(
                R"({"size": 4, "covers": [[0,1],[1,2],[0,3]]})", &q) == LP_OK);
    char* out = nullptr;
    json j = take_report(lp_order_report(q, 6, &out), &out);
    lp_poset_free(q);
    CHECK(j["graded"] == false);
    CHECK(j["linear_extensions"] == "3");
    CHECK(j["surjective"] == json::array({"1", "5", "7", "3"}));
    CHECK(j["boundary"]["general"] == "11/6");
    CHECK(j["boundary"]["direct"] == "11/6");
    CHECK(j["agree"] == true);
    CHECK(j["polytope"]["vertices"] == 7);
}

TEST_CASE("birkhoff report") {
    char* out = nullptr;
    json j = take_report(lp_birkhoff_report(3, nullptr, -1, &out), &out);
    CHECK(j["volume"]["formula"] == "1/8");
    CHECK(j["bound"]["lhs"] == "243");
    CHECK(j["agree"] == true);

    out = nullptr;
    json only = take_report(lp_birkhoff_report(4, "volume,identity", 8, &out),
                            &out);
    CHECK(only["volume"]["formula"] == "11/11340");
    CHECK(only["identity"]["value"] == "0");
    CHECK(!only.contains("reciprocity"));

    out = nullptr;
    CHECK(lp_birkhoff_report(3, "nonsense", -1, &out) == LP_EINVALID);
    CHECK(out == nullptr);
}

TEST_CASE("table lookup") {
    char* out = nullptr;
    json j = take_report(lp_table1(7, &out), &out);
    CHECK(j["d"] == 7);
    CHECK(j["coeffs"] == json::array({-40, 30, -12, 2}));

    out = nullptr;
    CHECK(lp_table1(1, &out) == LP_EINVALID);
    CHECK(std::strcmp(lp_last_error_tag(), "dimension") == 0);
}

TEST_CASE("report agreement scanner") {
    CHECK(lp_report_agrees(R"({"agree": true, "inner": {"all_hold": true}})") ==
          1);
    CHECK(lp_report_agrees(R"({"agree": true, "inner": {"agree": false}})") ==
          0);
    CHECK(lp_report_agrees("not json at all") == 0);
    CHECK(lp_report_agrees(nullptr) == 0);
}

TEST_CASE("report calls reject null handles") {
    char* out = nullptr;
    CHECK(lp_ehrhart_report(nullptr, 4, &out) == LP_EINVALID);
    CHECK(lp_order_report(nullptr, 5, &out) == LP_EINVALID);
    PolytopeHandle oct(kOctahedron);
    CHECK(lp_ehrhart_report(oct.p, 4, nullptr) == LP_EINVALID);
}

TEST_CASE("validation errors surface through reports") {
    // m_max below the dimension cannot pin the polynomial.
    PolytopeHandle oct(kOctahedron);
    char* out = nullptr;
    lp_status st = lp_ehrhart_report(oct.p, 1, &out);
    CHECK(st == LP_EINVALID);
    CHECK(out == nullptr);
    CHECK(std::strlen(lp_last_error()) > 0);
}
