#include "latpoly.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "core/error.hpp"
#include "io/json_io.hpp"

using namespace latpoly;

struct lp_polytope {
    LatticePolytope value;
};

struct lp_poset {
    Poset value;
};

namespace {

thread_local std::string g_last_error;
thread_local std::string g_last_tag;

lp_status status_of(ErrorCode code) {
    switch (code) {
    case ErrorCode::Parse:
        return LP_EPARSE;
    case ErrorCode::Inconsistency:
        return LP_EINCONSISTENT;
    default:
        return LP_EINVALID;
    }
}

lp_status record_failure(lp_status status, const char* tag,
                         const std::string& message) {
    g_last_error = message;
    g_last_tag = tag;
    return status;
}

/// Runs fn() (which must return lp_status) under the exception-to-status
/// mapping shared by every entry point.
template <typename Fn>
lp_status guarded(Fn&& fn) {
    try {
        g_last_error.clear();
        g_last_tag.clear();
        return fn();
    } catch (const Error& e) {
        return record_failure(status_of(e.code()), error_tag(e.code()),
                              e.what());
    } catch (const std::exception& e) {
        return record_failure(LP_EINTERNAL, "internal", e.what());
    } catch (...) {
        return record_failure(LP_EINTERNAL, "internal", "unknown failure");
    }
}

char* copy_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out != nullptr) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

lp_status emit(const nlohmann::json& report, char** out_json) {
    if (out_json == nullptr) {
        return record_failure(LP_EINVALID, "precondition",
                              "output pointer is null");
    }
    *out_json = copy_string(report.dump());
    if (*out_json == nullptr) {
        return record_failure(LP_EINTERNAL, "internal", "allocation failed");
    }
    return LP_OK;
}

} // namespace

extern "C" {

lp_status lp_polytope_parse(const char* json_text, lp_polytope** out) {
    return guarded([&]() -> lp_status {
        if (json_text == nullptr || out == nullptr) {
            return record_failure(LP_EINVALID, "precondition",
                                  "null argument");
        }
        *out = new lp_polytope{parse_polytope_json(json_text)};
        return LP_OK;
    });
}

void lp_polytope_free(lp_polytope* p) { delete p; }

lp_status lp_poset_parse(const char* json_text, lp_poset** out) {
    return guarded([&]() -> lp_status {
        if (json_text == nullptr || out == nullptr) {
            return record_failure(LP_EINVALID, "precondition",
                                  "null argument");
        }
        *out = new lp_poset{parse_poset_json(json_text)};
        return LP_OK;
    });
}

void lp_poset_free(lp_poset* q) { delete q; }

lp_status lp_ehrhart_report(const lp_polytope* p, long m_max,
                            char** out_json) {
    return guarded([&]() -> lp_status {
        if (p == nullptr) {
            return record_failure(LP_EINVALID, "precondition", "null handle");
        }
        return emit(ehrhart_report_json(p->value, m_max), out_json);
    });
}

lp_status lp_boundary_volume_report(const lp_polytope* p, char** out_json) {
    return guarded([&]() -> lp_status {
        if (p == nullptr) {
            return record_failure(LP_EINVALID, "precondition", "null handle");
        }
        return emit(boundary_volume_report_json(p->value), out_json);
    });
}

lp_status lp_volume_report(const lp_polytope* p, char** out_json) {
    return guarded([&]() -> lp_status {
        if (p == nullptr) {
            return record_failure(LP_EINVALID, "precondition", "null handle");
        }
        return emit(volume_report_json(p->value), out_json);
    });
}

lp_status lp_reflexive_report(const lp_polytope* p, char** out_json) {
    return guarded([&]() -> lp_status {
        if (p == nullptr) {
            return record_failure(LP_EINVALID, "precondition", "null handle");
        }
        return emit(reflexivity_report_json(p->value), out_json);
    });
}

lp_status lp_delta_report(const lp_polytope* p, char** out_json) {
    return guarded([&]() -> lp_status {
        if (p == nullptr) {
            return record_failure(LP_EINVALID, "precondition", "null handle");
        }
        return emit(delta_report_json(p->value), out_json);
    });
}

lp_status lp_f_vector_report(const lp_polytope* p, char** out_json) {
    return guarded([&]() -> lp_status {
        if (p == nullptr) {
            return record_failure(LP_EINVALID, "precondition", "null handle");
        }
        return emit(f_vector_report_json(p->value), out_json);
    });
}

lp_status lp_order_report(const lp_poset* q, long k_max, char** out_json) {
    return guarded([&]() -> lp_status {
        if (q == nullptr) {
            return record_failure(LP_EINVALID, "precondition", "null handle");
        }
        return emit(order_report_json(q->value, k_max), out_json);
    });
}

lp_status lp_birkhoff_report(int d, const char* checks, long m_max,
                             char** out_json) {
    return guarded([&]() -> lp_status {
        std::string want = checks == nullptr ? "" : checks;
        return emit(birkhoff_report_json(d, want, m_max), out_json);
    });
}

lp_status lp_table1(int d, char** out_json) {
    return guarded(
        [&]() -> lp_status { return emit(table1_json(d), out_json); });
}

int lp_report_agrees(const char* report_json) {
    if (report_json == nullptr) return 0;
    nlohmann::json j =
        nlohmann::json::parse(report_json, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded()) return 0;
    return report_agrees(j) ? 1 : 0;
}

void lp_string_free(char* s) { std::free(s); }

const char* lp_last_error(void) { return g_last_error.c_str(); }

const char* lp_last_error_tag(void) { return g_last_tag.c_str(); }

} // extern "C"
