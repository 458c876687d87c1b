#pragma once
/// @file json_io.hpp
/// JSON input schemas and report builders.  Input: polytopes as
/// {"dim": d, "vertices": [[int,...],...]} and posets as
/// {"size": d, "covers": [[lower, upper],...]} (0-based, any acyclic
/// relation list).  Output: deterministic reports with every computed
/// integer rendered as a decimal string and every rational as "p/q",
/// paired with its oracle value and an "agree" flag.

#include <string>

#include <json.hpp>

#include "core/order.hpp"
#include "core/polytope.hpp"

namespace latpoly {

LatticePolytope parse_polytope_json(const std::string& text);
Poset parse_poset_json(const std::string& text);

/// The short taxonomy tag used in {"error": tag, "message": ...} objects.
const char* error_tag(ErrorCode code);
nlohmann::json error_json(ErrorCode code, const std::string& message);

/// Count/coefficient/delta report; m_max < 0 selects the default dim+1.
nlohmann::json ehrhart_report_json(const LatticePolytope& p, long m_max);

/// Boundary volume three ways plus the Ehrhart oracle 2 c_{d-1}.
nlohmann::json boundary_volume_report_json(const LatticePolytope& p);

/// Volume via the general identity, the parity-split forms, and c_d.
nlohmann::json volume_report_json(const LatticePolytope& p);

/// Full reflexivity certificate.
nlohmann::json reflexivity_report_json(const LatticePolytope& p);

/// delta-vector, palindromicity, normalized volume cross-check.
nlohmann::json delta_report_json(const LatticePolytope& p);

/// Face counts; for smooth polytopes also the closed-form f-vector and
/// the inequality slacks.
nlohmann::json f_vector_report_json(const LatticePolytope& p);

/// Poset invariants, the order polytope, and all identity checks;
/// k_max < 0 selects the default size+2.
nlohmann::json order_report_json(const Poset& q, long k_max);

/// Birkhoff checks for a comma-separated subset of
/// {reciprocity,reflexive,volume,identity,bound}; empty = all applicable
/// to the given d.  H_d/P_d values are listed up to m_max (< 0 = default).
nlohmann::json birkhoff_report_json(int d, const std::string& checks,
                                    long m_max);

nlohmann::json table1_json(int d);

/// True when every "agree"/"all_hold" flag in the report (at any depth)
/// is true; a false flag is the exit-3 signal for the CLI.
bool report_agrees(const nlohmann::json& report);

} // namespace latpoly
