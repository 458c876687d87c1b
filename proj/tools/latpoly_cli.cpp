// latpoly command-line front end.  Thin plumbing over the C API: parse
// arguments, read the input document, dispatch, print the JSON report.
// Exit codes: 0 success, 1 usage error, 2 invalid input, 3 internal
// inconsistency (a report whose formula and oracle values disagree).

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "latpoly.h"

namespace {

int exit_code_for(lp_status status) {
    switch (status) {
    case LP_OK:
        return 0;
    case LP_EPARSE:
    case LP_EINVALID:
        return 2;
    case LP_EINCONSISTENT:
    case LP_EINTERNAL:
        return 3;
    }
    return 3;
}

void print_error(const std::string& tag, const std::string& message) {
    nlohmann::json err{{"error", tag}, {"message", message}};
    std::cout << err.dump() << "\n";
}

int fail_status(lp_status status) {
    const char* tag = lp_last_error_tag();
    print_error(*tag != '\0' ? tag : "internal", lp_last_error());
    return exit_code_for(status);
}

/// Prints the report and turns a false "agree" flag into exit code 3.
int finish_report(char* report) {
    std::cout << report << "\n";
    int ok = lp_report_agrees(report);
    lp_string_free(report);
    return ok != 0 ? 0 : 3;
}

struct InputOptions {
    std::string file;
    std::string inline_json;

    void attach(CLI::App* cmd) {
        auto* group = cmd->add_option_group("input", "input document");
        group->add_option("--file", file, "path of the input JSON file");
        group->add_option("--json", inline_json, "inline input JSON text");
        group->require_option(1);
    }

    /// Reads the document; returns false after printing an error object.
    bool read(std::string& out) const {
        if (!file.empty()) {
            std::ifstream in(file);
            if (!in) {
                print_error("parse", "cannot read input file: " + file);
                return false;
            }
            std::ostringstream buf;
            buf << in.rdbuf();
            out = buf.str();
            return true;
        }
        out = inline_json;
        return true;
    }
};

int run_polytope_report(const InputOptions& input,
                        lp_status (*report)(const lp_polytope*, char**)) {
    std::string text;
    if (!input.read(text)) return 2;
    lp_polytope* p = nullptr;
    lp_status status = lp_polytope_parse(text.c_str(), &p);
    if (status != LP_OK) return fail_status(status);
    char* out = nullptr;
    status = report(p, &out);
    lp_polytope_free(p);
    if (status != LP_OK) return fail_status(status);
    return finish_report(out);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact lattice-polytope identities and their oracles"};
    app.require_subcommand(1);

    InputOptions ehrhart_input, boundary_input, volume_input, reflexive_input,
        delta_input, fvector_input, order_input;
    long m_max = -1, order_k_max = -1, birkhoff_m_max = -1;
    int table1_d = 0, birkhoff_d = 0;
    std::string birkhoff_checks;

    CLI::App* ehrhart =
        app.add_subcommand("ehrhart", "counts, Ehrhart polynomial, delta");
    ehrhart_input.attach(ehrhart);
    ehrhart->add_option("--m-max", m_max, "largest dilation to scan");

    CLI::App* boundary = app.add_subcommand(
        "boundary-volume", "boundary volume, three formulas vs the scan");
    boundary_input.attach(boundary);

    CLI::App* volume =
        app.add_subcommand("volume", "volume formulas vs the leading coefficient");
    volume_input.attach(volume);

    CLI::App* reflexive = app.add_subcommand(
        "reflexive-check", "reflexivity criteria and their equivalence");
    reflexive_input.attach(reflexive);

    CLI::App* delta =
        app.add_subcommand("delta-vector", "delta-vector and volume bounds");
    delta_input.attach(delta);

    CLI::App* fvector = app.add_subcommand(
        "f-vector", "face counts; closed form and bounds when smooth");
    fvector_input.attach(fvector);

    CLI::App* order = app.add_subcommand(
        "order-polytope", "poset invariants and order-polytope identities");
    order_input.attach(order);
    order->add_option("--m-max", order_k_max, "largest chain length checked");

    CLI::App* birkhoff = app.add_subcommand(
        "birkhoff", "magic-square counts and Birkhoff-polytope identities");
    birkhoff->add_option("--d", birkhoff_d, "matrix order (2..4)")->required();
    birkhoff->add_option("--checks", birkhoff_checks,
                         "comma-separated checks to run (default: all)");
    birkhoff->add_option("--m-max", birkhoff_m_max, "largest line sum listed");

    CLI::App* table1 = app.add_subcommand(
        "table1", "boundary-volume formula coefficients for one dimension");
    table1->add_option("--d", table1_d, "dimension (2..12)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n\n" << app.help() << std::flush;
        return 1;
    }

    if (app.got_subcommand(ehrhart)) {
        std::string text;
        if (!ehrhart_input.read(text)) return 2;
        lp_polytope* p = nullptr;
        lp_status status = lp_polytope_parse(text.c_str(), &p);
        if (status != LP_OK) return fail_status(status);
        char* out = nullptr;
        status = lp_ehrhart_report(p, m_max, &out);
        lp_polytope_free(p);
        if (status != LP_OK) return fail_status(status);
        return finish_report(out);
    }
    if (app.got_subcommand(boundary)) {
        return run_polytope_report(boundary_input, lp_boundary_volume_report);
    }
    if (app.got_subcommand(volume)) {
        return run_polytope_report(volume_input, lp_volume_report);
    }
    if (app.got_subcommand(reflexive)) {
        return run_polytope_report(reflexive_input, lp_reflexive_report);
    }
    if (app.got_subcommand(delta)) {
        return run_polytope_report(delta_input, lp_delta_report);
    }
    if (app.got_subcommand(fvector)) {
        return run_polytope_report(fvector_input, lp_f_vector_report);
    }
    if (app.got_subcommand(order)) {
        std::string text;
        if (!order_input.read(text)) return 2;
        lp_poset* q = nullptr;
        lp_status status = lp_poset_parse(text.c_str(), &q);
        if (status != LP_OK) return fail_status(status);
        char* out = nullptr;
        status = lp_order_report(q, order_k_max, &out);
        lp_poset_free(q);
        if (status != LP_OK) return fail_status(status);
        return finish_report(out);
    }
    if (app.got_subcommand(birkhoff)) {
        char* out = nullptr;
        lp_status status = lp_birkhoff_report(
            birkhoff_d, birkhoff_checks.c_str(), birkhoff_m_max, &out);
        if (status != LP_OK) return fail_status(status);
        return finish_report(out);
    }
    if (app.got_subcommand(table1)) {
        char* out = nullptr;
        lp_status status = lp_table1(table1_d, &out);
        if (status != LP_OK) return fail_status(status);
        return finish_report(out);
    }
    std::cerr << app.help() << std::flush;
    return 1;
}
