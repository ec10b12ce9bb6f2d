#include <doctest.h>

#include "lcslab/report.hpp"

#include <cstdio>
#include <fstream>
#include <regex>

using namespace lcslab;

namespace {

std::vector<std::string> cmd(std::initializer_list<const char*> parts) {
    return {parts.begin(), parts.end()};
}

} // namespace

TEST_CASE("exit codes follow the table") {
    CHECK(run_command(cmd({"lcs-verify", "--catalog", "d4p_0", "--omega", "e12 - e34", "--theta",
                           "e4"}))
              .exit_code == 0);
    // wrong Lee form: refuted
    CHECK(run_command(cmd({"lcs-verify", "--catalog", "h3xR", "--omega", "e12 - e34", "--theta",
                           "e1"}))
              .exit_code == 1);
    // degenerate solution space sampling: inconclusive
    CHECK(run_command(cmd({"lcs-search", "--catalog", "ex6", "--theta", "e5", "--budget", "40"}))
              .exit_code == 2);
    // usage errors
    CHECK(run_command(cmd({"frobnicate"})).exit_code == 64);
    CHECK(run_command(cmd({"profile", "--bogus", "x"})).exit_code == 64);
    CHECK(run_command(cmd({"profile"})).exit_code == 64); // no input source
    CHECK(run_command(cmd({"lattice-check", "--family", "g1", "--k", "1", "--t0", "pi/3"}))
              .exit_code == 64);
    CHECK(run_command(cmd({"lcs-search", "--catalog", "h3xR", "--theta", "e4", "--seed", "abc"}))
              .exit_code == 64);
    CHECK(run_command(cmd({"lattice-check", "--family", "g2", "--k", "x"})).exit_code == 64);
    // input data errors
    CHECK(run_command(cmd({"profile", "--algebra", "(((("})).exit_code == 65);
    CHECK(run_command(cmd({"profile", "--catalog", "unknown_name"})).exit_code == 65);
    CHECK(run_command(cmd({"profile", "--algebra", "(12,13,0)"})).exit_code == 65); // Jacobi
    CHECK(run_command(cmd({"contact-verify", "--catalog", "h3xR", "--eta", "e1"})).exit_code ==
          65); // even dimension
}

TEST_CASE("validate treats a Jacobi violation as a refuted claim") {
    auto r = run_command(cmd({"validate", "--algebra", "(12,13,0)"}));
    CHECK(r.exit_code == 1);
    CHECK(r.report.status == "refuted");
    CHECK(r.report.certificates.contains("jacobi_defects"));
    CHECK(run_command(cmd({"validate", "--algebra", "(0,0,-12)"})).exit_code == 0);
}

TEST_CASE("reports are reproducible byte for byte") {
    for (const auto& args : {cmd({"lcs-verify", "--catalog", "d4p_0", "--omega", "e12 - e34",
                                  "--theta", "e4", "--json"}),
                             cmd({"cohomology", "--catalog", "r3p0xR", "--theta", "e4"}),
                             cmd({"lcs-search", "--catalog", "d4p_0", "--theta", "e4", "--seed",
                                  "7"}),
                             cmd({"contact-search", "--catalog", "n1", "--seed", "3"}),
                             cmd({"lattice-check", "--family", "g2", "--k", "2"}),
                             cmd({"catalog", "show", "kf6", "--param", "a=1", "--param", "b=1"})}) {
        auto a = run_command(args);
        auto b = run_command(args);
        CHECK(a.exit_code == b.exit_code);
        CHECK(a.report.to_json().dump() == b.report.to_json().dump());
    }
}

namespace {

// Citation and commentary fields carry prose (section numbers and the
// like); every other leaf must be an exact value.
bool is_prose_key(const std::string& key) {
    return key == "reference" || key == "description" || key == "remark" ||
           key == "message" || key == "name" || key == "command";
}

void audit_no_floats(const nlohmann::json& j, const std::string& key) {
    static const std::regex decimal_point(R"([0-9]\.[0-9])");
    static const std::regex exponent(R"([0-9][eE][+-][0-9])");
    CHECK(!j.is_number_float());
    if (j.is_string() && !is_prose_key(key)) {
        const std::string s = j.get<std::string>();
        CHECK(!std::regex_search(s, decimal_point));
        CHECK(!std::regex_search(s, exponent));
    } else if (j.is_object()) {
        for (const auto& [k, v] : j.items()) audit_no_floats(v, k);
    } else if (j.is_array()) {
        for (const auto& v : j) audit_no_floats(v, key);
    }
}

} // namespace

TEST_CASE("no floating-point literal ever appears in a report") {
    for (const auto& args : {cmd({"lcs-verify", "--catalog", "d4p_0", "--omega", "e12 - e34",
                                  "--theta", "e4"}),
                             cmd({"lattice-check", "--family", "g2", "--k", "3"}),
                             cmd({"lattice-check", "--family", "g1", "--k", "2", "--t0", "pi/2"}),
                             cmd({"derivations", "--catalog", "h5"}),
                             cmd({"catalog", "show", "g1", "--param", "b=1/2"}),
                             cmd({"cohomology", "--catalog", "d4", "--theta", "e4"})}) {
        auto r = run_command(args);
        audit_no_floats(r.report.to_json(), "");
    }
}

TEST_CASE("lattice-check reports exact pi-power certificates") {
    auto r = run_command(cmd({"lattice-check", "--family", "g2", "--k", "1"}));
    CHECK(r.exit_code == 0);
    CHECK(r.report.status == "verified");
    std::string dump = r.report.to_json().dump();
    CHECK(dump.find("2/pi") != std::string::npos); // the psi-level basis entry
    CHECK(r.report.results["preserved"] == true);
}

TEST_CASE("kind reports NotApplicable for symplectic pairs") {
    auto r = run_command(cmd({"kind", "--algebra", "(0,0,0,0)", "--omega", "e12 + e34", "--theta",
                              "0"}));
    CHECK(r.exit_code == 0);
    CHECK(r.report.results["kind"] == "NotApplicable");
    auto r2 = run_command(cmd({"kind", "--catalog", "g2", "--param", "b=1", "--omega",
                               "-e01 - e23 - e45", "--theta", "e0"}));
    CHECK(r2.exit_code == 0);
    CHECK(r2.report.results["kind"] == "FirstKind");
}

TEST_CASE("file input and matrix-from-file flags") {
    {
        auto r = run_command(cmd({"profile", "--catalog", "d4p_0", "--json"}));
        REQUIRE(r.exit_code == 0);
    }
    // write an algebra to a temp file through the JSON schema and read it back
    const char* path = "test_algebra_tmp.json";
    {
        std::ofstream out(path);
        out << R"({"dim": 4, "basis_offset": 1, "name": "file_case",)"
            << R"( "brackets": [{"x": 1, "y": 2, "out": {"3": 1}}]})";
    }
    auto r = run_command(cmd({"cohomology", "--file", path}));
    CHECK(r.exit_code == 0);
    CHECK(r.report.results["dims"] == nlohmann::json({1, 3, 4, 3, 1}));
    std::remove(path);
    auto missing = run_command(cmd({"profile", "--file", "does_not_exist.json"}));
    CHECK(missing.exit_code == 65);

    // @file form of the matrix flag
    const char* mat_path = "test_matrix_tmp.json";
    {
        std::ofstream out(mat_path);
        out << R"([[0,0,0,0,0],[0,0,0,-1,0],[0,0,0,0,0],[0,1,0,0,0],[0,0,1,0,0]])";
    }
    auto ext = run_command(cmd({"extend-contact", "--catalog", "h5", "--eta", "e1",
                                "--derivation", "@test_matrix_tmp.json"}));
    CHECK(ext.exit_code == 0);
    CHECK(ext.report.results["omega"] == "-e01 - e24 - e35");
    std::remove(mat_path);
}

TEST_CASE("extension subcommands run end to end") {
    auto r = run_command(cmd({"extend-contact", "--catalog", "h5", "--eta", "e1", "--derivation",
                              R"([[0,0,0,0,0],[0,0,0,-1,0],[0,0,0,0,0],[0,1,0,0,0],[0,0,1,0,0]])"}));
    CHECK(r.exit_code == 0);
    CHECK(r.report.results["omega"] == "-e01 - e24 - e35");
    CHECK(r.report.results["profile"]["type_I"] == true);

    auto d = run_command(cmd({"double-extend", "--catalog", "r3p0xR", "--beta", "-e14 + e23",
                              "--derivation",
                              R"([[0,0,0,0],[0,0,-1,0],[0,1,0,0],[1,0,0,0]])"}));
    CHECK(d.exit_code == 0);
    CHECK(d.report.results["profile"]["type_I"] == true);
    CHECK(d.report.results["kind"] == "FirstKind");

    // a non-derivation input is a data error
    auto bad = run_command(cmd({"extend-contact", "--catalog", "h5", "--eta", "e1", "--derivation",
                                R"([[0,0,0,0,0],[1,0,0,0,0],[0,0,0,0,0],[0,0,0,0,0],[0,0,0,0,0]])"}));
    CHECK(bad.exit_code == 65);
}
