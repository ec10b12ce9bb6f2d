#pragma once

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace lcslab {

/// Machine-readable result of one CLI invocation. Every numeric leaf is an
/// exact string (rational or rational * pi^n) or a plain integer count;
/// floating point never appears.
struct Report {
    std::vector<std::string> command; // echo of the invocation
    std::string status;               // verified | refuted | inconclusive | error
    std::string message;              // one-line human remark
    std::uint64_t seed = 0;
    nlohmann::json input = nlohmann::json::object();
    nlohmann::json results = nlohmann::json::object();
    nlohmann::json certificates = nlohmann::json::object();

    nlohmann::json to_json() const;
    std::string text() const;
};

struct RunResult {
    Report report;
    int exit_code; // 0 verified, 1 refuted, 2 inconclusive, 64 usage, 65 input data
};

/// Executes one subcommand with its flags (no program name in `args`).
RunResult run_command(const std::vector<std::string>& args);

} // namespace lcslab
