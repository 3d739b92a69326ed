#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gring/report.hpp"
#include "gring/session.hpp"

namespace gring {

struct CliOptions {
    std::optional<std::uint64_t> seed;
    std::optional<unsigned> budget;
    unsigned trials = 0;  // 0 = suite default
    bool timing = false;
};

struct CommandOutcome {
    Report report;
    int exit_code = 0;  // 0 computed, 1 failed check / domain error, 2 usage
};

/// Runs one command ("is-unit g", "suite mccoy", ...) against a session.
/// Domain errors become error verdicts with exit code 1; usage problems give
/// exit code 2.
CommandOutcome run_command(const std::vector<std::string>& args, const SessionDeclaration& session,
                           const CliOptions& options);

/// Full CLI: global flags (--session, --json, --seed, --trials, --budget,
/// --timing), then the command tokens. Used by the binary and by tests.
int run_cli(const std::vector<std::string>& args, std::string* captured_output = nullptr);

}  // namespace gring
