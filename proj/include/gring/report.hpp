#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

namespace gring {

/// Structured result of one command or suite run. Serializes to the fixed
/// schema {version, command, instance, verdict, witnesses, seed, elapsed_ms},
/// version pinned at "1". elapsed_ms stays 0 unless timing was requested, so
/// default reports are byte-identical for identical (input, seed).
struct Report {
    std::string command;
    std::string instance;
    std::string verdict;
    nlohmann::json witnesses = nlohmann::json::object();
    std::uint64_t seed = 0;
    long long elapsed_ms = 0;

    nlohmann::json to_json() const;
    std::string json_text() const;  // 2-space indent, trailing newline
    std::string text() const;       // human-readable summary
};

}  // namespace gring
