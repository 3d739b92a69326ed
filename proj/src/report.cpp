#include "gring/report.hpp"

namespace gring {

nlohmann::json Report::to_json() const {
    nlohmann::json j;
    j["version"] = "1";
    j["command"] = command;
    j["instance"] = instance;
    j["verdict"] = verdict;
    j["witnesses"] = witnesses;
    j["seed"] = seed;
    j["elapsed_ms"] = elapsed_ms;
    return j;
}

std::string Report::json_text() const { return to_json().dump(2) + "\n"; }

std::string Report::text() const {
    std::string s = command + ": " + verdict;
    if (!instance.empty()) s += "\n  instance: " + instance;
    if (!witnesses.empty()) s += "\n  witnesses: " + witnesses.dump();
    return s + "\n";
}

}  // namespace gring
