#pragma once

#include <functional>
#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "qaffine/workspace.hpp"

namespace qaffine::scenarios {

// A named reproduction of one worked reference example, keyed by stable
// anchor ids.  Payloads are deterministic (no timestamps).
struct Scenario {
    std::string name;
    std::string description;
    std::vector<std::string> anchors;
    std::function<nlohmann::json(const Config&)> run;  // payload with "pass"
};

const std::vector<Scenario>& registry();

struct RunOutcome {
    std::string name;
    bool pass = false;
    nlohmann::json payload;
};

RunOutcome run_scenario(const std::string& name, const Config& cfg);
std::vector<RunOutcome> run_all(const Config& cfg);

}  // namespace qaffine::scenarios
