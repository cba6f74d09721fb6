#pragma once

#include "corkcalc/diagram.hpp"

#include <string>
#include <utility>
#include <vector>

namespace corkcalc {

/* One verified claim inside a scenario: a named quantity, what it should be,
 * and what it came out as. */
struct ScenarioStep {
    std::string name;
    std::string expected;
    std::string actual;
    bool pass = false;
};

struct ScenarioReport {
    std::string scenario;
    std::vector<std::pair<std::string, std::string>> inputs;  // fixture hashes, ranges
    std::vector<ScenarioStep> steps;
    bool pass = false;          // every step passed
    double wall_seconds = 0.0;  // measured here, reported in text output only
};

/* Registered end-to-end checks, in fixed order. */
std::vector<std::string> scenario_ids();
bool scenario_known(const std::string& id);
ScenarioReport run_scenario(const std::string& id);  // Error("UnknownScenario")

/* Deterministic serializations: the JSON form is byte-identical across runs
 * (wall time is deliberately omitted); the text form is for terminals. */
std::string scenario_report_json(const ScenarioReport& r);
std::string scenario_report_text(const ScenarioReport& r);

/* Fixture files live in one directory: the CORKCALC_FIXTURES environment
 * variable if set, else the compiled-in default. */
std::string fixtures_dir();
std::string fixture_path(const std::string& name);
std::string load_fixture_text(const std::string& name);   // Error("FixtureMissing")
FramedLinkDiagram load_fixture_diagram(const std::string& name);

}  // namespace corkcalc
