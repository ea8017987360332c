#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pcx/serialize.hpp"

namespace pcx {

struct NamedTransform {
    std::string name;
    RationalMatrix matrix;
    ChartPtr target;
};

struct NamedPoly {
    std::string name;
    Polynomial poly;
};

struct NamedForm {
    std::string name;
    RationalMatrix matrix;
};

// One system: a chart, its structure(s), the Hamiltonian, and the named data
// the declared checks run against. Loading validates the structure and every
// integral, so a Scenario in hand is already self-consistent.
struct Scenario {
    std::string name;
    ChartPtr chart;
    Bivector structure;
    std::optional<Bivector> structure2;
    Polynomial hamiltonian;
    std::vector<NamedTransform> transforms;
    std::vector<NamedPoly> integrals;
    std::vector<NamedForm> forms;
    std::map<std::string, Rational> params;
    Json checks = Json::array();
    Json expected = Json::object();

    Scenario() : structure(nullptr) {}

    const NamedTransform& transform(const std::string& n) const; // bad_scenario if absent
    const Polynomial& integral(const std::string& n) const;      // bad_scenario if absent
    // "H" names the Hamiltonian, anything else an integral.
    const Polynomial& named_poly(const std::string& n) const;
    const RationalMatrix& form(const std::string& n) const;
    Rational param(const std::string& n) const;
};

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail; // empty on pass, exact diff on failure
};

struct ScenarioReport {
    std::string scenario;
    std::vector<CheckResult> checks;
    bool all_passed = true;
};

// Directory holding the builtin scenario files: PCX_SCENARIO_DIR when set,
// else the path compiled in at build time.
std::string scenario_dir();

// Sorted scenario names (file stems) found in scenario_dir().
std::vector<std::string> list_scenarios();

// Resolves a name, "name.json", or explicit path to a readable file.
std::string find_scenario(const std::string& name_or_path);

Scenario load_scenario(const std::string& path);

ScenarioReport run_scenario(const Scenario& s);

Json scenario_report_to_json(const ScenarioReport& r);

} // namespace pcx
