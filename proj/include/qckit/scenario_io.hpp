#pragma once

// ----------------------------------------------------------------------------
// Scenario file carrier: a JSON document with a top-level "scenarios" array,
// each entry holding a unique non-empty "name" plus the 14 numeric model
// fields (r1,r2,r3,c1,c2,c3,t1,t2,t3,h1,m,w,n11,n12). No field has a
// default; economics must be stated. Serialization round-trips every double
// bit for bit.
// ----------------------------------------------------------------------------

#include <stdexcept>
#include <string>
#include <vector>

#include "qckit/decision_dp.hpp"

namespace qckit::io {

struct NamedScenario {
    std::string name;
    dp::ScenarioParams params;
};

struct ScenarioFile {
    std::vector<NamedScenario> scenarios;
};

// Parse or validation failure; the message names the scenario and field (or
// the byte position for syntax errors).
class scenario_error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Read failure (missing/unreadable file).
class io_error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

ScenarioFile parse_scenarios(const std::string& json_text);
ScenarioFile load_scenarios(const std::string& path);

// Inverse of parse_scenarios; parse(serialize(f)) reproduces f exactly.
std::string serialize_scenarios(const ScenarioFile& file);

}  // namespace qckit::io
