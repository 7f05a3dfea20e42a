#include "qckit/scenario_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace qckit::io {

namespace {

using nlohmann::json;

constexpr const char* kFields[] = {"r1", "r2", "r3", "c1", "c2", "c3", "t1",
                                   "t2", "t3", "h1", "m",  "w",  "n11", "n12"};

double field_get(const dp::ScenarioParams& p, const std::string& name) {
    if (name == "r1") return p.r1;
    if (name == "r2") return p.r2;
    if (name == "r3") return p.r3;
    if (name == "c1") return p.c1;
    if (name == "c2") return p.c2;
    if (name == "c3") return p.c3;
    if (name == "t1") return p.t1;
    if (name == "t2") return p.t2;
    if (name == "t3") return p.t3;
    if (name == "h1") return p.h1;
    if (name == "m") return p.m;
    if (name == "w") return p.w;
    if (name == "n11") return p.n11;
    return p.n12;
}

double& field_ref(dp::ScenarioParams& p, const std::string& name) {
    if (name == "r1") return p.r1;
    if (name == "r2") return p.r2;
    if (name == "r3") return p.r3;
    if (name == "c1") return p.c1;
    if (name == "c2") return p.c2;
    if (name == "c3") return p.c3;
    if (name == "t1") return p.t1;
    if (name == "t2") return p.t2;
    if (name == "t3") return p.t3;
    if (name == "h1") return p.h1;
    if (name == "m") return p.m;
    if (name == "w") return p.w;
    if (name == "n11") return p.n11;
    return p.n12;
}

NamedScenario parse_one(const json& entry, std::size_t index) {
    std::string where = "scenario at index " + std::to_string(index);
    if (!entry.is_object()) {
        throw scenario_error(where + ": expected an object");
    }
    NamedScenario out;
    if (!entry.contains("name") || !entry["name"].is_string()) {
        throw scenario_error(where + ": missing string field 'name'");
    }
    out.name = entry["name"].get<std::string>();
    if (out.name.empty()) {
        throw scenario_error(where + ": field 'name' must be non-empty");
    }
    for (const char* f : kFields) {
        if (!entry.contains(f) || !entry[f].is_number()) {
            throw scenario_error("scenario '" + out.name + "': missing numeric field '" +
                                 f + "'");
        }
        field_ref(out.params, f) = entry[f].get<double>();
    }
    try {
        out.params.validate();
    } catch (const std::invalid_argument& e) {
        throw scenario_error("scenario '" + out.name + "': " + e.what());
    }
    return out;
}

}  // namespace

ScenarioFile parse_scenarios(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw scenario_error(std::string("scenario file: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("scenarios") || !doc["scenarios"].is_array()) {
        throw scenario_error("scenario file: expected a top-level 'scenarios' array");
    }
    ScenarioFile file;
    std::set<std::string> seen;
    const json& arr = doc["scenarios"];
    for (std::size_t i = 0; i < arr.size(); ++i) {
        NamedScenario sc = parse_one(arr[i], i);
        if (!seen.insert(sc.name).second) {
            throw scenario_error("scenario '" + sc.name + "': duplicate name");
        }
        file.scenarios.push_back(std::move(sc));
    }
    return file;
}

ScenarioFile load_scenarios(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw io_error("cannot open scenario file: " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenarios(buf.str());
}

std::string serialize_scenarios(const ScenarioFile& file) {
    json arr = json::array();
    for (const NamedScenario& sc : file.scenarios) {
        json entry;
        entry["name"] = sc.name;
        for (const char* f : kFields) {
            entry[f] = field_get(sc.params, f);
        }
        arr.push_back(std::move(entry));
    }
    json doc;
    doc["scenarios"] = std::move(arr);
    return doc.dump(2) + "\n";
}

}  // namespace qckit::io
