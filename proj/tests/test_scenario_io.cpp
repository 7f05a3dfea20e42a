#include <doctest.h>

#include <random>
#include <string>

#include "qckit/scenario_io.hpp"

using namespace qckit::io;

namespace {

const char* kWorkedJson = R"({
  "scenarios": [
    { "name": "case1", "r1": 0.1, "r2": 0.1, "r3": 0.1,
      "c1": 4, "c2": 18, "c3": 6, "t1": 2, "t2": 3, "t3": 3,
      "h1": 5, "m": 6, "w": 56, "n11": 100, "n12": 100 }
  ]
})";

}  // namespace

TEST_CASE("parse_scenarios reads a well-formed file") {
    ScenarioFile file = parse_scenarios(kWorkedJson);
    REQUIRE(file.scenarios.size() == 1);
    CHECK(file.scenarios[0].name == "case1");
    const auto& p = file.scenarios[0].params;
    CHECK(p.r1 == 0.1);
    CHECK(p.c2 == 18.0);
    CHECK(p.w == 56.0);
    CHECK(p.n12 == 100.0);
}

TEST_CASE("serialize/parse round-trips every field bit for bit") {
    std::mt19937_64 rng(997);
    std::uniform_real_distribution<double> rate(0.0, 1.0 - 1e-9);
    std::uniform_real_distribution<double> money(0.0, 1e6);
    ScenarioFile file;
    for (int i = 0; i < 25; ++i) {
        NamedScenario sc;
        sc.name = "s" + std::to_string(i);
        sc.params.r1 = rate(rng);
        sc.params.r2 = rate(rng);
        sc.params.r3 = rate(rng);
        sc.params.c1 = money(rng);
        sc.params.c2 = money(rng);
        sc.params.c3 = money(rng);
        sc.params.t1 = money(rng);
        sc.params.t2 = money(rng);
        sc.params.t3 = money(rng);
        sc.params.h1 = money(rng);
        sc.params.m = money(rng);
        sc.params.w = money(rng);
        sc.params.n11 = money(rng) + 1e-12;
        sc.params.n12 = money(rng) + 1e-12;
        file.scenarios.push_back(sc);
    }

    ScenarioFile back = parse_scenarios(serialize_scenarios(file));
    REQUIRE(back.scenarios.size() == file.scenarios.size());
    for (std::size_t i = 0; i < file.scenarios.size(); ++i) {
        const auto& a = file.scenarios[i].params;
        const auto& b = back.scenarios[i].params;
        CHECK(file.scenarios[i].name == back.scenarios[i].name);
        CHECK(a.r1 == b.r1);
        CHECK(a.r2 == b.r2);
        CHECK(a.r3 == b.r3);
        CHECK(a.c1 == b.c1);
        CHECK(a.c2 == b.c2);
        CHECK(a.c3 == b.c3);
        CHECK(a.t1 == b.t1);
        CHECK(a.t2 == b.t2);
        CHECK(a.t3 == b.t3);
        CHECK(a.h1 == b.h1);
        CHECK(a.m == b.m);
        CHECK(a.w == b.w);
        CHECK(a.n11 == b.n11);
        CHECK(a.n12 == b.n12);
    }

    // Serialization is a fixed point after one round.
    CHECK(serialize_scenarios(back) == serialize_scenarios(file));
}

TEST_CASE("parse_scenarios diagnoses structural problems") {
    CHECK_THROWS_AS(parse_scenarios("not json"), scenario_error);
    CHECK_THROWS_AS(parse_scenarios("{}"), scenario_error);
    CHECK_THROWS_AS(parse_scenarios(R"({"scenarios": 3})"), scenario_error);
    CHECK_THROWS_WITH_AS(parse_scenarios(R"({"scenarios": [ {"r1": 0.1} ]})"),
                         doctest::Contains("name"), scenario_error);
}

TEST_CASE("parse_scenarios names the missing field and scenario") {
    std::string text = R"({
      "scenarios": [
        { "name": "incomplete", "r1": 0.1, "r2": 0.1, "r3": 0.1,
          "c1": 4, "c2": 18, "c3": 6, "t1": 2, "t2": 3, "t3": 3,
          "h1": 5, "m": 6, "w": 56, "n11": 100 }
      ]
    })";
    CHECK_THROWS_WITH_AS(parse_scenarios(text), doctest::Contains("n12"),
                         scenario_error);
    CHECK_THROWS_WITH_AS(parse_scenarios(text), doctest::Contains("incomplete"),
                         scenario_error);
}

TEST_CASE("parse_scenarios names the out-of-range field") {
    std::string text = R"({
      "scenarios": [
        { "name": "bad", "r1": 1.0, "r2": 0.1, "r3": 0.1,
          "c1": 4, "c2": 18, "c3": 6, "t1": 2, "t2": 3, "t3": 3,
          "h1": 5, "m": 6, "w": 56, "n11": 100, "n12": 100 }
      ]
    })";
    CHECK_THROWS_WITH_AS(parse_scenarios(text), doctest::Contains("r1"), scenario_error);
    CHECK_THROWS_WITH_AS(parse_scenarios(text), doctest::Contains("bad"), scenario_error);
}

TEST_CASE("parse_scenarios rejects duplicate and empty names") {
    ScenarioFile one = parse_scenarios(kWorkedJson);
    ScenarioFile two;
    two.scenarios = {one.scenarios[0], one.scenarios[0]};
    CHECK_THROWS_WITH_AS(parse_scenarios(serialize_scenarios(two)),
                         doctest::Contains("duplicate"), scenario_error);

    two.scenarios[1].name = "";
    CHECK_THROWS_WITH_AS(parse_scenarios(serialize_scenarios(two)),
                         doctest::Contains("non-empty"), scenario_error);
}

TEST_CASE("load_scenarios reports unreadable files") {
    CHECK_THROWS_AS(load_scenarios("/nonexistent/path/scenarios.json"), io_error);
}
