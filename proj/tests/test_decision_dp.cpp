#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "qckit/decision_dp.hpp"

using namespace qckit::dp;

namespace {

// The worked scenario used throughout: 10% defect rates everywhere, parts at
// 4 and 18, assembly 6, tests 2/3/3, dismantling 5, replacement loss 6,
// market price 56, batches of 100.
ScenarioParams worked_scenario() {
    ScenarioParams p;
    p.r1 = 0.1;
    p.r2 = 0.1;
    p.r3 = 0.1;
    p.c1 = 4;
    p.c2 = 18;
    p.c3 = 6;
    p.t1 = 2;
    p.t2 = 3;
    p.t3 = 3;
    p.h1 = 5;
    p.m = 6;
    p.w = 56;
    p.n11 = 100;
    p.n12 = 100;
    return p;
}

ScenarioParams random_scenario(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> rate(0.0, 0.5);
    std::uniform_real_distribution<double> money(0.0, 100.0);
    std::uniform_real_distribution<double> units(1.0, 1000.0);
    ScenarioParams p;
    p.r1 = rate(rng);
    p.r2 = rate(rng);
    p.r3 = rate(rng);
    p.c1 = money(rng);
    p.c2 = money(rng);
    p.c3 = money(rng);
    p.t1 = money(rng);
    p.t2 = money(rng);
    p.t3 = money(rng);
    p.h1 = money(rng);
    p.m = money(rng);
    p.w = money(rng);
    p.n11 = units(rng);
    p.n12 = units(rng);
    return p;
}

}  // namespace

TEST_CASE("ScenarioParams validation names the offending field") {
    ScenarioParams p = worked_scenario();
    CHECK_NOTHROW(p.validate());

    p.r1 = 1.0;  // (1-r)^1 = 0 collapses the flow; out of the model's domain
    CHECK_THROWS_WITH_AS(p.validate(), doctest::Contains("r1"), std::invalid_argument);

    p = worked_scenario();
    p.c2 = -1.0;
    CHECK_THROWS_WITH_AS(p.validate(), doctest::Contains("c2"), std::invalid_argument);

    p = worked_scenario();
    p.n11 = 0.0;
    CHECK_THROWS_WITH_AS(p.validate(), doctest::Contains("n11"), std::invalid_argument);

    p = worked_scenario();
    p.r3 = std::nan("");
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
}

TEST_CASE("DecisionVector index order is lexicographic order") {
    for (int idx = 0; idx < 16; ++idx) {
        DecisionVector d = DecisionVector::from_index(idx);
        CHECK(d.index() == idx);
        if (idx > 0) {
            DecisionVector prev = DecisionVector::from_index(idx - 1);
            bool lex_greater = std::tie(d.s1, d.s2, d.s3, d.s4) >
                               std::tie(prev.s1, prev.s2, prev.s3, prev.s4);
            CHECK(lex_greater);
        }
    }
}

TEST_CASE("stage transitions") {
    ScenarioParams p = worked_scenario();
    CHECK(transition_stage1(p, 1, 1) == doctest::Approx(90.0).epsilon(1e-15));
    CHECK(transition_stage1(p, 0, 0) == 100.0);

    ScenarioParams q = worked_scenario();
    q.n12 = 80;
    q.r2 = 0.0;
    CHECK(transition_stage1(q, 1, 1) == doctest::Approx(80.0).epsilon(1e-15));

    CHECK(transition_stage2(p, 100.0, 0, 0) == doctest::Approx(72.9).epsilon(1e-14));
    ScenarioParams z = worked_scenario();
    z.r1 = z.r2 = z.r3 = 0.0;
    CHECK(transition_stage2(z, 90.0, 0, 1) == 90.0);
    CHECK(transition_stage2(p, 90.0, 1, 1) == doctest::Approx(81.0).epsilon(1e-14));
}

TEST_CASE("stage values on the worked scenario") {
    ScenarioParams p = worked_scenario();

    // No dismantling, no value.
    CHECK(stage3_value(p, 100.0, 72.9, {0, 0, 0, 0}) == 0.0);
    CHECK(stage3_value(p, 100.0, 72.9, {1, 1, 1, 0}) == 0.0);
    // 27.1 rejects salvaged at (c1+c2) - h1 = 17 each.
    CHECK(stage3_value(p, 100.0, 72.9, {0, 0, 0, 1}) ==
          doctest::Approx(460.7).epsilon(1e-12));
    // Nothing to dismantle.
    CHECK(stage3_value(p, 90.0, 90.0, {0, 0, 0, 1}) == 0.0);

    CHECK(stage2_value(p, 100.0, {0, 0, 0, 1}, 460.7) ==
          doctest::Approx(5400.7).epsilon(1e-12));
    CHECK(stage2_value(p, 0.0, {0, 0, 0, 1}, 460.7) == 460.7);
    CHECK(stage2_value(p, 100.0, {0, 0, 1, 0}, 0.0) ==
          doctest::Approx(4140.0).epsilon(1e-12));

    CHECK(stage1_value(p, {0, 0, 0, 1}, 5400.7) ==
          doctest::Approx(3080.7).epsilon(1e-12));

    ScenarioParams free_parts = worked_scenario();
    free_parts.c1 = free_parts.c2 = 0;
    free_parts.t1 = free_parts.t2 = 0;
    CHECK(stage1_value(free_parts, {1, 1, 0, 0}, 0.0) == 0.0);

    ScenarioParams perfect = worked_scenario();
    perfect.r1 = perfect.r2 = 0;
    CHECK(stage1_value(perfect, {0, 0, 0, 0}, 0.0) ==
          doctest::Approx(-2200.0).epsilon(1e-15));
}

TEST_CASE("total_value composes the stage chain") {
    ScenarioParams p = worked_scenario();
    CHECK(total_value(p, {0, 0, 0, 1}) == doctest::Approx(3080.7).epsilon(1e-12));
    CHECK(total_value(p, {0, 0, 0, 0}) == doctest::Approx(2620.0).epsilon(1e-12));

    ScenarioParams null_economy;
    null_economy.n11 = null_economy.n12 = 100;
    for (int idx = 0; idx < 16; ++idx) {
        CHECK(total_value(null_economy, DecisionVector::from_index(idx)) == 0.0);
    }
}

TEST_CASE("solve_enumeration finds the worked optimum and full table") {
    SolveResult res = solve_enumeration(worked_scenario());
    CHECK(res.best_decision == DecisionVector{0, 0, 0, 1});
    CHECK(res.best_value == doctest::Approx(3080.7).epsilon(1e-12));

    // Independently recomputed 16-row table.
    const double expected[16] = {2620.0,  3080.7,  1940.0, 2156.8, 1886.0, 2101.46,
                                 1226.0,  1302.95, 1986.0, 2216.85, 1326.0, 1418.34,
                                 1746.0,  1843.2,  1026.0, 1050.3};
    double table_max = -1e300;
    for (int idx = 0; idx < 16; ++idx) {
        CHECK(res.value_table[idx].decision == DecisionVector::from_index(idx));
        CHECK(res.value_table[idx].value ==
              doctest::Approx(expected[idx]).epsilon(1e-12));
        table_max = std::max(table_max, res.value_table[idx].value);
    }
    CHECK(res.best_value == table_max);
}

TEST_CASE("tie-break prefers the lexicographically smallest decision") {
    ScenarioParams null_economy;
    null_economy.n11 = null_economy.n12 = 50;
    SolveResult res = solve_enumeration(null_economy);  // all 16 values are 0
    CHECK(res.best_decision == DecisionVector{0, 0, 0, 0});
    CHECK(solve_backward(null_economy).best_decision == DecisionVector{0, 0, 0, 0});
}

TEST_CASE("solve_backward equals solve_enumeration exactly") {
    SolveResult a = solve_backward(worked_scenario());
    SolveResult b = solve_enumeration(worked_scenario());
    CHECK(a.best_value == b.best_value);
    CHECK(a.best_decision == b.best_decision);

    std::mt19937_64 rng(101);
    for (int i = 0; i < 1000; ++i) {
        ScenarioParams p = random_scenario(rng);
        SolveResult back = solve_backward(p);
        SolveResult enumd = solve_enumeration(p);
        REQUIRE(back.best_value == enumd.best_value);
        REQUIRE(back.best_decision == enumd.best_decision);
        for (int idx = 0; idx < 16; ++idx) {
            REQUIRE(back.value_table[idx].value == enumd.value_table[idx].value);
        }
    }
}

TEST_CASE("flows are monotone: 0 <= n3 <= n2 <= min(n11, n12)") {
    std::mt19937_64 rng(103);
    for (int i = 0; i < 200; ++i) {
        ScenarioParams p = random_scenario(rng);
        for (int idx = 0; idx < 16; ++idx) {
            StageState st = stage_state(p, DecisionVector::from_index(idx));
            CHECK(st.n3 >= 0.0);
            CHECK(st.n3 <= st.n2);
            CHECK(st.n2 <= std::min(p.n11, p.n12));
        }
    }
}

TEST_CASE("scaling both part counts scales every value linearly") {
    std::mt19937_64 rng(107);
    for (int i = 0; i < 100; ++i) {
        ScenarioParams p = random_scenario(rng);
        SolveResult base = solve_backward(p);
        for (double lambda : {0.5, 2.0, 10.0}) {
            ScenarioParams q = p;
            q.n11 *= lambda;
            q.n12 *= lambda;
            SolveResult scaled = solve_backward(q);
            CHECK(scaled.best_decision == base.best_decision);
            CHECK(scaled.best_value ==
                  doctest::Approx(base.best_value * lambda).epsilon(1e-9));
        }
    }
}

TEST_CASE("with zero defect rates, doing nothing is optimal") {
    std::mt19937_64 rng(109);
    std::uniform_real_distribution<double> money(0.01, 100.0);
    for (int i = 0; i < 100; ++i) {
        ScenarioParams p;
        p.c1 = money(rng);
        p.c2 = money(rng);
        p.c3 = money(rng);
        p.t1 = money(rng);
        p.t2 = money(rng);
        p.t3 = money(rng);
        p.h1 = money(rng);
        p.m = money(rng);
        p.w = money(rng);
        p.n11 = money(rng) * 10;
        p.n12 = money(rng) * 10;
        SolveResult res = solve_backward(p);
        CHECK(res.best_decision == DecisionVector{0, 0, 0, 0});
    }
}

TEST_CASE("dismantling cannot pay when it costs more than the parts it recovers") {
    std::mt19937_64 rng(113);
    for (int i = 0; i < 200; ++i) {
        ScenarioParams p = random_scenario(rng);
        p.h1 = p.c1 + p.c2 + std::uniform_real_distribution<double>(0.0, 50.0)(rng);
        StageState st = stage_state(p, {0, 0, 0, 1});
        CHECK(stage3_value(p, st.n2, st.n3, {0, 0, 0, 1}) <= 0.0);
    }
}

TEST_CASE("batch_solve preserves order and validates up front") {
    std::mt19937_64 rng(127);
    std::vector<ScenarioParams> batch;
    for (int i = 0; i < 6; ++i) batch.push_back(random_scenario(rng));

    auto results = batch_solve_serial(batch);
    REQUIRE(results.size() == 6);
    for (std::size_t i = 0; i < batch.size(); ++i) {
        SolveResult expected = solve_backward(batch[i]);
        CHECK(results[i].best_value == expected.best_value);
        CHECK(results[i].best_decision == expected.best_decision);
    }

    CHECK(batch_solve_serial({}).empty());
    CHECK(batch_solve({}).empty());

    batch[2].r1 = 1.0;
    CHECK_THROWS_WITH_AS(batch_solve_serial(batch), doctest::Contains("index 2"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(batch_solve(batch), doctest::Contains("index 2"),
                         std::invalid_argument);
}

TEST_CASE("parallel batch_solve is bit-identical to the serial reference") {
    std::mt19937_64 rng(131);
    std::vector<ScenarioParams> batch;
    for (int i = 0; i < 1000; ++i) batch.push_back(random_scenario(rng));

    auto serial = batch_solve_serial(batch);
    auto parallel = batch_solve(batch);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
        REQUIRE(serial[i].best_value == parallel[i].best_value);
        REQUIRE(serial[i].best_decision == parallel[i].best_decision);
        for (int idx = 0; idx < 16; ++idx) {
            REQUIRE(serial[i].value_table[idx].value ==
                    parallel[i].value_table[idx].value);
        }
    }
}
