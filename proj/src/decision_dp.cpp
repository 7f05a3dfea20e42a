#include "qckit/decision_dp.hpp"

#include <algorithm>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>

namespace qckit::dp {

namespace {

void require_rate(double v, const char* name) {
    if (!(v >= 0.0 && v < 1.0)) {
        throw std::invalid_argument(std::string(name) + " must lie in [0, 1)");
    }
}

void require_nonneg(double v, const char* name) {
    if (!(v >= 0.0)) {
        throw std::invalid_argument(std::string(name) + " must be >= 0");
    }
}

void require_positive(double v, const char* name) {
    if (!(v > 0.0)) {
        throw std::invalid_argument(std::string(name) + " must be > 0");
    }
}

// (1-r)^s for s in {0,1} without calling pow.
inline double survival(double r, int s) { return s ? 1.0 - r : 1.0; }

}  // namespace

void ScenarioParams::validate() const {
    require_rate(r1, "r1");
    require_rate(r2, "r2");
    require_rate(r3, "r3");
    require_nonneg(c1, "c1");
    require_nonneg(c2, "c2");
    require_nonneg(c3, "c3");
    require_nonneg(t1, "t1");
    require_nonneg(t2, "t2");
    require_nonneg(t3, "t3");
    require_nonneg(h1, "h1");
    require_nonneg(m, "m");
    require_nonneg(w, "w");
    require_positive(n11, "n11");
    require_positive(n12, "n12");
}

DecisionVector DecisionVector::from_index(int idx) {
    return {(idx >> 3) & 1, (idx >> 2) & 1, (idx >> 1) & 1, idx & 1};
}

double transition_stage1(const ScenarioParams& p, int s1, int s2) {
    return std::min(p.n11 * survival(p.r1, s1), p.n12 * survival(p.r2, s2));
}

double transition_stage2(const ScenarioParams& p, double n2, int s1, int s2) {
    return n2 * survival(p.r1, 1 - s1) * survival(p.r2, 1 - s2) * (1.0 - p.r3);
}

StageState stage_state(const ScenarioParams& p, const DecisionVector& d) {
    StageState st;
    st.n2 = transition_stage1(p, d.s1, d.s2);
    st.n3 = transition_stage2(p, st.n2, d.s1, d.s2);
    return st;
}

double stage3_value(const ScenarioParams& p, double n2, double n3,
                    const DecisionVector& d) {
    if (d.s4 == 0) return 0.0;
    double salvage_per_unit = -p.h1 + (p.c1 + p.c2) -
                              (d.s1 * p.t1 + d.s2 * p.t2 + d.s3 * (p.t3 + p.c3));
    double discount = std::min(survival(p.r1, d.s1), survival(p.r2, d.s2));
    return (n2 - n3) * salvage_per_unit * discount;
}

double stage2_value(const ScenarioParams& p, double n2, const DecisionVector& d,
                    double v3) {
    if (d.s3 == 0) {
        // Untested goods go straight to market; defective ones incur the
        // replacement loss m.
        return -p.c3 * n2 - p.r3 * p.m * n2 + p.w * n2 + v3;
    }
    return -p.c3 * n2 - p.t3 * n2 + (1.0 - p.r3) * p.w * n2 + v3;
}

double stage1_value(const ScenarioParams& p, const DecisionVector& d, double v2) {
    double base = p.c1 * p.n11 + p.c2 * p.n12;
    double loss_gate = 1.0 - d.s3;
    double cost;
    if (d.s1 == 1 && d.s2 == 1) {
        cost = base + p.t1 * p.n11 + p.t2 * p.n12;
    } else if (d.s1 == 1) {
        cost = base + p.t1 * p.n11 + p.r2 * p.n12 * p.m * loss_gate;
    } else if (d.s2 == 1) {
        cost = base + p.t2 * p.n12 + p.r1 * p.n11 * p.m * loss_gate;
    } else {
        cost = base + (p.n11 * p.r1 + p.n12 * p.r2) * p.m * loss_gate;
    }
    return -cost + v2;
}

double total_value(const ScenarioParams& p, const DecisionVector& d) {
    StageState st = stage_state(p, d);
    double v3 = stage3_value(p, st.n2, st.n3, d);
    double v2 = stage2_value(p, st.n2, d, v3);
    return stage1_value(p, d, v2);
}

SolveResult solve_enumeration(const ScenarioParams& p) {
    p.validate();
    SolveResult res;
    res.best_value = -std::numeric_limits<double>::infinity();
    for (int idx = 0; idx < 16; ++idx) {
        DecisionVector d = DecisionVector::from_index(idx);
        double v = total_value(p, d);
        res.value_table[idx] = {d, v};
        if (v > res.best_value) {  // strict: first maximizer wins the tie
            res.best_value = v;
            res.best_decision = d;
        }
    }
    return res;
}

SolveResult solve_backward(const ScenarioParams& p) {
    p.validate();
    SolveResult res;
    res.best_value = -std::numeric_limits<double>::infinity();

    for (int s1 = 0; s1 <= 1; ++s1) {
        for (int s2 = 0; s2 <= 1; ++s2) {
            // Flows are memoized per (s1,s2) prefix; neither depends on s3 or s4.
            double n2 = transition_stage1(p, s1, s2);
            double n3 = transition_stage2(p, n2, s1, s2);

            double branch_best = -std::numeric_limits<double>::infinity();
            DecisionVector branch_arg;

            for (int s3 = 0; s3 <= 1; ++s3) {
                // Stage 3: collapse s4 under this (s1,s2,s3) prefix. The
                // stage-1 loss terms read s3, so the prefix stays part of
                // the recursion state. Candidates are ranked by the fully
                // chained value (stage-2/stage-1 terms are constant in s4),
                // which keeps float ties resolving exactly as enumeration's.
                double f3_total = -std::numeric_limits<double>::infinity();
                DecisionVector f3_arg;
                for (int s4 = 0; s4 <= 1; ++s4) {
                    DecisionVector d{s1, s2, s3, s4};
                    double v3 = stage3_value(p, n2, n3, d);
                    double total = stage1_value(p, d, stage2_value(p, n2, d, v3));
                    res.value_table[d.index()] = {d, total};
                    if (total > f3_total) {
                        f3_total = total;
                        f3_arg = d;
                    }
                }

                if (f3_total > branch_best) {
                    branch_best = f3_total;
                    branch_arg = f3_arg;
                }
            }

            if (branch_best > res.best_value) {
                res.best_value = branch_best;
                res.best_decision = branch_arg;
            }
        }
    }
    return res;
}

namespace {

void validate_batch(const std::vector<ScenarioParams>& scenarios) {
    for (std::size_t i = 0; i < scenarios.size(); ++i) {
        try {
            scenarios[i].validate();
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument("scenario at index " + std::to_string(i) +
                                        ": " + e.what());
        }
    }
}

}  // namespace

std::vector<SolveResult> batch_solve_serial(const std::vector<ScenarioParams>& scenarios) {
    validate_batch(scenarios);
    std::vector<SolveResult> out(scenarios.size());
    for (std::size_t i = 0; i < scenarios.size(); ++i) {
        out[i] = solve_backward(scenarios[i]);
    }
    return out;
}

std::vector<SolveResult> batch_solve(const std::vector<ScenarioParams>& scenarios) {
    validate_batch(scenarios);
    std::vector<SolveResult> out(scenarios.size());
    const std::int64_t count = static_cast<std::int64_t>(scenarios.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < count; ++i) {
        out[static_cast<std::size_t>(i)] = solve_backward(scenarios[static_cast<std::size_t>(i)]);
    }
    return out;
}

}  // namespace qckit::dp
