#pragma once

// ----------------------------------------------------------------------------
// Multi-stage production decision model: given defect rates, part/assembly
// costs, test costs, dismantling economics and a market price, choose the
// four binary decisions
//
//   s1: test part 1          s2: test part 2
//   s3: test finished goods  s4: dismantle rejects
//
// that maximize expected total profit over three stages (procurement/test,
// assembly/test, dismantle/market). Flows are expected counts and stay
// real-valued throughout; rounding is a display concern.
//
// Two solvers are provided: exhaustive enumeration over all 16 decision
// vectors, and a staged backward recursion that memoizes flows and the
// stage-3 optimum per decision prefix. Both share the same stage-value code
// path, so their results agree exactly (bit for bit), which the test suite
// enforces as the module's master property.
// ----------------------------------------------------------------------------

#include <array>
#include <cstdint>
#include <vector>

namespace qckit::dp {

// Economic and quality inputs for one scenario.
struct ScenarioParams {
    double r1 = 0.0, r2 = 0.0, r3 = 0.0;  // defect rates, in [0, 1)
    double c1 = 0.0, c2 = 0.0;            // unit purchase costs
    double c3 = 0.0;                      // unit assembly cost
    double t1 = 0.0, t2 = 0.0, t3 = 0.0;  // unit testing costs
    double h1 = 0.0;                      // unit dismantling cost
    double m = 0.0;                       // unit replacement loss
    double w = 0.0;                       // unit market price
    double n11 = 0.0, n12 = 0.0;          // initial part counts, > 0

    // Throws std::invalid_argument naming the offending field.
    void validate() const;
};

struct DecisionVector {
    int s1 = 0, s2 = 0, s3 = 0, s4 = 0;  // each exactly 0 or 1

    // Index order (s1 most significant) coincides with lexicographic order.
    static DecisionVector from_index(int idx);
    int index() const { return s1 * 8 + s2 * 4 + s3 * 2 + s4; }

    bool operator==(const DecisionVector&) const = default;
};

// Expected flows after stages 1 and 2; 0 <= n3 <= n2 <= min(n11, n12).
struct StageState {
    double n2 = 0.0;
    double n3 = 0.0;
};

struct ValueEntry {
    DecisionVector decision;
    double value = 0.0;
};

struct SolveResult {
    DecisionVector best_decision;
    double best_value = 0.0;
    std::array<ValueEntry, 16> value_table;  // index order, all 16 vectors
};

// n2 = min( n11*(1-r1)^s1, n12*(1-r2)^s2 ).
double transition_stage1(const ScenarioParams& p, int s1, int s2);

// n3 = n2 * (1-r1)^(1-s1) * (1-r2)^(1-s2) * (1-r3).
double transition_stage2(const ScenarioParams& p, double n2, int s1, int s2);

// Both transitions for one decision vector.
StageState stage_state(const ScenarioParams& p, const DecisionVector& d);

// Dismantling value. 0 when s4 = 0; otherwise
//   (n2-n3) * ( -h1 + (c1+c2) - (s1*t1 + s2*t2 + s3*(t3+c3)) )
//          * min( (1-r1)^s1, (1-r2)^s2 ).
double stage3_value(const ScenarioParams& p, double n2, double n3,
                    const DecisionVector& d);

// Assembly/market value plus the downstream v3:
//   s3 = 0:  -c3*n2 - r3*m*n2 + w*n2 + v3
//   s3 = 1:  -c3*n2 - t3*n2 + (1-r3)*w*n2 + v3
double stage2_value(const ScenarioParams& p, double n2, const DecisionVector& d,
                    double v3);

// Procurement/testing value plus the downstream v2. The replacement-loss
// terms carry a (1-s3) factor: a downstream finished-goods test intercepts
// defective parts before they reach the market.
double stage1_value(const ScenarioParams& p, const DecisionVector& d, double v2);

// Full chain stage1(stage2(stage3(...))) for a single decision vector.
double total_value(const ScenarioParams& p, const DecisionVector& d);

// Evaluates all 16 decision vectors; ties broken toward the
// lexicographically smallest vector (fewer interventions first).
SolveResult solve_enumeration(const ScenarioParams& p);

// Staged backward recursion: collapses s4 at stage 3 per (s1,s2,s3) prefix,
// then folds stages 2 and 1. The stage-1 value depends on the downstream s3,
// so the decision prefix is part of the recursion state. Returns exactly the
// same best_value and best_decision as solve_enumeration.
SolveResult solve_backward(const ScenarioParams& p);

// Per-scenario solve_backward in input order. Validates every scenario up
// front; the first invalid one aborts with its index. The parallel variant
// distributes scenarios across OpenMP threads and is bit-identical to the
// serial reference.
std::vector<SolveResult> batch_solve_serial(const std::vector<ScenarioParams>& scenarios);
std::vector<SolveResult> batch_solve(const std::vector<ScenarioParams>& scenarios);

}  // namespace qckit::dp
