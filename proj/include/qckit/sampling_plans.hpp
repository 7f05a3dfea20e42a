#pragma once

// ----------------------------------------------------------------------------
// Acceptance-sampling statistics for attribute inspection of a finite lot:
// defect-rate estimators, the hypergeometric / binomial / normal approximation
// chain, a one-sided upper-tail z-test on the defect rate, and the two
// minimum-sample-size formulas (error-limit controlled and power controlled)
// with grid sweeps over their driving parameter.
//
// All functions are pure; invalid inputs throw std::invalid_argument or
// std::domain_error. Sample sizes are always rounded up: a plan must meet its
// error budget, not approximately meet it.
// ----------------------------------------------------------------------------

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "qckit/normal.hpp"

namespace qckit::plans {

// Finite lot of N units, M of them defective.
struct PopulationModel {
    std::int64_t total_units = 0;      // N
    std::int64_t defective_units = 0;  // M

    void validate() const;
    double defect_rate() const { return static_cast<double>(defective_units) / static_cast<double>(total_units); }
};

// One simple random sample drawn without replacement.
struct SampleObservation {
    std::int64_t sample_size = 0;  // n
    std::int64_t defect_count = 0; // a

    void validate() const;
};

// Test configuration shared by the planning and verdict commands.
struct TestConfig {
    double nominal_defect_rate = 0.0;  // p0
    double significance_level = 0.0;   // alpha
    double power = 0.0;                // 1 - beta
    QuantileMode quantile_mode = QuantileMode::precise;

    void validate() const;
};

enum class ErrorTypeControlled { type1, type2 };

// A computed inspection plan.
struct SamplePlan {
    std::int64_t sample_size = 0;       // n, ceiling of raw_size
    ErrorTypeControlled error_type = ErrorTypeControlled::type1;
    double quantile_used = 0.0;         // the z that sized the plan
    double input_echo = 0.0;            // the d or p1 that drove the plan
    double raw_size = 0.0;              // pre-ceiling formula value, for audit
    bool normal_approx_advisory = false; // true when n*p < 5 or n*(1-p) < 5
};

struct SweepRow {
    double swept_value = 0.0;
    std::int64_t sample_size = 0;
};

// Grid of plans; swept_value strictly increasing across rows.
struct SweepResult {
    std::vector<SweepRow> rows;
};

// Thrown when the requested plan has no finite sample size (p1 == p0).
class unbounded_sample_size : public std::domain_error {
    using std::domain_error::domain_error;
};

// a / n.
double sample_defect_rate(const SampleObservation& obs);

// (n / (n-1)) * p * (1-p). Requires n >= 2.
double sample_variance(const SampleObservation& obs);

// ((1-f) / (n-1)) * p * (1-p) with sampling fraction f = n/N. Requires
// 2 <= n <= N; exactly 0 for a census (n == N).
double defect_rate_variance(const SampleObservation& obs, const PopulationModel& pop);

struct Moments {
    double mean = 0.0;
    double variance = 0.0;
};

// Mean n*M/N and variance n*(M/N)*(1-M/N)*(N-n)/(N-1) of the defective count
// under draws without replacement. A single-unit lot has variance 0.
Moments hypergeometric_moments(const PopulationModel& pop, std::int64_t n);

// Parameters (p, p*(1-p)/n) of the normal law approximating the sample
// defect rate. Requires 0 < p < 1.
Moments normal_approx_params(double p, std::int64_t n);

// (observed - p0) / sqrt(p0*(1-p0)/n). Requires 0 < p0 < 1.
double z_statistic(double observed_rate, double p0, std::int64_t n);

enum class LotVerdict { reject_lot, fail_to_reject };

// Upper-tail test of H1: p > p0. Rejects iff z strictly exceeds z_{1-alpha};
// an exact tie fails to reject.
LotVerdict decide_rejection(double z, double significance_level,
                            QuantileMode mode = QuantileMode::precise);

// Rule-of-thumb validity of the normal approximation at rate p and size n.
bool normal_approx_ok(double p, std::int64_t n);

// n = ceil( p0*(1-p0) / (d / z_{1-alpha})^2 ): smallest n for which the
// sampling error of the defect rate stays within d at the given confidence.
SamplePlan min_sample_size_type1(double p0, double error_limit_d,
                                 double significance_level, QuantileMode mode);

// n = ceil( p1*(1-p1) / ((p1 - p0) / z_power)^2 ): smallest n detecting a true
// rate p1 against the nominal p0 at the given power. Throws
// unbounded_sample_size when p1 == p0.
SamplePlan min_sample_size_type2(double p0, double p1, double power,
                                 QuantileMode mode);

// One row per grid point d in [d_from, d_to] stepped by d_step (inclusive
// endpoints within half-step tolerance).
SweepResult sweep_type1(double p0, double d_from, double d_to, double d_step,
                        double significance_level, QuantileMode mode);

// One row per grid point p1; a grid point hitting p0 throws
// unbounded_sample_size naming the point.
SweepResult sweep_type2(double p0, double p1_from, double p1_to, double p1_step,
                        double power, QuantileMode mode);

}  // namespace qckit::plans
