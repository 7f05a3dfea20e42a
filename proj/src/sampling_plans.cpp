#include "qckit/sampling_plans.hpp"

#include <cmath>
#include <string>

namespace qckit::plans {

namespace {

void require_prob(double v, const char* name) {
    if (!(v > 0.0 && v < 1.0)) {
        throw std::domain_error(std::string(name) + " must lie strictly in (0, 1)");
    }
}

std::int64_t ceil_to_count(double raw) {
    double c = std::ceil(raw);
    if (c < 1.0) c = 1.0;
    if (!(c < 9.0e18)) {
        throw std::domain_error("required sample size exceeds the representable range");
    }
    return static_cast<std::int64_t>(c);
}

}  // namespace

void PopulationModel::validate() const {
    if (total_units < 1) throw std::invalid_argument("total_units must be >= 1");
    if (defective_units < 0 || defective_units > total_units) {
        throw std::invalid_argument("defective_units must lie in [0, total_units]");
    }
}

void SampleObservation::validate() const {
    if (sample_size < 1) throw std::invalid_argument("sample_size must be >= 1");
    if (defect_count < 0 || defect_count > sample_size) {
        throw std::invalid_argument("defect_count must lie in [0, sample_size]");
    }
}

void TestConfig::validate() const {
    require_prob(nominal_defect_rate, "nominal_defect_rate");
    require_prob(significance_level, "significance_level");
    require_prob(power, "power");
}

double sample_defect_rate(const SampleObservation& obs) {
    obs.validate();
    return static_cast<double>(obs.defect_count) / static_cast<double>(obs.sample_size);
}

double sample_variance(const SampleObservation& obs) {
    obs.validate();
    if (obs.sample_size < 2) {
        throw std::domain_error("sample_variance requires sample_size >= 2");
    }
    double n = static_cast<double>(obs.sample_size);
    double p = sample_defect_rate(obs);
    return n / (n - 1.0) * p * (1.0 - p);
}

double defect_rate_variance(const SampleObservation& obs, const PopulationModel& pop) {
    obs.validate();
    pop.validate();
    if (obs.sample_size > pop.total_units) {
        throw std::domain_error("defect_rate_variance requires sample_size <= total_units");
    }
    if (obs.sample_size < 2) {
        throw std::domain_error("defect_rate_variance requires sample_size >= 2");
    }
    if (obs.sample_size == pop.total_units) return 0.0;  // census
    double n = static_cast<double>(obs.sample_size);
    double f = n / static_cast<double>(pop.total_units);
    double p = sample_defect_rate(obs);
    return (1.0 - f) / (n - 1.0) * p * (1.0 - p);
}

Moments hypergeometric_moments(const PopulationModel& pop, std::int64_t n) {
    pop.validate();
    if (n < 1 || n > pop.total_units) {
        throw std::invalid_argument("hypergeometric_moments requires 1 <= n <= total_units");
    }
    double nn = static_cast<double>(n);
    double N = static_cast<double>(pop.total_units);
    double P = pop.defect_rate();
    double mean = nn * P;
    if (pop.total_units == 1) return {mean, 0.0};  // single-unit lot, no dispersion
    double variance = nn * P * (1.0 - P) * (N - nn) / (N - 1.0);
    return {mean, variance};
}

Moments normal_approx_params(double p, std::int64_t n) {
    require_prob(p, "p");
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    return {p, p * (1.0 - p) / static_cast<double>(n)};
}

double z_statistic(double observed_rate, double p0, std::int64_t n) {
    require_prob(p0, "p0");
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    double se = std::sqrt(p0 * (1.0 - p0) / static_cast<double>(n));
    return (observed_rate - p0) / se;
}

LotVerdict decide_rejection(double z, double significance_level, QuantileMode mode) {
    require_prob(significance_level, "significance_level");
    double crit = critical_z(1.0 - significance_level, mode);
    return z > crit ? LotVerdict::reject_lot : LotVerdict::fail_to_reject;
}

bool normal_approx_ok(double p, std::int64_t n) {
    double nn = static_cast<double>(n);
    return nn * p >= 5.0 && nn * (1.0 - p) >= 5.0;
}

SamplePlan min_sample_size_type1(double p0, double error_limit_d,
                                 double significance_level, QuantileMode mode) {
    require_prob(p0, "p0");
    require_prob(significance_level, "significance_level");
    if (!(error_limit_d > 0.0 && error_limit_d < 1.0)) {
        throw std::domain_error("error_limit_d must lie strictly in (0, 1)");
    }
    double z = critical_z(1.0 - significance_level, mode);
    double raw = p0 * (1.0 - p0) / ((error_limit_d / z) * (error_limit_d / z));
    SamplePlan plan;
    plan.sample_size = ceil_to_count(raw);
    plan.error_type = ErrorTypeControlled::type1;
    plan.quantile_used = z;
    plan.input_echo = error_limit_d;
    plan.raw_size = raw;
    plan.normal_approx_advisory = !normal_approx_ok(p0, plan.sample_size);
    return plan;
}

SamplePlan min_sample_size_type2(double p0, double p1, double power, QuantileMode mode) {
    require_prob(p0, "p0");
    require_prob(p1, "p1");
    require_prob(power, "power");
    if (p1 == p0) {
        throw unbounded_sample_size(
            "p1 equals p0: the required sample size is unbounded");
    }
    double z = critical_z(power, mode);
    double gap = (p1 - p0) / z;
    double raw = p1 * (1.0 - p1) / (gap * gap);
    SamplePlan plan;
    plan.sample_size = ceil_to_count(raw);
    plan.error_type = ErrorTypeControlled::type2;
    plan.quantile_used = z;
    plan.input_echo = p1;
    plan.raw_size = raw;
    plan.normal_approx_advisory = !normal_approx_ok(p1, plan.sample_size);
    return plan;
}

namespace {

// Inclusive grid from..to with half-step tolerance against float accumulation.
std::vector<double> make_grid(double from, double to, double step) {
    if (!(step > 0.0)) throw std::invalid_argument("step must be > 0");
    if (!(from > 0.0) || from > to) {
        throw std::invalid_argument("sweep range requires 0 < from <= to");
    }
    std::vector<double> grid;
    for (std::int64_t k = 0;; ++k) {
        double v = from + static_cast<double>(k) * step;
        if (v > to + step / 2.0) break;
        grid.push_back(v);
    }
    return grid;
}

}  // namespace

SweepResult sweep_type1(double p0, double d_from, double d_to, double d_step,
                        double significance_level, QuantileMode mode) {
    SweepResult out;
    for (double d : make_grid(d_from, d_to, d_step)) {
        SamplePlan plan = min_sample_size_type1(p0, d, significance_level, mode);
        out.rows.push_back({d, plan.sample_size});
    }
    return out;
}

SweepResult sweep_type2(double p0, double p1_from, double p1_to, double p1_step,
                        double power, QuantileMode mode) {
    SweepResult out;
    for (double p1 : make_grid(p1_from, p1_to, p1_step)) {
        if (std::fabs(p1 - p0) < p1_step * 1e-6) {
            throw unbounded_sample_size("grid point " + std::to_string(p1) +
                                        " coincides with p0: sample size unbounded");
        }
        SamplePlan plan = min_sample_size_type2(p0, p1, power, mode);
        out.rows.push_back({p1, plan.sample_size});
    }
    return out;
}

}  // namespace qckit::plans
