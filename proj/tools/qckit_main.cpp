// ----------------------------------------------------------------------------
// qckit command-line front end.
//
//   qckit plan type1   --p0 P --alpha A --error-limit D [--mode M]
//   qckit plan type2   --p0 P --p1 P1 --power W [--mode M]
//   qckit test         --p0 P --alpha A --n N --defects K [--mode M]
//   qckit sweep type1  --p0 P --alpha A --from F --to T --step S --out CSV [--mode M]
//   qckit sweep type2  --p0 P --power W --from F --to T --step S --out CSV [--mode M]
//   qckit decide       --scenario FILE [--all] [--out-dir DIR] [--csv FILE] [--echo FILE]
//
// Exit codes: 0 success, 2 input/validation error, 3 I/O error.
// ----------------------------------------------------------------------------

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qckit/decision_dp.hpp"
#include "qckit/normal.hpp"
#include "qckit/sampling_plans.hpp"
#include "qckit/scenario_io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitIo = 3;

class io_failure : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require_prob_flag(double v, const char* flag) {
    if (!(v > 0.0 && v < 1.0)) {
        throw std::invalid_argument(std::string(flag) +
                                    " must lie strictly in (0, 1)");
    }
}

qckit::QuantileMode parse_mode(const std::string& mode) {
    if (mode == "precise") return qckit::QuantileMode::precise;
    if (mode == "paper-rounded") return qckit::QuantileMode::paper_rounded;
    throw std::invalid_argument("--mode must be 'precise' or 'paper-rounded'");
}

// Shortest representation that parses back to the same double.
std::string format_full(double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

std::string format_fixed6(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw io_failure("cannot open output file: " + path);
    }
    return out;
}

std::string sanitize_filename(const std::string& name) {
    std::string out;
    for (char c : name) {
        bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                  (c >= '0' && c <= '9') || c == '.' || c == '_' || c == '-';
        out.push_back(ok ? c : '_');
    }
    return out;
}

void print_plan(const qckit::plans::SamplePlan& plan) {
    std::cout << "n: " << plan.sample_size << "\n";
    std::cout << "quantile: " << format_fixed6(plan.quantile_used) << "\n";
    std::cout << "normal-approx-advisory: "
              << (plan.normal_approx_advisory ? "yes" : "no") << "\n";
}

int run_plan_type1(double p0, double alpha, double error_limit,
                   const std::string& mode) {
    require_prob_flag(p0, "--p0");
    require_prob_flag(alpha, "--alpha");
    if (!(error_limit > 0.0 && error_limit < 1.0)) {
        throw std::invalid_argument("--error-limit must lie strictly in (0, 1)");
    }
    auto plan = qckit::plans::min_sample_size_type1(p0, error_limit, alpha,
                                                    parse_mode(mode));
    print_plan(plan);
    return kExitOk;
}

int run_plan_type2(double p0, double p1, double power, const std::string& mode) {
    require_prob_flag(p0, "--p0");
    require_prob_flag(p1, "--p1");
    require_prob_flag(power, "--power");
    auto plan = qckit::plans::min_sample_size_type2(p0, p1, power, parse_mode(mode));
    std::cout << "n: " << plan.sample_size << "\n";
    std::cout << "quantile: " << format_fixed6(plan.quantile_used) << "\n";
    return kExitOk;
}

int run_test(double p0, double alpha, std::int64_t n, std::int64_t defects,
             const std::string& mode) {
    require_prob_flag(p0, "--p0");
    require_prob_flag(alpha, "--alpha");
    if (n < 1) throw std::invalid_argument("--n must be >= 1");
    if (defects < 0 || defects > n) {
        throw std::invalid_argument("--defects must lie in [0, --n]");
    }
    qckit::QuantileMode qm = parse_mode(mode);
    qckit::plans::SampleObservation obs{n, defects};
    double rate = qckit::plans::sample_defect_rate(obs);
    double z = qckit::plans::z_statistic(rate, p0, n);
    double crit = qckit::critical_z(1.0 - alpha, qm);
    auto verdict = qckit::plans::decide_rejection(z, alpha, qm);
    std::cout << "observed-rate: " << format_fixed6(rate) << "\n";
    std::cout << "z: " << format_fixed6(z) << "\n";
    std::cout << "critical: " << format_fixed6(crit) << "\n";
    std::cout << "verdict: "
              << (verdict == qckit::plans::LotVerdict::reject_lot ? "reject_lot"
                                                                  : "fail_to_reject")
              << "\n";
    return kExitOk;
}

void write_sweep_csv(const qckit::plans::SweepResult& sweep, const std::string& path) {
    std::ofstream out = open_output(path);
    out << "swept_value,n\n";
    for (const auto& row : sweep.rows) {
        out << format_fixed6(row.swept_value) << "," << row.sample_size << "\n";
    }
    if (!out) throw io_failure("failed writing: " + path);
}

int run_sweep_type1(double p0, double alpha, double from, double to, double step,
                    const std::string& path, const std::string& mode) {
    require_prob_flag(p0, "--p0");
    require_prob_flag(alpha, "--alpha");
    auto sweep = qckit::plans::sweep_type1(p0, from, to, step, alpha, parse_mode(mode));
    write_sweep_csv(sweep, path);
    std::cout << "wrote " << sweep.rows.size() << " rows: " << path << "\n";
    return kExitOk;
}

int run_sweep_type2(double p0, double power, double from, double to, double step,
                    const std::string& path, const std::string& mode) {
    require_prob_flag(p0, "--p0");
    require_prob_flag(power, "--power");
    auto sweep = qckit::plans::sweep_type2(p0, from, to, step, power, parse_mode(mode));
    write_sweep_csv(sweep, path);
    std::cout << "wrote " << sweep.rows.size() << " rows: " << path << "\n";
    return kExitOk;
}

int run_decide(const std::string& scenario_path, bool all,
               const std::string& out_dir, const std::string& csv_path,
               const std::string& echo_path) {
    qckit::io::ScenarioFile file = qckit::io::load_scenarios(scenario_path);

    if (!echo_path.empty()) {
        std::ofstream out = open_output(echo_path);
        out << qckit::io::serialize_scenarios(file);
        if (!out) throw io_failure("failed writing: " + echo_path);
    }

    std::vector<qckit::dp::ScenarioParams> params;
    params.reserve(file.scenarios.size());
    for (const auto& sc : file.scenarios) params.push_back(sc.params);
    std::vector<qckit::dp::SolveResult> results = qckit::dp::batch_solve(params);

    std::size_t name_width = 4;
    for (const auto& sc : file.scenarios) name_width = std::max(name_width, sc.name.size());

    std::printf("%-*s  s1 s2 s3 s4  %12s\n", static_cast<int>(name_width), "case",
                "best value");
    for (std::size_t i = 0; i < results.size(); ++i) {
        const auto& d = results[i].best_decision;
        long long display = std::llround(results[i].best_value);
        std::printf("%-*s  %2d %2d %2d %2d  %12lld\n", static_cast<int>(name_width),
                    file.scenarios[i].name.c_str(), d.s1, d.s2, d.s3, d.s4, display);
    }

    if (!csv_path.empty()) {
        std::ofstream out = open_output(csv_path);
        out << "name,s1,s2,s3,s4,value\n";
        for (std::size_t i = 0; i < results.size(); ++i) {
            const auto& d = results[i].best_decision;
            out << file.scenarios[i].name << "," << d.s1 << "," << d.s2 << "," << d.s3
                << "," << d.s4 << "," << format_full(results[i].best_value) << "\n";
        }
        if (!out) throw io_failure("failed writing: " + csv_path);
    }

    if (all) {
        for (std::size_t i = 0; i < results.size(); ++i) {
            std::string path = out_dir + "/" +
                               sanitize_filename(file.scenarios[i].name) + ".values.csv";
            std::ofstream out = open_output(path);
            out << "s1,s2,s3,s4,value\n";
            for (const auto& entry : results[i].value_table) {
                const auto& d = entry.decision;
                out << d.s1 << "," << d.s2 << "," << d.s3 << "," << d.s4 << ","
                    << format_full(entry.value) << "\n";
            }
            if (!out) throw io_failure("failed writing: " + path);
        }
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quality-control decision toolkit"};
    app.require_subcommand(1);

    std::string mode = "precise";
    double p0 = 0, alpha = 0, power = 0, p1 = 0, error_limit = 0;
    double from = 0, to = 0, step = 0;
    std::int64_t n = 0, defects = 0;
    std::string out_path, scenario_path, out_dir = ".", csv_path, echo_path;
    bool all = false;

    auto add_mode = [&](CLI::App* cmd) {
        cmd->add_option("--mode", mode, "quantile mode: precise | paper-rounded");
    };

    CLI::App* plan = app.add_subcommand("plan", "size an inspection plan");
    plan->require_subcommand(1);
    CLI::App* plan1 = plan->add_subcommand(
        "type1", "minimum n holding the defect-rate error within --error-limit");
    plan1->add_option("--p0", p0, "nominal defect rate")->required();
    plan1->add_option("--alpha", alpha, "significance level")->required();
    plan1->add_option("--error-limit", error_limit, "permissible absolute error")
        ->required();
    add_mode(plan1);
    CLI::App* plan2 = plan->add_subcommand(
        "type2", "minimum n detecting a true rate --p1 against --p0");
    plan2->add_option("--p0", p0, "nominal defect rate")->required();
    plan2->add_option("--p1", p1, "true defect rate to detect")->required();
    plan2->add_option("--power", power, "detection power (1 - beta)")->required();
    add_mode(plan2);

    CLI::App* test = app.add_subcommand("test", "one-sided z-test of a lot sample");
    test->add_option("--p0", p0, "nominal defect rate")->required();
    test->add_option("--alpha", alpha, "significance level")->required();
    test->add_option("--n", n, "sample size")->required();
    test->add_option("--defects", defects, "defective units in the sample")->required();
    add_mode(test);

    CLI::App* sweep = app.add_subcommand("sweep", "tabulate plan sizes over a grid");
    sweep->require_subcommand(1);
    CLI::App* sweep1 = sweep->add_subcommand("type1", "sweep the error limit d");
    sweep1->add_option("--p0", p0, "nominal defect rate")->required();
    sweep1->add_option("--alpha", alpha, "significance level")->required();
    sweep1->add_option("--from", from, "first grid value")->required();
    sweep1->add_option("--to", to, "last grid value")->required();
    sweep1->add_option("--step", step, "grid step")->required();
    sweep1->add_option("--out", out_path, "output CSV path")->required();
    add_mode(sweep1);
    CLI::App* sweep2 = sweep->add_subcommand("type2", "sweep the true rate p1");
    sweep2->add_option("--p0", p0, "nominal defect rate")->required();
    sweep2->add_option("--power", power, "detection power")->required();
    sweep2->add_option("--from", from, "first grid value")->required();
    sweep2->add_option("--to", to, "last grid value")->required();
    sweep2->add_option("--step", step, "grid step")->required();
    sweep2->add_option("--out", out_path, "output CSV path")->required();
    add_mode(sweep2);

    CLI::App* decide =
        app.add_subcommand("decide", "solve production scenarios for the best decisions");
    decide->add_option("--scenario", scenario_path, "scenario JSON file")->required();
    decide->add_flag("--all", all, "also write each scenario's 16-row value table");
    decide->add_option("--out-dir", out_dir, "directory for --all value tables");
    decide->add_option("--csv", csv_path, "mirror the report rows to this CSV");
    decide->add_option("--echo", echo_path, "re-emit the parsed scenario file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitInput;
    }

    try {
        if (plan1->parsed()) return run_plan_type1(p0, alpha, error_limit, mode);
        if (plan2->parsed()) return run_plan_type2(p0, p1, power, mode);
        if (test->parsed()) return run_test(p0, alpha, n, defects, mode);
        if (sweep1->parsed())
            return run_sweep_type1(p0, alpha, from, to, step, out_path, mode);
        if (sweep2->parsed())
            return run_sweep_type2(p0, power, from, to, step, out_path, mode);
        if (decide->parsed())
            return run_decide(scenario_path, all, out_dir, csv_path, echo_path);
    } catch (const io_failure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const qckit::io::io_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const qckit::plans::unbounded_sample_size& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const qckit::io::scenario_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitOk;
}
