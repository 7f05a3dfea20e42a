// ----------------------------------------------------------------------------
// Benchmark: serial reference batch solver vs the OpenMP batch solver, plus
// the per-scenario cost of the two solve routes. Results are verified
// identical before any timing is reported.
// ----------------------------------------------------------------------------

#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <CLI11.hpp>

#include "qckit/decision_dp.hpp"

namespace {

using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point t0) {
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

std::vector<qckit::dp::ScenarioParams> random_scenarios(std::size_t count,
                                                        std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> rate(0.0, 0.5);
    std::uniform_real_distribution<double> money(0.0, 100.0);
    std::uniform_real_distribution<double> units(1.0, 1000.0);
    std::vector<qckit::dp::ScenarioParams> out(count);
    for (auto& p : out) {
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
    }
    return out;
}

bool identical(const std::vector<qckit::dp::SolveResult>& a,
               const std::vector<qckit::dp::SolveResult>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].best_value != b[i].best_value) return false;
        if (!(a[i].best_decision == b[i].best_decision)) return false;
    }
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    std::size_t count = 2'000'000;
    int repeats = 3;
    std::uint64_t seed = 20240901;

    CLI::App app{"qckit batch-solver benchmark"};
    app.add_option("--count", count, "scenarios per batch");
    app.add_option("--repeats", repeats, "timed repetitions (best is reported)");
    app.add_option("--seed", seed, "RNG seed");
    CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (built without OpenMP)\n");
#endif
    std::printf("scenarios: %zu, repeats: %d\n\n", count, repeats);

    auto scenarios = random_scenarios(count, seed);

    auto serial = qckit::dp::batch_solve_serial(scenarios);
    auto parallel = qckit::dp::batch_solve(scenarios);
    if (!identical(serial, parallel)) {
        std::fprintf(stderr, "FATAL: parallel batch differs from serial reference\n");
        return 1;
    }

    double best_serial = 1e300;
    double best_parallel = 1e300;
    for (int r = 0; r < repeats; ++r) {
        auto t0 = clock_type::now();
        auto a = qckit::dp::batch_solve_serial(scenarios);
        double ts = seconds_since(t0);
        if (ts < best_serial) best_serial = ts;

        t0 = clock_type::now();
        auto b = qckit::dp::batch_solve(scenarios);
        double tp = seconds_since(t0);
        if (tp < best_parallel) best_parallel = tp;

        if (!identical(a, b)) {
            std::fprintf(stderr, "FATAL: mismatch during timing run %d\n", r);
            return 1;
        }
    }

    double n = static_cast<double>(count);
    std::printf("%-22s %10.3f ms  %12.0f scenarios/s\n", "batch_solve_serial",
                best_serial * 1e3, n / best_serial);
    std::printf("%-22s %10.3f ms  %12.0f scenarios/s\n", "batch_solve (OpenMP)",
                best_parallel * 1e3, n / best_parallel);
    std::printf("speedup: %.2fx\n\n", best_serial / best_parallel);

    // Single-scenario route comparison over the same batch.
    std::vector<double> values(count);
    auto t0 = clock_type::now();
    for (std::size_t i = 0; i < count; ++i) {
        values[i] = qckit::dp::solve_enumeration(scenarios[i]).best_value;
    }
    double t_enum = seconds_since(t0);

    std::size_t mismatches = 0;
    t0 = clock_type::now();
    for (std::size_t i = 0; i < count; ++i) {
        if (qckit::dp::solve_backward(scenarios[i]).best_value != values[i]) ++mismatches;
    }
    double t_back = seconds_since(t0);

    std::printf("%-22s %10.3f ms\n", "solve_enumeration", t_enum * 1e3);
    std::printf("%-22s %10.3f ms\n", "solve_backward", t_back * 1e3);
    std::printf("route mismatches (must be 0): %zu\n", mismatches);
    return mismatches == 0 ? 0 : 1;
}
