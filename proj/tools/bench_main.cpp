// Compares the serial reference paths against the OpenMP ones on the two
// embarrassingly parallel workloads: the (eps, r) grid scan and Monte Carlo
// ensembles.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "parrondo/montecarlo.hpp"
#include "parrondo/sweep.hpp"

namespace {

using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point t0) {
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

template <typename F>
double best_of(int repeats, F&& fn) {
    double best = 1e300;
    for (int i = 0; i < repeats; ++i) {
        const auto t0 = clock_type::now();
        fn();
        best = std::min(best, seconds_since(t0));
    }
    return best;
}

}  // namespace

int main(int argc, char** argv) {
    int grid = 48;
    int streams = 32;
    unsigned long long steps = 2'000'000ULL;
    int repeats = 3;
    for (int i = 1; i < argc; ++i) {
        const std::string a = argv[i];
        auto next = [&](const char* name) {
            if (i + 1 >= argc) {
                std::fprintf(stderr, "missing value for %s\n", name);
                std::exit(64);
            }
            return std::string(argv[++i]);
        };
        if (a == "--grid") grid = std::stoi(next("--grid"));
        else if (a == "--streams") streams = std::stoi(next("--streams"));
        else if (a == "--steps") steps = std::stoull(next("--steps"));
        else if (a == "--repeat") repeats = std::stoi(next("--repeat"));
        else {
            std::printf("usage: parrondo-bench [--grid N] [--streams N] [--steps N] [--repeat R]\n");
            return a == "--help" || a == "-h" ? 0 : 64;
        }
    }

#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP disabled; both paths run serially\n");
#endif

    parrondo::SweepSpec spec;
    spec.eps_range = parrondo::Range(0.0005, 0.0055, grid);
    spec.r_range = parrondo::Range(0.0, 1.0, grid);
    spec.quantum_check = true;

    std::vector<parrondo::SweepCell> serial_cells, parallel_cells;
    const double t_scan_serial =
        best_of(repeats, [&] { serial_cells = parrondo::grid_scan_serial(spec); });
    const double t_scan_parallel =
        best_of(repeats, [&] { parallel_cells = parrondo::grid_scan(spec); });

    bool identical = serial_cells.size() == parallel_cells.size();
    for (std::size_t i = 0; identical && i < serial_cells.size(); ++i) {
        identical = serial_cells[i].p_gain_mix == parallel_cells[i].p_gain_mix &&
                    serial_cells[i].effect == parallel_cells[i].effect;
    }
    std::printf("grid scan %dx%d (quantum check on):\n", grid, grid);
    std::printf("  serial   %8.3f ms\n", t_scan_serial * 1e3);
    std::printf("  parallel %8.3f ms   speedup %.2fx   outputs %s\n",
                t_scan_parallel * 1e3, t_scan_serial / t_scan_parallel,
                identical ? "identical" : "DIFFER");

    const auto [ga, gb] = parrondo::canonical_example(0.005);
    (void)ga;
    parrondo::SimConfig cfg;
    cfg.steps = steps;
    cfg.seed = 42;

    std::vector<parrondo::TrajectoryStats> serial_stats, parallel_stats;
    const double t_mc_serial =
        best_of(repeats, [&] { serial_stats = parrondo::ensemble(gb, cfg, streams, false); });
    const double t_mc_parallel =
        best_of(repeats, [&] { parallel_stats = parrondo::ensemble(gb, cfg, streams, true); });

    identical = serial_stats.size() == parallel_stats.size();
    for (std::size_t i = 0; identical && i < serial_stats.size(); ++i) {
        identical = serial_stats[i].gains == parallel_stats[i].gains &&
                    serial_stats[i].final_capital == parallel_stats[i].final_capital;
    }
    std::printf("ensemble %d streams x %llu steps:\n", streams, steps);
    std::printf("  serial   %8.3f ms\n", t_mc_serial * 1e3);
    std::printf("  parallel %8.3f ms   speedup %.2fx   outputs %s\n",
                t_mc_parallel * 1e3, t_mc_serial / t_mc_parallel,
                identical ? "identical" : "DIFFER");
    return 0;
}
