// Compares the serial reference paths against the OpenMP fan-outs for
// the two batch kernels: Buchberger pair reduction and the geometry
// verification trials.

#ifdef _OPENMP
#include <omp.h>
#endif

#include <chrono>
#include <cstdio>
#include <set>

#include "abct/groebner.hpp"
#include "abct/matroid.hpp"

using namespace abct;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(const Clock::time_point& t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void geometry_batch(int trials, bool parallel) {
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (int trial = 0; trial < trials; ++trial) {
        const uint64_t seed = 1000 + static_cast<uint64_t>(trial);
        const ExactMatrix T = sample_vdn_point(8, 2, seed);
        const auto P = pluecker_coordinates(T);
        volatile bool sink = true;
        for (const auto& I : index_subsets(8, 6)) sink = sink && (quartic_residual(P, I) == 0);
        sink = sink && (exact_rank(veronese_matrix(T, 2)) == 5);
    }
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("openmp threads: %d\n", omp_get_max_threads());
#else
    std::printf("openmp: not enabled, both columns run serial\n");
#endif
    std::printf("%-32s %12s %12s %8s\n", "kernel", "serial (s)", "parallel (s)", "speedup");

    {
        const auto gens = minors_ideal_generators(6);
        const LexOrder ord = LexOrder::standard(18);
        auto t0 = Clock::now();
        const auto serial = buchberger_check(gens, ord, {.parallel = false});
        const double ts = seconds_since(t0);
        t0 = Clock::now();
        const auto parallel = buchberger_check(gens, ord, {.parallel = true});
        const double tp = seconds_since(t0);
        if (serial.is_groebner != parallel.is_groebner) {
            std::printf("buchberger serial/parallel disagree!\n");
            return 1;
        }
        std::printf("%-32s %12.3f %12.3f %7.2fx\n", "buchberger 3x6 (190 pairs)", ts, tp, ts / tp);
    }

    {
        const int trials = 64;
        auto t0 = Clock::now();
        geometry_batch(trials, false);
        const double ts = seconds_since(t0);
        t0 = Clock::now();
        geometry_batch(trials, true);
        const double tp = seconds_since(t0);
        std::printf("%-32s %12.3f %12.3f %7.2fx\n", "geometry trials (n=8, 64x)", ts, tp, ts / tp);
    }
    return 0;
}
