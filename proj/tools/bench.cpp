// Compares the exhaustive serial validator against the grid-pruned,
// OpenMP-parallel kernel on growing hexagonal instances and checks that
// both produce the same certificate.
#include <chrono>
#include <cstdio>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "mskit/generate.hpp"
#include "mskit/plane_graph.hpp"

using h_clock = std::chrono::high_resolution_clock;

namespace {

template <typename F>
double time_ms(F&& fn, int reps) {
    auto t0 = h_clock::now();
    for (int r = 0; r < reps; ++r) fn();
    auto t1 = h_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
}

}  // namespace

int main(int argc, char** argv) {
    int max_k = argc > 1 ? std::atoi(argv[1]) : 24;
#ifdef _OPENMP
    std::printf("openmp threads: %d\n", omp_get_max_threads());
#else
    std::printf("openmp: not enabled\n");
#endif
    std::printf("%6s %8s %8s %14s %14s %9s\n", "k", "n", "e", "serial(ms)",
                "pruned(ms)", "speedup");

    for (int k = 6; k <= max_k; k += 6) {
        mskit::PlaneGraph g = mskit::hex_construction({k});
        mskit::ToleranceConfig tol;

        auto ref = mskit::validate_matchstick_serial(g, tol);
        auto fast = mskit::validate_matchstick(g, tol);
        if (!ref.pass || !fast.pass ||
            ref.violations.size() != fast.violations.size()) {
            std::fprintf(stderr, "certificate mismatch at k=%d\n", k);
            return 1;
        }

        int reps = k <= 12 ? 3 : 1;
        double t_serial =
            time_ms([&] { mskit::validate_matchstick_serial(g, tol); }, reps);
        double t_fast =
            time_ms([&] { mskit::validate_matchstick(g, tol); }, reps);
        std::printf("%6d %8d %8d %14.2f %14.2f %8.1fx\n", k, g.n(), g.e(),
                    t_serial, t_fast, t_serial / t_fast);
    }
    return 0;
}
