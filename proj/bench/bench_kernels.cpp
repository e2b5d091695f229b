// Timing comparison of the serial reference kernels against the OpenMP
// variants. Not part of the test suite; build target `bench_kernels`.

#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#include "tforge/kernels.hpp"

using namespace tforge::kernels;

namespace {

std::vector<double> random_vector(size_t n, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<double> v(n);
    for (double& x : v) x = dist(rng);
    return v;
}

template <typename F> double time_best_of(int reps, F&& f) {
    using clock = std::chrono::steady_clock;
    double best = 1e300;
    for (int i = 0; i < reps; ++i) {
        auto t0 = clock::now();
        f();
        best = std::min(best,
                        std::chrono::duration<double>(clock::now() - t0).count());
    }
    return best;
}

volatile double sink;

} // namespace

int main() {
    std::printf("threads: %d\n\n", thread_count());

    std::printf("%-28s %10s %10s %8s\n", "kernel", "serial", "parallel", "speedup");
    for (size_t n : {2000, 8000, 32000}) {
        auto a = random_vector(n, 1), b = random_vector(n, 2);
        int out = static_cast<int>(2 * n - 1);
        double ts = time_best_of(3, [&] { sink = convolve_serial(a, b, out).back(); });
        double tp = time_best_of(3, [&] { sink = convolve_parallel(a, b, out).back(); });
        std::printf("%-28s %9.4fs %9.4fs %7.2fx\n",
                    ("convolve n=" + std::to_string(n)).c_str(), ts, tp, ts / tp);
    }
    for (size_t n : {1000000, 10000000}) {
        auto a = random_vector(n, 3), b = random_vector(n, 4);
        double ts = time_best_of(5, [&] { sink = dot_serial(a, b); });
        double tp = time_best_of(5, [&] { sink = dot_omp_reduction(a, b); });
        std::printf("%-28s %9.4fs %9.4fs %7.2fx\n",
                    ("dot n=" + std::to_string(n)).c_str(), ts, tp, ts / tp);
    }
    return 0;
}
