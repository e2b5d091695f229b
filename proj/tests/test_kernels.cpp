#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "tforge/kernels.hpp"

using namespace tforge;
using namespace tforge::kernels;

namespace {

std::vector<double> random_vector(size_t n, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<double> v(n);
    for (double& x : v) x = dist(rng);
    return v;
}

} // namespace

TEST_CASE("convolution: parallel is bitwise equal to serial") {
    auto a = random_vector(700, 1), b = random_vector(900, 2);
    auto s = convolve_serial(a, b, 1500);
    auto p = convolve_parallel(a, b, 1500);
    REQUIRE(s.size() == p.size());
    for (size_t i = 0; i < s.size(); ++i) CHECK(s[i] == p[i]);
}

TEST_CASE("convolution small cases") {
    auto r = convolve_serial({1.0, 1.0}, {1.0, 1.0}, 3);
    CHECK(r == std::vector<double>{1.0, 2.0, 1.0});
    CHECK_THROWS_AS(convolve_serial({}, {1.0}, 1), NumericError);
}

TEST_CASE("dot: reduction agrees with serial to roundoff") {
    auto a = random_vector(100000, 3), b = random_vector(100000, 4);
    double s = dot_serial(a, b);
    double p = dot_omp_reduction(a, b);
    double norm = 0.0;
    for (size_t i = 0; i < a.size(); ++i) norm += std::fabs(a[i] * b[i]);
    CHECK(std::fabs(s - p) <= 1e-13 * std::max(1.0, norm));
    CHECK_THROWS_AS(dot_serial({1.0}, {1.0, 2.0}), NumericError);
}

TEST_CASE("parallel_map is deterministic and ordered") {
    auto out = parallel_map(257, [](int i) { return std::sin(0.1 * i); });
    for (int i = 0; i < 257; ++i) CHECK(out[static_cast<size_t>(i)] == std::sin(0.1 * i));
}

TEST_CASE("parallel_map propagates exceptions") {
    CHECK_THROWS_AS(parallel_map(64,
                                 [](int i) -> double {
                                     if (i == 13) throw NumericError("boom");
                                     return 0.0;
                                 }),
                    NumericError);
}

TEST_CASE("thread_count is positive") {
    CHECK(thread_count() >= 1);
}
