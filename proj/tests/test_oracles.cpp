#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "tforge/errors.hpp"
#include "tforge/oracles.hpp"

using namespace tforge;
using namespace tforge::oracles;

TEST_CASE("normal_cdf_reference") {
    CHECK(normal_cdf_reference(0.0) == 0.5);
    CHECK(std::fabs(normal_cdf_reference(1.0) - 0.8413447) < 5e-8);
    CHECK(std::fabs(normal_cdf_reference(-2.8) - 0.0025551) < 5e-8);
    CHECK_THROWS_AS(normal_cdf_reference(8.5), NumericError);
}

TEST_CASE("normal_cdf_reference parity on a 50-point grid") {
    for (int i = 0; i < 50; ++i) {
        double x = -7.0 + 14.0 * i / 49.0;
        CHECK(std::fabs(normal_cdf_reference(x) + normal_cdf_reference(-x) - 1.0) <=
              1e-12);
    }
}

TEST_CASE("registry self-certification") {
    CHECK(verify_registry().empty());
}

TEST_CASE("closed_form lookups") {
    CHECK(closed_form("exp_sum", {0.0, 0.0}) == 1.0);
    CHECK(std::fabs(closed_form("expinvsq", {1.0}) - 0.367879) < 1e-6);
    CHECK(closed_form("geometric2", {0.3, 0.2}) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK_THROWS_AS(closed_form("nope", {0.0}), NumericError);
    CHECK_THROWS_AS(closed_form("geometric2", {0.5, 0.5}), NumericError);
}

TEST_CASE("finite_difference_jet") {
    SUBCASE("exp second derivative at 0") {
        double d = finite_difference_jet([](double x) { return std::exp(x); }, 0.0, 2);
        CHECK(std::fabs(d - 1.0) < 1e-6);
    }
    SUBCASE("exp(-1/x^2) first derivative at 1") {
        double d = finite_difference_jet(
            [](double x) { return std::exp(-1.0 / (x * x)); }, 1.0, 1);
        CHECK(std::fabs(d - 2.0 * std::exp(-1.0)) < 1e-5);
    }
    SUBCASE("e^{sin y - cos x} along x at (0, pi/2)") {
        double d = finite_difference_jet(
            [](double x) { return std::exp(std::sin(M_PI / 2.0) - std::cos(x)); }, 0.0,
            1);
        CHECK(std::fabs(d) < 1e-6);
    }
    SUBCASE("third and fourth derivatives of sin at 0") {
        double d3 = finite_difference_jet([](double x) { return std::sin(x); }, 0.0, 3);
        CHECK(std::fabs(d3 + 1.0) < 1e-5);
        double d4 = finite_difference_jet([](double x) { return std::sin(x); }, 0.0, 4);
        CHECK(std::fabs(d4) < 1e-5);
    }
    SUBCASE("k out of range") {
        CHECK_THROWS_AS(finite_difference_jet([](double x) { return x; }, 0.0, 5),
                        NumericError);
    }
}
