#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "tforge/multivar.hpp"
#include "tforge/ode.hpp"
#include "tforge/radius.hpp"

using namespace tforge;

namespace {

double fd_x(const std::function<double(double, double)>& f, double x, double y) {
    const double h = 1e-5;
    return (f(x + h, y) - f(x - h, y)) / (2.0 * h);
}

double fd_y(const std::function<double(double, double)>& f, double x, double y) {
    const double h = 1e-5;
    return (f(x, y + h) - f(x, y - h)) / (2.0 * h);
}

} // namespace

TEST_CASE("pde_exp_sum") {
    MultiTaylor m = pde_exp_sum(20);
    CHECK(m.coeff({{0, 0}}) == 1.0);
    CHECK(m.coeff({{2, 3}}) == doctest::Approx(1.0 / 12.0).epsilon(1e-15));
    CHECK(std::fabs(eval_multitaylor(m, {0.3, 0.4}, 20) - std::exp(0.7)) < 1e-10);
}

TEST_CASE("pde_exp_product") {
    MultiTaylor m = pde_exp_product(20);
    // d^4/dy^2 dx^2 at 0 = C_{2,2} * 2! * 2! = 2.
    CHECK(m.coeff({{2, 2}}) * 4.0 == 2.0);
    CHECK(m.coeff({{1, 2}}) == 0.0);
    CHECK(std::fabs(eval_multitaylor(m, {0.5, 0.5}, 20) - std::exp(0.25)) < 1e-10);
}

TEST_CASE("pde_geometric") {
    MultiTaylor m = pde_geometric(60);
    CHECK(m.coeff({{1, 1}}) == 2.0);
    SUBCASE("row sums are powers of two") {
        for (int n = 0; n <= 30; ++n) {
            double sum = 0.0;
            for (int j = 0; j <= n; ++j) sum += m.coeff({{j, n - j}});
            CHECK(sum == std::pow(2.0, n));
        }
    }
    SUBCASE("partial sum inside the domain") {
        CHECK(std::fabs(eval_multitaylor(m, {0.2, 0.3}, 60) - 2.0) < 1e-8);
    }
}

TEST_CASE("symmetry: C_jk == C_kj exactly") {
    MultiTaylor a = pde_exp_sum(25), g = pde_geometric(25);
    for (int j = 0; j <= 25; ++j) {
        for (int k = 0; j + k <= 25; ++k) {
            CHECK(a.coeff({{j, k}}) == a.coeff({{k, j}}));
            CHECK(g.coeff({{j, k}}) == g.coeff({{k, j}}));
        }
    }
}

TEST_CASE("advection_residual") {
    SUBCASE("exp prefix") {
        TaylorSeries g = exp_series(0.0, 30, 1.0);
        std::vector<std::pair<double, double>> grid;
        for (int i = 0; i < 5; ++i) {
            for (int j = 0; j < 5; ++j) {
                grid.emplace_back(-0.3 + 0.15 * i, -0.3 + 0.15 * j);
            }
        }
        CHECK(advection_residual(g, {0.0, 0.0}, grid) <= 1e-7);
    }
    SUBCASE("constant series") {
        TaylorSeries g(0.0, {4.5});
        CHECK(advection_residual(g, {0.0, 0.0}, {{0.1, -0.2}, {0.0, 0.0}}) <= 1e-10);
    }
    SUBCASE("cubic polynomial series") {
        TaylorSeries g(0.0, {1.0, -2.0, 0.5, 0.25});
        std::vector<std::pair<double, double>> grid;
        for (int i = 0; i < 5; ++i) grid.emplace_back(0.1 * i, -0.05 * i);
        CHECK(advection_residual(g, {0.0, 0.0}, grid) <= 1e-8);
    }
    SUBCASE("grid outside the trust region") {
        TaylorSeries g(0.0, {1.0, 1.0});
        CHECK_THROWS_AS(advection_residual(g, {0.0, 0.0}, {{1.0, 0.5}}), NumericError);
    }
}

TEST_CASE("lemma5_solve") {
    SUBCASE("zero oracles, constant surface") {
        SeparablePDEProblem p{DerivativeOracle::constant(0.0),
                              DerivativeOracle::constant(0.0), 0.0, 0.0, 5.0};
        auto [m, cf] = lemma5_solve(p, 8);
        CHECK(m.coeff({{0, 0}}) == 5.0);
        for (const auto& [alpha, c] : m.coeffs()) {
            if (alpha.size() > 0) CHECK(c == 0.0);
        }
        CHECK(cf.evaluator(0.7, -0.3) == doctest::Approx(5.0).epsilon(1e-12));
    }
    SUBCASE("unit constant oracles match pde_exp_sum") {
        SeparablePDEProblem p{DerivativeOracle::constant(1.0),
                              DerivativeOracle::constant(1.0), 0.0, 0.0, 1.0};
        auto [m, cf] = lemma5_solve(p, 12);
        MultiTaylor ref = pde_exp_sum(12);
        for (int j = 0; j <= 12; ++j) {
            for (int k = 0; j + k <= 12; ++k) {
                CHECK(m.coeff({{j, k}}) ==
                      doctest::Approx(ref.coeff({{j, k}})).epsilon(1e-13));
            }
        }
    }
    SUBCASE("sin/cos fourth derivatives are exact integers") {
        SeparablePDEProblem p{DerivativeOracle::named("sin"),
                              DerivativeOracle::named("cos"), 0.0, M_PI / 2.0, 1.0};
        auto [m, cf] = lemma5_solve(p, 8);
        CHECK(m.coeff({{4, 0}}) * 24.0 == 2.0);
        CHECK(m.coeff({{0, 4}}) * 24.0 == 4.0);
    }
    SUBCASE("degenerate C") {
        SeparablePDEProblem p{DerivativeOracle::constant(1.0),
                              DerivativeOracle::constant(1.0), 0.0, 0.0, 0.0};
        CHECK_THROWS_AS(lemma5_solve(p, 4), NumericError);
    }
}

TEST_CASE("lemma5 closed form: quadrature vs exact antiderivatives") {
    SeparablePDEProblem p{DerivativeOracle::named("sin"),
                          DerivativeOracle::named("cos"), 0.0, M_PI / 2.0, 1.0};
    auto [m, cf] = lemma5_solve(p, 4);
    // int_0^x sin = 1 - cos(x); int_{pi/2}^y cos = sin(y) - 1.
    for (double x : {-0.5, 0.0, 0.8, 1.0}) {
        for (double y : {1.0, M_PI / 2.0, 2.0}) {
            double exact = std::exp(1.0 - std::cos(x)) * std::exp(std::sin(y) - 1.0);
            CHECK(std::fabs(cf.evaluator(x, y) - exact) < 1e-10 * exact);
        }
    }
}

TEST_CASE("separability: C_jk * C == C_j0 * C_0k") {
    SeparablePDEProblem p{DerivativeOracle::named("sin"),
                          DerivativeOracle::named("cos"), 0.0, M_PI / 2.0, 2.5};
    auto [m, cf] = lemma5_solve(p, 14);
    for (int j = 0; j <= 14; ++j) {
        for (int k = 0; j + k <= 14; ++k) {
            double lhs = m.coeff({{j, k}}) * 2.5;
            double rhs = m.coeff({{j, 0}}) * m.coeff({{0, k}});
            CHECK(std::fabs(lhs - rhs) <=
                  1e-10 * std::max({1e-300, std::fabs(lhs), std::fabs(rhs)}));
        }
    }
}

TEST_CASE("PDE residuals by finite differences") {
    std::vector<std::pair<double, double>> offsets;
    for (int i = -1; i <= 1; ++i) {
        for (int j = -1; j <= 1; ++j) offsets.emplace_back(0.3 * i, 0.3 * j);
    }
    SUBCASE("lemma5: f_x = g f and f_y = h f") {
        SeparablePDEProblem p{DerivativeOracle::named("sin"),
                              DerivativeOracle::named("cos"), 0.0, M_PI / 2.0, 1.0};
        auto [m, cf] = lemma5_solve(p, 16);
        auto f = [&m](double x, double y) {
            return eval_multitaylor(m, {x, y}, 16);
        };
        for (auto [dx, dy] : offsets) {
            double x = dx, y = M_PI / 2.0 + dy;
            CHECK(std::fabs(fd_x(f, x, y) - std::sin(x) * f(x, y)) <= 1e-6);
            CHECK(std::fabs(fd_y(f, x, y) - std::cos(y) * f(x, y)) <= 1e-6);
        }
    }
    SUBCASE("exp_product: f_x = y f") {
        MultiTaylor m = pde_exp_product(24);
        auto f = [&m](double x, double y) {
            return eval_multitaylor(m, {x, y}, 24);
        };
        for (auto [x, y] : offsets) {
            CHECK(std::fabs(fd_x(f, x, y) - y * f(x, y)) <= 1e-6);
        }
    }
    SUBCASE("geometric: f_x = f^2") {
        MultiTaylor m = pde_geometric(60);
        auto f = [&m](double x, double y) {
            return eval_multitaylor(m, {x, y}, 60);
        };
        for (auto [x, y] : offsets) {
            if (std::fabs(x + y) > 0.4) continue;
            double v = f(x, y);
            CHECK(std::fabs(fd_x(f, x, y) - v * v) <= 1e-5);
        }
    }
}

TEST_CASE("example_423_p4") {
    SUBCASE("center value") {
        CHECK(example_423_p4(0.0, M_PI / 2.0) == 1.0);
    }
    SUBCASE("displayed closed form at (1,1)") {
        double u = 1.0 - M_PI / 2.0;
        double expect = 19.0 / 12.0 - 19.0 / 24.0 * u * u +
                        19.0 / 72.0 * u * u * u * u;
        CHECK(std::fabs(example_423_p4(1.0, 1.0) - expect) < 1e-12);
        CHECK(std::fabs(example_423_p4(1.0, 1.0) - 1.353414) < 1e-6);
    }
    SUBCASE("matches the lemma5 tensor partial sum") {
        SeparablePDEProblem p{DerivativeOracle::named("sin"),
                              DerivativeOracle::named("cos"), 0.0, M_PI / 2.0, 1.0};
        auto [m, cf] = lemma5_solve(p, 8);
        for (double x : {0.0, 0.5, 1.0, -0.7}) {
            for (double y : {1.0, M_PI / 2.0, 2.2}) {
                double u = y - M_PI / 2.0;
                double tensor = 0.0;
                for (int j = 4; j >= 0; --j) {
                    double row = 0.0;
                    for (int k = 4; k >= 0; --k) {
                        row = row * u + m.coeff({{j, k}});
                    }
                    tensor = tensor * x + row;
                }
                CHECK(std::fabs(tensor - example_423_p4(x, y)) < 1e-12);
            }
        }
    }
}

TEST_CASE("eval_multitaylor") {
    SUBCASE("center returns the constant coefficient") {
        MultiTaylor m = pde_geometric(10);
        CHECK(eval_multitaylor(m, {0.0, 0.0}, 10) == 1.0);
    }
    SUBCASE("geometric at (0.25, 0.25)") {
        MultiTaylor m = pde_geometric(50);
        CHECK(std::fabs(eval_multitaylor(m, {0.25, 0.25}, 50) - 2.0) < 1e-6);
    }
    SUBCASE("lemma5 sin/cos partial sum approaches the closed form") {
        SeparablePDEProblem p{DerivativeOracle::named("sin"),
                              DerivativeOracle::named("cos"), 0.0, M_PI / 2.0, 1.0};
        auto [m, cf] = lemma5_solve(p, 12);
        double expect = std::exp(std::sin(1.0) - std::cos(1.0));
        CHECK(std::fabs(eval_multitaylor(m, {1.0, 1.0}, 12) - expect) < 1e-4);
    }
    SUBCASE("errors") {
        MultiTaylor m = pde_geometric(10);
        CHECK_THROWS_AS(eval_multitaylor(m, {0.0, 0.0}, 11), NumericError);
        CHECK_THROWS_AS(eval_multitaylor(m, {0.0, 0.0, 0.0}, 5), NumericError);
    }
}

TEST_CASE("diagonal consistency: explicit factorials vs log-gamma") {
    std::vector<int> ks;
    for (int k = 1; k <= 50; ++k) ks.push_back(k);
    auto seq = multivariate_diagonal_sequence(3, ks);
    for (int k = 1; k <= 50; ++k) {
        // log C_{kkk} = sum_{i=1}^{3k} ln i - 3 sum_{i=1}^{k} ln i.
        double log_full = 0.0, log_part = 0.0;
        for (int i = 1; i <= 3 * k; ++i) log_full += std::log(static_cast<double>(i));
        for (int i = 1; i <= k; ++i) log_part += std::log(static_cast<double>(i));
        double explicit_log = (log_full - 3.0 * log_part) / (3.0 * k);
        double gamma_log = std::log(seq[static_cast<size_t>(k) - 1].second);
        CHECK(std::fabs(explicit_log - gamma_log) <=
              1e-12 * std::max(1.0, std::fabs(explicit_log)));
    }
}

TEST_CASE("MultiTaylor validation") {
    MultiTaylor m({0.0, 0.0}, 4);
    CHECK_THROWS_AS(m.set_coeff({{3, 2}}, 1.0), NumericError);
    CHECK_THROWS_AS(m.set_coeff({{1, 1, 1}}, 1.0), NumericError);
    CHECK_THROWS_AS(m.set_coeff({{1, 1}}, std::nan("")), NumericError);
    m.set_coeff({{1, 1}}, 2.0);
    m.set_coeff({{1, 1}}, 0.0);
    CHECK(m.coeffs().empty());
}
