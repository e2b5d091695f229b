#pragma once

#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "tforge/series.hpp"

namespace tforge {

// Supplies g^(k)(x0) for arbitrary k >= 0, plus pointwise evaluation for
// closed-form work. Three kinds: a named registry entry, explicit Taylor
// coefficients (zero beyond their order, with the truncation recorded),
// or a plain polynomial differentiated on demand.
class DerivativeOracle {
public:
    static DerivativeOracle named(const std::string& name);
    static DerivativeOracle constant(double value);
    static DerivativeOracle monomial(int power);
    static DerivativeOracle explicit_coeffs(TaylorSeries series);
    static DerivativeOracle polynomial(Polynomial p);

    // g^(k)(x).
    double derivative_at(int k, double x) const;
    // g(x).
    double value_at(double x) const { return derivative_at(0, x); }

    // True for explicit-coefficients oracles, whose derivatives are zero
    // beyond the supplied order: silently a different ODE, so surfaced.
    bool truncated() const { return truncated_order_ >= 0; }
    int truncated_order() const { return truncated_order_; }
    const std::string& description() const { return description_; }

private:
    DerivativeOracle() = default;
    std::function<double(int, double)> fn_;
    int truncated_order_ = -1;
    std::string description_;
};

// Problem statement for the general linear implicit equation
// f = g_1 f' + g_2 f'' + ... + g_n f^(n) with initial values b_1..b_n at x0.
struct LinearImplicitODE {
    int n;
    std::vector<DerivativeOracle> g; // g[j-1] answers for g_j
    double x0;
    std::vector<double> initial;     // b_1..b_n

    LinearImplicitODE(int n_, std::vector<DerivativeOracle> g_, double x0_,
                      std::vector<double> initial_);
};

struct ClosedFormSolution {
    std::string description;
    std::function<double(double)> evaluator;
};

inline constexpr int kTheorem1MaxOrder = 200;
inline constexpr double kNearSingularThreshold = 1e-12;

// Extends the derivative stream b_0..b_{n+M} by the implicit-ODE
// recurrence; b_0 = sum_j b_j g_j(x0).
DerivativeStream theorem1_extend(const LinearImplicitODE& problem, int M);

struct GaussianCdfSolution {
    TaylorSeries series;
    std::vector<Polynomial> ladder; // ladder[k-1] = P_k, k = 1..N
};

// Phi' = D exp(-x^2/2), Phi(0) = 1/2, via the polynomial ladder
// P_k = -x P_{k-1} + P_{k-1}'.
GaussianCdfSolution solve_gaussian_cdf(int N);

std::pair<TaylorSeries, ClosedFormSolution>
solve_newton_cooling(double L, double Ta, double c, int N);

// f'' = -M f, f(0) = c, f'(0) = d; M > 0.
std::pair<TaylorSeries, ClosedFormSolution>
solve_harmonic(double M, double c, double d, int N);

// f'' + f' = -sin x, f(0) = c, f'(0) = d.
std::pair<TaylorSeries, ClosedFormSolution>
solve_nonhomogeneous(double c, double d, int N);

// f'' = (c+d) f' - c d f, f(0) = 0, f'(0) = B; c != d, |d| < |c|.
std::pair<TaylorSeries, ClosedFormSolution>
solve_homogeneous_const(double B, double c, double d, int N);

// e_k(x) = sum_{l>=1} x^{lk}/(lk)!, truncated when a term drops below
// 1e-16 relative. `terms` is the starting term budget; it auto-extends.
double eval_ek(int k, double x, int terms = 8);
// j-th derivative of e_k, same truncation rule.
double eval_ek_derivative(int k, int j, double x, int terms = 8);

inline constexpr int kExpInvSqDerivativeCap = 150;

struct ExpInvSqStream {
    DerivativeStream stream;
    std::vector<LaurentPolynomial> ladder; // ladder[k-1] = g_k, k = 1..K
};

// Raw derivatives of exp(-1/x^2) at x0 != 0 through order K <= 150 via
// the Laurent ladder g_{k+1} = g_k' + g_k * (2 u^3).
ExpInvSqStream expinvsq_derivative_stream(double x0, int K);

// Taylor series of exp(-1/x^2) about x0 to order N (N <= 4000), built by
// composing inverse_square_series with exp_of_series. The result carries
// scale = |x0| so deep coefficient tails stay representable. A built-in
// self-check compares the first 20 coefficients against the Laurent
// ladder unless skipped.
TaylorSeries expinvsq_taylor(double x0, int N, bool self_check = true);

} // namespace tforge
