#include "tforge/ode.hpp"

#include <cmath>

namespace tforge {

DerivativeOracle DerivativeOracle::named(const std::string& name) {
    DerivativeOracle o;
    o.description_ = name;
    if (name == "sin") {
        o.fn_ = [](int k, double x) {
            switch (k % 4) {
                case 0: return std::sin(x);
                case 1: return std::cos(x);
                case 2: return -std::sin(x);
                default: return -std::cos(x);
            }
        };
    } else if (name == "cos") {
        o.fn_ = [](int k, double x) {
            switch (k % 4) {
                case 0: return std::cos(x);
                case 1: return -std::sin(x);
                case 2: return -std::cos(x);
                default: return std::sin(x);
            }
        };
    } else if (name == "exp") {
        o.fn_ = [](int, double x) { return std::exp(x); };
    } else {
        throw NumericError("DerivativeOracle: unknown named function '" + name + "'");
    }
    return o;
}

DerivativeOracle DerivativeOracle::constant(double value) {
    DerivativeOracle o;
    o.description_ = "constant";
    o.fn_ = [value](int k, double) { return k == 0 ? value : 0.0; };
    return o;
}

DerivativeOracle DerivativeOracle::monomial(int power) {
    if (power < 0) throw NumericError("DerivativeOracle: negative monomial power");
    DerivativeOracle o;
    o.description_ = "monomial";
    o.fn_ = [power](int k, double x) {
        if (k > power) return 0.0;
        double c = 1.0;
        for (int i = 0; i < k; ++i) c *= static_cast<double>(power - i);
        return c * std::pow(x, power - k);
    };
    return o;
}

DerivativeOracle DerivativeOracle::explicit_coeffs(TaylorSeries series) {
    DerivativeOracle o;
    o.description_ = "explicit";
    o.truncated_order_ = series.order();
    auto s = std::make_shared<TaylorSeries>(std::move(series));
    o.fn_ = [s](int k, double x) {
        if (k > s->order()) return 0.0;
        if (x == s->center()) {
            // b_k = c_k * k!, incremental product.
            double v = s->stored(k);
            for (int i = 2; i <= k; ++i) v *= static_cast<double>(i);
            return v;
        }
        TaylorSeries d = *s;
        for (int i = 0; i < k; ++i) d = differentiate(d);
        return eval_partial_sum(d, x, d.order());
    };
    return o;
}

DerivativeOracle DerivativeOracle::polynomial(Polynomial p) {
    DerivativeOracle o;
    o.description_ = "polynomial";
    auto base = std::make_shared<Polynomial>(std::move(p));
    o.fn_ = [base](int k, double x) {
        Polynomial d = *base;
        for (int i = 0; i < k && !d.is_zero(); ++i) d = d.derivative();
        return d.eval(x);
    };
    return o;
}

double DerivativeOracle::derivative_at(int k, double x) const {
    if (k < 0) throw NumericError("DerivativeOracle: negative derivative order");
    return fn_(k, x);
}

LinearImplicitODE::LinearImplicitODE(int n_, std::vector<DerivativeOracle> g_,
                                     double x0_, std::vector<double> initial_)
    : n(n_), g(std::move(g_)), x0(x0_), initial(std::move(initial_)) {
    if (n < 1) throw NumericError("LinearImplicitODE: n must be positive");
    if (static_cast<int>(g.size()) != n || static_cast<int>(initial.size()) != n) {
        throw NumericError("LinearImplicitODE: need exactly n oracles and n initial values");
    }
    double gn = g.back().value_at(x0);
    if (std::fabs(gn) < kNearSingularThreshold) {
        throw NumericError("LinearImplicitODE: leading coefficient g_n(x0) is "
                           "zero or near-singular");
    }
}

namespace {

// b_{n+m} from the materialized prefix b_0..b_{n+m-1}.
double implicit_next(const LinearImplicitODE& p, const std::vector<double>& b) {
    const int n = p.n;
    const int m = static_cast<int>(b.size()) - 1 - n + 1; // next index is n+m
    const double gn = p.g.back().value_at(p.x0);
    double acc = b[static_cast<size_t>(m)];
    for (int j = 1; j <= n - 1; ++j) {
        acc -= b[static_cast<size_t>(j + m)] * p.g[static_cast<size_t>(j) - 1].value_at(p.x0);
    }
    std::vector<double> binom = pascal_row(m);
    for (int k = 1; k <= m; ++k) {
        double inner = 0.0;
        for (int j = 1; j <= n; ++j) {
            inner += b[static_cast<size_t>(j + m - k)] *
                     p.g[static_cast<size_t>(j) - 1].derivative_at(k, p.x0);
        }
        acc -= binom[static_cast<size_t>(k)] * inner;
    }
    return acc / gn;
}

} // namespace

DerivativeStream theorem1_extend(const LinearImplicitODE& problem, int M) {
    if (M < 1 || M > kTheorem1MaxOrder) {
        throw NumericError("theorem1_extend: M out of range [1, " +
                           std::to_string(kTheorem1MaxOrder) + "]");
    }
    const int n = problem.n;
    std::vector<double> b(static_cast<size_t>(n) + 1, 0.0);
    double b0 = 0.0;
    for (int j = 1; j <= n; ++j) {
        b[static_cast<size_t>(j)] = problem.initial[static_cast<size_t>(j) - 1];
        b0 += problem.initial[static_cast<size_t>(j) - 1] *
              problem.g[static_cast<size_t>(j) - 1].value_at(problem.x0);
    }
    b[0] = b0;
    for (int m = 1; m <= M; ++m) {
        double next = implicit_next(problem, b);
        if (!std::isfinite(next)) {
            throw NumericError("theorem1_extend: overflow at index " +
                               std::to_string(n + m));
        }
        b.push_back(next);
    }
    auto extender = [problem](const std::vector<double>& prefix) {
        return implicit_next(problem, prefix);
    };
    return DerivativeStream(problem.x0, std::move(b), extender);
}

GaussianCdfSolution solve_gaussian_cdf(int N) {
    if (N < 2) throw NumericError("solve_gaussian_cdf: N must be >= 2");
    const double D = 1.0 / std::sqrt(2.0 * M_PI);
    std::vector<Polynomial> ladder;
    ladder.reserve(static_cast<size_t>(N));
    ladder.emplace_back(std::vector<double>{1.0});        // P_1
    ladder.emplace_back(std::vector<double>{0.0, -1.0});  // P_2
    for (int k = 3; k <= N; ++k) {
        const Polynomial& prev = ladder.back();
        ladder.push_back(Polynomial({0.0, -1.0}) * prev + prev.derivative());
    }
    std::vector<double> b(static_cast<size_t>(N) + 1);
    b[0] = 0.5;
    for (int k = 1; k <= N; ++k) {
        b[static_cast<size_t>(k)] = D * ladder[static_cast<size_t>(k) - 1].eval(0.0);
    }
    return {normalize(DerivativeStream(0.0, std::move(b))), std::move(ladder)};
}

std::pair<TaylorSeries, ClosedFormSolution>
solve_newton_cooling(double L, double Ta, double c, int N) {
    std::vector<double> b(static_cast<size_t>(N) + 1);
    b[0] = c;
    double v = c - Ta;
    for (int k = 1; k <= N; ++k) {
        v *= L;
        b[static_cast<size_t>(k)] = v;
    }
    ClosedFormSolution cf{"(c-Ta)*exp(L*t) + Ta",
                          [L, Ta, c](double t) { return (c - Ta) * std::exp(L * t) + Ta; }};
    return {normalize(DerivativeStream(0.0, std::move(b))), std::move(cf)};
}

std::pair<TaylorSeries, ClosedFormSolution>
solve_harmonic(double M, double c, double d, int N) {
    if (M <= 0.0) throw NumericError("solve_harmonic: M must be positive");
    std::vector<double> b(static_cast<size_t>(N) + 1);
    double even = c, odd = d; // (-M)^n c and (-M)^n d
    for (int k = 0; k <= N; ++k) {
        if (k % 2 == 0) {
            if (k >= 2) even *= -M;
            b[static_cast<size_t>(k)] = even;
        } else {
            if (k >= 3) odd *= -M;
            b[static_cast<size_t>(k)] = odd;
        }
    }
    double rootM = std::sqrt(M);
    ClosedFormSolution cf{"c*cos(sqrt(M)t) + d/sqrt(M)*sin(sqrt(M)t)",
                          [rootM, c, d](double t) {
                              return c * std::cos(rootM * t) + d / rootM * std::sin(rootM * t);
                          }};
    return {normalize(DerivativeStream(0.0, std::move(b))), std::move(cf)};
}

std::pair<TaylorSeries, ClosedFormSolution>
solve_nonhomogeneous(double c, double d, int N) {
    std::vector<double> b(static_cast<size_t>(N) + 1);
    b[0] = c;
    const double pattern[4] = {d, -d, d - 1.0, -d + 1.0};
    for (int k = 1; k <= N; ++k) b[static_cast<size_t>(k)] = pattern[(k - 1) % 4];
    const double C1 = d - 0.5;
    const double C2 = c + C1 - 0.5;
    ClosedFormSolution cf{"C2 - C1*exp(-x) + (cos(x)+sin(x))/2",
                          [C1, C2](double x) {
                              return C2 - C1 * std::exp(-x) + 0.5 * (std::cos(x) + std::sin(x));
                          }};
    return {normalize(DerivativeStream(0.0, std::move(b))), std::move(cf)};
}

std::pair<TaylorSeries, ClosedFormSolution>
solve_homogeneous_const(double B, double c, double d, int N) {
    if (c == d) throw NumericError("solve_homogeneous_const: degenerate c == d");
    if (std::fabs(d) >= std::fabs(c)) {
        throw NumericError("solve_homogeneous_const: requires |d| < |c|");
    }
    std::vector<double> b(static_cast<size_t>(N) + 1, 0.0);
    // b_k = B * sum_{j=0}^{k-1} c^{(k-1)-j} d^j, via s_k = c s_{k-1} + d^{k-1}.
    double s = 0.0, dpow = 1.0;
    for (int k = 1; k <= N; ++k) {
        s = c * s + dpow;
        dpow *= d;
        b[static_cast<size_t>(k)] = B * s;
        if (!std::isfinite(b[static_cast<size_t>(k)])) {
            throw NumericError("solve_homogeneous_const: overflow at k = " +
                               std::to_string(k));
        }
    }
    ClosedFormSolution cf{"B/(c-d)*(exp(c x) - exp(d x))",
                          [B, c, d](double x) {
                              return B / (c - d) * (std::exp(c * x) - std::exp(d * x));
                          }};
    return {normalize(DerivativeStream(0.0, std::move(b))), std::move(cf)};
}

double eval_ek(int k, double x, int terms) { return eval_ek_derivative(k, 0, x, terms); }

double eval_ek_derivative(int k, int j, double x, int terms) {
    if (k < 1) throw NumericError("eval_ek: k must be a positive integer");
    if (j < 0) throw NumericError("eval_ek: negative derivative order");
    if (x == 0.0) {
        // Only a term with exponent lk - j = 0 survives at x = 0.
        return j > 0 && j % k == 0 ? 1.0 : 0.0;
    }
    // First l with lk - j >= 0.
    int l = (j + k - 1) / k;
    if (l < 1) l = 1;
    int e = l * k - j;
    double term = 1.0;
    for (int i = 1; i <= e; ++i) term *= x / static_cast<double>(i);
    double sum = 0.0;
    int done = 0;
    for (;;) {
        sum += term;
        ++done;
        if (done >= terms &&
            std::fabs(term) < 1e-16 * std::max(1.0, std::fabs(sum))) break;
        for (int i = e + 1; i <= e + k; ++i) term *= x / static_cast<double>(i);
        e += k;
        if (e > 100000) break; // convergence is factorial; this never triggers
    }
    return sum;
}

ExpInvSqStream expinvsq_derivative_stream(double x0, int K) {
    if (x0 == 0.0) {
        throw NumericError("expinvsq_derivative_stream: singular center x0 = 0");
    }
    if (K < 1 || K > kExpInvSqDerivativeCap) {
        throw NumericError("expinvsq_derivative_stream: K out of range; raw "
                           "derivatives overflow past " +
                           std::to_string(kExpInvSqDerivativeCap) +
                           ", use expinvsq_taylor for larger orders");
    }
    const LaurentPolynomial h1({{3, 2.0}}); // h'(x) = 2/x^3
    std::vector<LaurentPolynomial> ladder;
    ladder.reserve(static_cast<size_t>(K));
    ladder.push_back(h1); // g_1 = 2 u^3
    for (int k = 2; k <= K; ++k) {
        const LaurentPolynomial& g = ladder.back();
        ladder.push_back(laurent_differentiate(g) + g * h1);
    }
    const double u = 1.0 / x0;
    const double f0 = std::exp(-u * u);
    std::vector<double> b(static_cast<size_t>(K) + 1);
    b[0] = f0;
    for (int k = 1; k <= K; ++k) {
        b[static_cast<size_t>(k)] = f0 * ladder[static_cast<size_t>(k) - 1].eval_at_u(u);
        if (!std::isfinite(b[static_cast<size_t>(k)])) {
            throw NumericError("expinvsq_derivative_stream: overflow at k = " +
                               std::to_string(k));
        }
    }
    return {DerivativeStream(x0, std::move(b)), std::move(ladder)};
}

TaylorSeries expinvsq_taylor(double x0, int N, bool self_check) {
    if (x0 == 0.0) throw NumericError("expinvsq_taylor: singular center x0 = 0");
    if (N < 1 || N > 4000) throw NumericError("expinvsq_taylor: N out of range [1, 4000]");
    const double scale = std::fabs(x0);
    TaylorSeries f = exp_of_series(inverse_square_series(x0, N, scale));
    if (self_check) {
        const int kmax = std::min(N, 20);
        TaylorSeries ref = normalize(expinvsq_derivative_stream(x0, kmax).stream);
        double spow = 1.0;
        for (int k = 0; k <= kmax; ++k) {
            double a = f.stored(k);
            double b = ref.stored(k) * spow;
            if (std::fabs(a - b) > 1e-9 * std::max({1e-300, std::fabs(a), std::fabs(b)})) {
                throw NumericError("expinvsq_taylor: self-check mismatch at k = " +
                                   std::to_string(k));
            }
            spow *= scale;
        }
    }
    return f;
}

} // namespace tforge
