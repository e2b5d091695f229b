#include "tforge/multivar.hpp"

#include <algorithm>
#include <cmath>

#include "tforge/quadrature.hpp"

namespace tforge {

MultiTaylor::MultiTaylor(std::vector<double> center, int max_total_degree)
    : center_(std::move(center)), max_degree_(max_total_degree) {
    if (center_.empty()) throw NumericError("MultiTaylor: empty center");
    if (max_degree_ < 0) throw NumericError("MultiTaylor: negative degree cap");
}

double MultiTaylor::coeff(const MultiIndex& alpha) const {
    auto it = coeffs_.find(alpha);
    return it == coeffs_.end() ? 0.0 : it->second;
}

void MultiTaylor::set_coeff(MultiIndex alpha, double value) {
    if (alpha.dim() != static_cast<int>(center_.size())) {
        throw NumericError("MultiTaylor: index dimension mismatch");
    }
    if (alpha.size() > max_degree_) {
        throw NumericError("MultiTaylor: index above degree cap");
    }
    if (!std::isfinite(value)) throw NumericError("MultiTaylor: non-finite coefficient");
    if (value == 0.0) {
        coeffs_.erase(alpha);
    } else {
        coeffs_[std::move(alpha)] = value;
    }
}

MultiTaylor pde_exp_sum(int N) {
    MultiTaylor m({0.0, 0.0}, N);
    // A shared 1/j! table keeps C_jk = C_kj bitwise symmetric.
    std::vector<double> inv(static_cast<size_t>(N) + 1, 1.0);
    for (int j = 1; j <= N; ++j) {
        inv[static_cast<size_t>(j)] = inv[static_cast<size_t>(j) - 1] / j;
    }
    for (int j = 0; j <= N; ++j) {
        for (int k = 0; j + k <= N; ++k) {
            m.set_coeff({{j, k}},
                        inv[static_cast<size_t>(j)] * inv[static_cast<size_t>(k)]);
        }
    }
    return m;
}

MultiTaylor pde_exp_product(int N) {
    MultiTaylor m({0.0, 0.0}, N);
    double inv = 1.0;
    for (int j = 0; 2 * j <= N; ++j) {
        if (j > 0) inv /= j;
        m.set_coeff({{j, j}}, inv);
    }
    return m;
}

MultiTaylor pde_geometric(int N) {
    MultiTaylor m({0.0, 0.0}, N);
    // C_{jk} = C_{j-1,k} + C_{j,k-1}, built along anti-diagonals.
    std::vector<std::vector<double>> c(static_cast<size_t>(N) + 1);
    for (int j = 0; j <= N; ++j) {
        c[static_cast<size_t>(j)].assign(static_cast<size_t>(N - j) + 1, 0.0);
    }
    for (int j = 0; j <= N; ++j) {
        for (int k = 0; j + k <= N; ++k) {
            double v;
            if (j == 0 || k == 0) {
                v = 1.0;
            } else {
                v = c[static_cast<size_t>(j) - 1][static_cast<size_t>(k)] +
                    c[static_cast<size_t>(j)][static_cast<size_t>(k) - 1];
            }
            c[static_cast<size_t>(j)][static_cast<size_t>(k)] = v;
            m.set_coeff({{j, k}}, v);
        }
    }
    return m;
}

double advection_residual(const TaylorSeries& g_series,
                          std::pair<double, double> center,
                          const std::vector<std::pair<double, double>>& grid) {
    const double z0 = center.first + center.second;
    const double step = 1e-5;
    auto f = [&](double x, double y) {
        return eval_partial_sum(g_series, x + y, g_series.order());
    };
    double worst = 0.0;
    for (const auto& [x, y] : grid) {
        if (std::fabs(x + y - z0) > 1.0) {
            throw NumericError("advection_residual: grid point outside trust region");
        }
        double fx = (f(x + step, y) - f(x - step, y)) / (2.0 * step);
        double fy = (f(x, y + step) - f(x, y - step)) / (2.0 * step);
        worst = std::max(worst, std::fabs(fx - fy));
    }
    return worst;
}

namespace {

// b_{m+1} = sum_{k=0}^{m} C(m,k) g^{(m-k)}(x0) b_k, b_0 = C.
std::vector<double> separable_stream(const DerivativeOracle& g, double x0,
                                     double C, int N) {
    std::vector<double> b(static_cast<size_t>(N) + 1, 0.0);
    b[0] = C;
    for (int m = 0; m < N; ++m) {
        std::vector<double> binom = pascal_row(m);
        double acc = 0.0;
        for (int k = 0; k <= m; ++k) {
            acc += binom[static_cast<size_t>(k)] * g.derivative_at(m - k, x0) *
                   b[static_cast<size_t>(k)];
        }
        if (!std::isfinite(acc)) {
            throw NumericError("lemma5_solve: overflow extending derivative stream");
        }
        b[static_cast<size_t>(m) + 1] = acc;
    }
    return b;
}

} // namespace

std::pair<MultiTaylor, ClosedFormSurface>
lemma5_solve(const SeparablePDEProblem& problem, int N) {
    if (problem.C == 0.0) {
        throw NumericError("lemma5_solve: degenerate problem, C = 0");
    }
    std::vector<double> bx = separable_stream(problem.g, problem.x0, problem.C, N);
    std::vector<double> by = separable_stream(problem.h, problem.y0, problem.C, N);
    // Normalize in place: bx[j] / j!.
    double inv = 1.0;
    for (int j = 1; j <= N; ++j) {
        inv /= j;
        bx[static_cast<size_t>(j)] *= inv;
    }
    inv = 1.0;
    for (int k = 1; k <= N; ++k) {
        inv /= k;
        by[static_cast<size_t>(k)] *= inv;
    }
    MultiTaylor m({problem.x0, problem.y0}, N);
    for (int j = 0; j <= N; ++j) {
        for (int k = 0; j + k <= N; ++k) {
            m.set_coeff({{j, k}},
                        bx[static_cast<size_t>(j)] * by[static_cast<size_t>(k)] / problem.C);
        }
    }
    DerivativeOracle g = problem.g, h = problem.h;
    double x0 = problem.x0, y0 = problem.y0, C = problem.C;
    ClosedFormSurface cf{
        "C * exp(int g) * exp(int h)",
        [g, h, x0, y0, C](double x, double y) {
            double ig = integrate([&g](double t) { return g.value_at(t); }, x0, x);
            double ih = integrate([&h](double t) { return h.value_at(t); }, y0, y);
            return C * std::exp(ig) * std::exp(ih);
        }};
    return {std::move(m), std::move(cf)};
}

double example_423_p4(double x, double y) {
    double u = y - M_PI / 2.0;
    double px = 1.0 + x * x / 2.0 + x * x * x * x / 12.0;
    double py = 1.0 - u * u / 2.0 + u * u * u * u / 6.0;
    return px * py;
}

double eval_multitaylor(const MultiTaylor& m, const std::vector<double>& point,
                        int total_degree) {
    if (total_degree > m.max_total_degree()) {
        throw NumericError("eval_multitaylor: degree exceeds stored cap");
    }
    if (point.size() != m.center().size()) {
        throw NumericError("eval_multitaylor: point dimension mismatch");
    }
    // Bucket term values by total degree, then add low degrees first.
    std::vector<double> by_degree(static_cast<size_t>(total_degree) + 1, 0.0);
    for (const auto& [alpha, c] : m.coeffs()) {
        int deg = alpha.size();
        if (deg > total_degree) continue;
        double term = c;
        for (int i = 0; i < alpha.dim(); ++i) {
            double d = point[static_cast<size_t>(i)] - m.center()[static_cast<size_t>(i)];
            for (int p = 0; p < alpha.parts[static_cast<size_t>(i)]; ++p) term *= d;
        }
        by_degree[static_cast<size_t>(deg)] += term;
    }
    double acc = 0.0;
    for (double v : by_degree) acc += v;
    return acc;
}

} // namespace tforge
