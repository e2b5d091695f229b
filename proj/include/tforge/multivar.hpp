#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tforge/ode.hpp"
#include "tforge/series.hpp"

namespace tforge {

struct MultiIndex {
    std::vector<int> parts;

    int size() const {
        int s = 0;
        for (int p : parts) s += p;
        return s;
    }
    int dim() const { return static_cast<int>(parts.size()); }
    auto operator<=>(const MultiIndex&) const = default;
};

// Sparse multivariate Taylor coefficients C_alpha around `center`.
class MultiTaylor {
public:
    MultiTaylor(std::vector<double> center, int max_total_degree);

    const std::vector<double>& center() const { return center_; }
    int max_total_degree() const { return max_degree_; }
    const std::map<MultiIndex, double>& coeffs() const { return coeffs_; }
    double coeff(const MultiIndex& alpha) const;
    void set_coeff(MultiIndex alpha, double value);

private:
    std::vector<double> center_;
    int max_degree_;
    std::map<MultiIndex, double> coeffs_;
};

// f_x = g(x) f, f_y = h(y) f, f(x0, y0) = C.
struct SeparablePDEProblem {
    DerivativeOracle g;
    DerivativeOracle h;
    double x0 = 0.0;
    double y0 = 0.0;
    double C = 1.0;
};

struct ClosedFormSurface {
    std::string description;
    std::function<double(double, double)> evaluator;
};

// C_{jk} = 1/(j! k!) for j + k <= N: the exp(x+y) expansion.
MultiTaylor pde_exp_sum(int N);
// C_{jj} = 1/j!, zero off the diagonal: the exp(xy) expansion.
MultiTaylor pde_exp_product(int N);
// C_{jk} = (j+k)!/(j! k!) via the Pascal recurrence: 1/(1-x-y).
MultiTaylor pde_geometric(int N);

// Max over the grid of |df/dx - df/dy| for f(x,y) = g(x+y) built from a
// univariate series whose center is x0+y0; central differences, step
// 1e-5. A property check, not a solver.
double advection_residual(const TaylorSeries& g_series,
                          std::pair<double, double> center,
                          const std::vector<std::pair<double, double>>& grid);

// Builds the two derivative streams b^x, b^y by the binomial recursion
// and sets C_{jk} = (b^x_j / j!)(b^y_k / k!) / C.
std::pair<MultiTaylor, ClosedFormSurface>
lemma5_solve(const SeparablePDEProblem& problem, int N);

// The factorized 4th-order product polynomial for g = sin, h = cos,
// center (0, pi/2):
// [1 + x^2/2 + x^4/12] * [1 - (y-pi/2)^2/2 + (y-pi/2)^4/6].
double example_423_p4(double x, double y);

// Partial sum over stored indices of size <= total_degree, accumulated
// in increasing total degree.
double eval_multitaylor(const MultiTaylor& m, const std::vector<double>& point,
                        int total_degree);

} // namespace tforge
