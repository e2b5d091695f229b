#pragma once

#include <utility>
#include <vector>

#include "tforge/series.hpp"

namespace tforge {

struct RadiusEstimate {
    // (index n, |c_n|^{1/n}); exact-zero coefficients contribute value 0.
    std::vector<std::pair<int, double>> checkpoints;
    double tail_estimate = 0.0; // estimated 1/r over the tail window
    int window = 0;
    double radius = 0.0; // +infinity when the tail estimate vanishes
    bool infinite = false;
};

// |c_n|^{1/n} at the requested indices, computed in the log domain.
std::vector<std::pair<int, double>>
root_sequence(const TaylorSeries& s, const std::vector<int>& indices);

inline int default_radius_window(int order) { return std::max(32, order / 8); }

// Cauchy-Hadamard at finite order: the tail estimate is the max of
// |c_n|^{1/n} over the last `window` nonzero-coefficient indices. The
// infinite-radius flag fires when that max is below 1e-2 and the root
// sequence decreases across the window.
RadiusEstimate estimate_radius(const TaylorSeries& s, int window);
RadiusEstimate estimate_radius(const TaylorSeries& s);

// Maclaurin series of ln(a + x): c_0 = ln a, c_k = (-1)^{k+1}/(k a^k).
// Carries scale = a so deep tails stay representable for a > 1.
TaylorSeries log_series(double a, int N);

// Diagonal root values for f(x_1..x_d) = 1/(1 - sum x_i): at alpha =
// (k,...,k), exp([lgamma(dk+1) - d lgamma(k+1)] / (dk)).
std::vector<std::pair<int, double>>
multivariate_diagonal_sequence(int dim, const std::vector<int>& ks);

} // namespace tforge
