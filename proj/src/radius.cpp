#include "tforge/radius.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace tforge {

std::vector<std::pair<int, double>>
root_sequence(const TaylorSeries& s, const std::vector<int>& indices) {
    std::vector<std::pair<int, double>> out;
    out.reserve(indices.size());
    for (int n : indices) {
        if (n < 1 || n > s.order()) {
            throw NumericError("root_sequence: index " + std::to_string(n) +
                               " out of range");
        }
        double v = s.coeff_is_zero(n) ? 0.0 : std::exp(s.log_abs_coeff(n) / n);
        out.emplace_back(n, v);
    }
    return out;
}

RadiusEstimate estimate_radius(const TaylorSeries& s, int window) {
    if (window < 1 || s.order() < window) {
        throw NumericError("estimate_radius: series order below window");
    }
    // Last `window` nonzero-coefficient indices.
    std::vector<int> tail;
    for (int n = s.order(); n >= 1 && static_cast<int>(tail.size()) < window; --n) {
        if (!s.coeff_is_zero(n)) tail.push_back(n);
    }
    std::reverse(tail.begin(), tail.end());

    RadiusEstimate est;
    est.window = window;
    est.checkpoints = tail.empty()
                          ? std::vector<std::pair<int, double>>{}
                          : root_sequence(s, tail);
    double tail_max = 0.0;
    bool decreasing = true;
    for (size_t i = 0; i < est.checkpoints.size(); ++i) {
        tail_max = std::max(tail_max, est.checkpoints[i].second);
        if (i > 0 && est.checkpoints[i].second > est.checkpoints[i - 1].second) {
            decreasing = false;
        }
    }
    est.tail_estimate = tail_max;
    if (tail_max == 0.0 || (tail_max < 1e-2 && decreasing)) {
        est.infinite = true;
        est.radius = std::numeric_limits<double>::infinity();
    } else {
        est.radius = 1.0 / tail_max;
    }
    return est;
}

RadiusEstimate estimate_radius(const TaylorSeries& s) {
    return estimate_radius(s, default_radius_window(s.order()));
}

TaylorSeries log_series(double a, int N) {
    if (a <= 0.0) throw NumericError("log_series: a must be positive");
    // stored[k] = c_k * a^k = (-1)^{k+1}/k.
    std::vector<double> stored(static_cast<size_t>(N) + 1);
    stored[0] = std::log(a);
    double sign = 1.0;
    for (int k = 1; k <= N; ++k) {
        stored[static_cast<size_t>(k)] = sign / k;
        sign = -sign;
    }
    return TaylorSeries(0.0, std::move(stored), a);
}

std::vector<std::pair<int, double>>
multivariate_diagonal_sequence(int dim, const std::vector<int>& ks) {
    if (dim != 3 && dim != 4) {
        throw NumericError("multivariate_diagonal_sequence: dim must be 3 or 4");
    }
    std::vector<std::pair<int, double>> out;
    out.reserve(ks.size());
    for (int k : ks) {
        if (k < 1 || static_cast<long long>(dim) * k > 10000) {
            throw NumericError("multivariate_diagonal_sequence: k out of range");
        }
        double logc = std::lgamma(static_cast<double>(dim) * k + 1.0) -
                      dim * std::lgamma(static_cast<double>(k) + 1.0);
        out.emplace_back(k, std::exp(logc / (static_cast<double>(dim) * k)));
    }
    return out;
}

} // namespace tforge
