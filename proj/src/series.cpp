#include "tforge/series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace tforge {

namespace {

void check_finite(const std::vector<double>& v, const char* what) {
    for (double x : v) {
        if (!std::isfinite(x)) {
            throw NumericError(std::string(what) + ": non-finite entry");
        }
    }
}

} // namespace

TaylorSeries::TaylorSeries(double center, std::vector<double> coeffs, double scale)
    : center_(center), scale_(scale), stored_(std::move(coeffs)) {
    if (stored_.empty()) {
        throw NumericError("TaylorSeries: empty coefficient list");
    }
    if (!(std::isfinite(center_) && std::isfinite(scale_)) || scale_ <= 0.0) {
        throw NumericError("TaylorSeries: bad center or scale");
    }
    check_finite(stored_, "TaylorSeries");
}

double TaylorSeries::coeff(int k) const {
    return stored_.at(static_cast<size_t>(k)) * std::pow(scale_, -k);
}

double TaylorSeries::log_abs_coeff(int k) const {
    double v = stored_.at(static_cast<size_t>(k));
    if (v == 0.0) return -std::numeric_limits<double>::infinity();
    return std::log(std::fabs(v)) - k * std::log(scale_);
}

DerivativeStream::DerivativeStream(double center, std::vector<double> values,
                                   Extender extender)
    : center_(center), values_(std::move(values)), extender_(std::move(extender)) {
    if (values_.empty()) {
        throw NumericError("DerivativeStream: empty value list");
    }
    check_finite(values_, "DerivativeStream");
}

void DerivativeStream::extend_to(int k) {
    if (k <= max_index()) return;
    if (!extender_) {
        throw NumericError("DerivativeStream: no extender attached");
    }
    while (max_index() < k) {
        double next = extender_(values_);
        if (!std::isfinite(next)) {
            throw NumericError("DerivativeStream: overflow extending to index " +
                               std::to_string(max_index() + 1));
        }
        values_.push_back(next);
    }
}

Polynomial::Polynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
    check_finite(coeffs_, "Polynomial");
    while (!coeffs_.empty() && coeffs_.back() == 0.0) coeffs_.pop_back();
}

double Polynomial::eval(double x) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1) return Polynomial{};
    std::vector<double> d(coeffs_.size() - 1);
    for (size_t k = 1; k < coeffs_.size(); ++k) {
        d[k - 1] = static_cast<double>(k) * coeffs_[k];
    }
    return Polynomial(std::move(d));
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
    std::vector<double> r(std::max(coeffs_.size(), other.coeffs_.size()), 0.0);
    for (size_t k = 0; k < coeffs_.size(); ++k) r[k] += coeffs_[k];
    for (size_t k = 0; k < other.coeffs_.size(); ++k) r[k] += other.coeffs_[k];
    return Polynomial(std::move(r));
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
    if (is_zero() || other.is_zero()) return Polynomial{};
    std::vector<double> r(coeffs_.size() + other.coeffs_.size() - 1, 0.0);
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        for (size_t j = 0; j < other.coeffs_.size(); ++j) {
            r[i + j] += coeffs_[i] * other.coeffs_[j];
        }
    }
    return Polynomial(std::move(r));
}

LaurentPolynomial::LaurentPolynomial(std::map<int, double> coeffs)
    : coeffs_(std::move(coeffs)) {
    for (auto it = coeffs_.begin(); it != coeffs_.end();) {
        if (it->first < 0) throw NumericError("LaurentPolynomial: negative exponent");
        if (!std::isfinite(it->second)) {
            throw NumericError("LaurentPolynomial: non-finite coefficient");
        }
        if (it->second == 0.0) it = coeffs_.erase(it); else ++it;
    }
}

double LaurentPolynomial::coeff(int m) const {
    auto it = coeffs_.find(m);
    return it == coeffs_.end() ? 0.0 : it->second;
}

double LaurentPolynomial::eval_at_u(double u) const {
    // Horner over the dense exponent range, highest power first.
    double acc = 0.0;
    int prev = -1;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        if (prev < 0) {
            acc = it->second;
        } else {
            for (int e = prev; e > it->first; --e) acc *= u;
            acc += it->second;
        }
        prev = it->first;
    }
    if (prev > 0) for (int e = prev; e > 0; --e) acc *= u;
    return acc;
}

LaurentPolynomial LaurentPolynomial::operator+(const LaurentPolynomial& other) const {
    std::map<int, double> r = coeffs_;
    for (const auto& [m, a] : other.coeffs_) r[m] += a;
    return LaurentPolynomial(std::move(r));
}

LaurentPolynomial LaurentPolynomial::operator*(const LaurentPolynomial& other) const {
    std::map<int, double> r;
    for (const auto& [m, a] : coeffs_) {
        for (const auto& [n, b] : other.coeffs_) r[m + n] += a * b;
    }
    return LaurentPolynomial(std::move(r));
}

LaurentPolynomial laurent_differentiate(const LaurentPolynomial& p) {
    std::map<int, double> r;
    for (const auto& [m, a] : p.coeffs()) {
        if (m > 0) r[m + 1] = -static_cast<double>(m) * a;
    }
    return LaurentPolynomial(std::move(r));
}

double eval_partial_sum(const TaylorSeries& s, double x, int n) {
    if (n < 0 || n > s.order()) {
        throw NumericError("eval_partial_sum: order " + std::to_string(n) +
                           " exceeds series order " + std::to_string(s.order()));
    }
    double u = (x - s.center()) / s.scale();
    double acc = 0.0;
    for (int k = n; k >= 0; --k) acc = acc * u + s.stored(k);
    return acc;
}

TaylorSeries differentiate(const TaylorSeries& s) {
    if (s.order() == 0) {
        return TaylorSeries(s.center(), {0.0}, s.scale());
    }
    std::vector<double> d(static_cast<size_t>(s.order()));
    for (int k = 0; k < s.order(); ++k) {
        d[static_cast<size_t>(k)] = (k + 1) * s.stored(k + 1) / s.scale();
    }
    return TaylorSeries(s.center(), std::move(d), s.scale());
}

TaylorSeries antiderivative(const TaylorSeries& s) {
    std::vector<double> a(static_cast<size_t>(s.order()) + 2, 0.0);
    for (int k = 0; k <= s.order(); ++k) {
        a[static_cast<size_t>(k) + 1] = s.stored(k) * s.scale() / (k + 1);
    }
    return TaylorSeries(s.center(), std::move(a), s.scale());
}

namespace {

void require_compatible(const TaylorSeries& a, const TaylorSeries& b, const char* op) {
    if (a.center() != b.center()) {
        throw NumericError(std::string(op) + ": center mismatch");
    }
    if (a.scale() != b.scale()) {
        throw NumericError(std::string(op) + ": scale mismatch");
    }
}

} // namespace

TaylorSeries add(const TaylorSeries& a, const TaylorSeries& b) {
    require_compatible(a, b, "add");
    int n = std::min(a.order(), b.order());
    std::vector<double> r(static_cast<size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) r[static_cast<size_t>(k)] = a.stored(k) + b.stored(k);
    return TaylorSeries(a.center(), std::move(r), a.scale());
}

TaylorSeries scalar_multiply(const TaylorSeries& s, double factor) {
    std::vector<double> r = s.stored_coeffs();
    for (double& x : r) x *= factor;
    return TaylorSeries(s.center(), std::move(r), s.scale());
}

TaylorSeries cauchy_product(const TaylorSeries& a, const TaylorSeries& b) {
    require_compatible(a, b, "cauchy_product");
    int n = std::min(a.order(), b.order());
    std::vector<double> r(static_cast<size_t>(n) + 1, 0.0);
    for (int k = 0; k <= n; ++k) {
        double acc = 0.0;
        for (int i = 0; i <= k; ++i) acc += a.stored(i) * b.stored(k - i);
        r[static_cast<size_t>(k)] = acc;
    }
    return TaylorSeries(a.center(), std::move(r), a.scale());
}

TaylorSeries exp_of_series(const TaylorSeries& h) {
    int n = h.order();
    std::vector<double> f(static_cast<size_t>(n) + 1, 0.0);
    f[0] = std::exp(h.stored(0));
    for (int m = 0; m < n; ++m) {
        double acc = 0.0;
        for (int k = 0; k <= m; ++k) acc += (k + 1) * h.stored(k + 1) * f[static_cast<size_t>(m - k)];
        double next = acc / (m + 1);
        if (!std::isfinite(next)) {
            throw NumericError("exp_of_series: overflow at coefficient " +
                               std::to_string(m + 1));
        }
        f[static_cast<size_t>(m) + 1] = next;
    }
    return TaylorSeries(h.center(), std::move(f), h.scale());
}

TaylorSeries exp_series(double x0, int N, double scale) {
    if (N < 0) throw NumericError("exp_series: negative order");
    if (scale == 0.0) scale = std::max(1.0, N / std::exp(1.0));
    std::vector<double> c(static_cast<size_t>(N) + 1);
    double v = std::exp(x0); // exp(x0) * scale^k / k!
    for (int k = 0; k <= N; ++k) {
        c[static_cast<size_t>(k)] = v;
        v *= scale / (k + 1);
    }
    return TaylorSeries(x0, std::move(c), scale);
}

TaylorSeries inverse_square_series(double x0, int N, double scale) {
    if (x0 == 0.0) {
        throw NumericError("inverse_square_series: singular center x0 = 0");
    }
    // h_k = (-1)^k (k+1) * (-1) / x0^{k+2}; stored entry is h_k * scale^k,
    // built with an incremental ratio so no intermediate power overflows.
    std::vector<double> h(static_cast<size_t>(N) + 1);
    double ratio = 1.0; // (scale / x0)^k
    double base = -1.0 / (x0 * x0);
    double sign = 1.0;
    for (int k = 0; k <= N; ++k) {
        h[static_cast<size_t>(k)] = sign * (k + 1) * base * ratio;
        ratio *= scale / x0;
        sign = -sign;
        if (!std::isfinite(h[static_cast<size_t>(k)])) {
            throw NumericError("inverse_square_series: overflow at k = " +
                               std::to_string(k));
        }
    }
    return TaylorSeries(x0, std::move(h), scale);
}

TaylorSeries normalize(const DerivativeStream& b) {
    std::vector<double> c(b.values().size());
    double inv_fact = 1.0;
    for (size_t k = 0; k < c.size(); ++k) {
        if (k > 0) inv_fact /= static_cast<double>(k);
        c[k] = b.value(static_cast<int>(k)) * inv_fact;
    }
    return TaylorSeries(b.center(), std::move(c));
}

DerivativeStream denormalize(const TaylorSeries& s) {
    if (s.scale() != 1.0) {
        throw NumericError("denormalize: requires an unscaled series");
    }
    std::vector<double> b(static_cast<size_t>(s.order()) + 1);
    double fact = 1.0;
    for (int k = 0; k <= s.order(); ++k) {
        if (k > 0) fact *= static_cast<double>(k);
        b[static_cast<size_t>(k)] = s.stored(k) * fact;
        if (!std::isfinite(b[static_cast<size_t>(k)])) {
            throw NumericError("denormalize: overflow at k = " + std::to_string(k));
        }
    }
    return DerivativeStream(s.center(), std::move(b));
}

std::vector<double> pascal_row(int m) {
    std::vector<double> row(static_cast<size_t>(m) + 1, 1.0);
    for (int i = 1; i <= m; ++i) {
        for (int k = i - 1; k >= 1; --k) row[static_cast<size_t>(k)] += row[static_cast<size_t>(k) - 1];
    }
    return row;
}

} // namespace tforge
