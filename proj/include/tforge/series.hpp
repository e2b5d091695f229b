#pragma once

#include <cmath>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "tforge/errors.hpp"

namespace tforge {

// Truncated Taylor series around `center`. Coefficients are stored in
// normalized form c_k = f^(k)(x0)/k!; the optional `scale` factor keeps
// very small or very large coefficient tails representable in doubles:
// stored[k] = c_k * scale^k. Operations require matching scales. Most
// code uses scale == 1 and never notices.
class TaylorSeries {
public:
    TaylorSeries(double center, std::vector<double> coeffs, double scale = 1.0);

    double center() const { return center_; }
    double scale() const { return scale_; }
    int order() const { return static_cast<int>(stored_.size()) - 1; }

    // c_k. May underflow/overflow for scale != 1; prefer log_abs_coeff
    // for magnitude queries on scaled series.
    double coeff(int k) const;
    // c_k * scale^k, the value actually stored.
    double stored(int k) const { return stored_.at(static_cast<size_t>(k)); }
    const std::vector<double>& stored_coeffs() const { return stored_; }
    // log|c_k|, -inf for an exact zero.
    double log_abs_coeff(int k) const;
    bool coeff_is_zero(int k) const { return stored_.at(static_cast<size_t>(k)) == 0.0; }

private:
    double center_;
    double scale_;
    std::vector<double> stored_;
};

// Raw derivative values b_k = f^(k)(center), optionally extendable by a
// recursion that computes b_{k+1} from the materialized prefix.
class DerivativeStream {
public:
    using Extender = std::function<double(const std::vector<double>&)>;

    DerivativeStream(double center, std::vector<double> values,
                     Extender extender = nullptr);

    double center() const { return center_; }
    int max_index() const { return static_cast<int>(values_.size()) - 1; }
    double value(int k) const { return values_.at(static_cast<size_t>(k)); }
    const std::vector<double>& values() const { return values_; }
    bool extendable() const { return static_cast<bool>(extender_); }

    // Appends values up to index k. Throws NumericError on overflow or
    // if no extender is attached.
    void extend_to(int k);

private:
    double center_;
    std::vector<double> values_;
    Extender extender_;
};

// Dense polynomial in x, ascending powers. Zero polynomial is the empty
// coefficient list.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<double> coeffs);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    double coeff(int k) const {
        return k >= 0 && k <= degree() ? coeffs_[static_cast<size_t>(k)] : 0.0;
    }
    const std::vector<double>& coeffs() const { return coeffs_; }

    double eval(double x) const;
    Polynomial derivative() const;

    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator*(const Polynomial& other) const;

private:
    std::vector<double> coeffs_;
};

// Polynomial in u = 1/x with nonnegative integer exponents. Exact zero
// coefficients are dropped on every mutation.
class LaurentPolynomial {
public:
    LaurentPolynomial() = default;
    explicit LaurentPolynomial(std::map<int, double> coeffs);

    bool is_zero() const { return coeffs_.empty(); }
    const std::map<int, double>& coeffs() const { return coeffs_; }
    double coeff(int m) const;

    // Evaluates at u = 1/x.
    double eval_at_u(double u) const;

    LaurentPolynomial operator+(const LaurentPolynomial& other) const;
    LaurentPolynomial operator*(const LaurentPolynomial& other) const;

private:
    std::map<int, double> coeffs_;
};

// d/dx of sum a_m u^m with u = 1/x: sum (-m) a_m u^{m+1}.
LaurentPolynomial laurent_differentiate(const LaurentPolynomial& p);

// Horner evaluation of the degree-n prefix at x.
double eval_partial_sum(const TaylorSeries& s, double x, int n);

// Term-by-term derivative; order drops by one. Order 0 yields the zero
// series of order 0.
TaylorSeries differentiate(const TaylorSeries& s);

// Term-by-term antiderivative with zero constant term; order grows by one.
TaylorSeries antiderivative(const TaylorSeries& s);

TaylorSeries add(const TaylorSeries& a, const TaylorSeries& b);
TaylorSeries scalar_multiply(const TaylorSeries& s, double factor);

// coeffs[k] = sum_{i} a_i b_{k-i}, truncated at min(a.order, b.order).
TaylorSeries cauchy_product(const TaylorSeries& a, const TaylorSeries& b);

// exp of a truncated series, via the coefficient recursion for f' = h' f:
// f_0 = exp(h_0), (n+1) f_{n+1} = sum_{k=0}^{n} (k+1) h_{k+1} f_{n-k}.
TaylorSeries exp_of_series(const TaylorSeries& h);

// Taylor series of exp about x0 to order N: c_k = exp(x0)/k!. The scale
// defaults to N/e, which keeps stored entries O(1) instead of
// underflowing near k = N; pass scale = 1 for small orders.
TaylorSeries exp_series(double x0, int N, double scale = 0.0);

// Taylor coefficients of -1/x^2 about x0 (x0 != 0), order N, with the
// given scale factor on the result.
TaylorSeries inverse_square_series(double x0, int N, double scale = 1.0);

// c_k = b_k / k!, with the factorial applied incrementally.
TaylorSeries normalize(const DerivativeStream& b);
// b_k = c_k * k!; throws NumericError when the product overflows.
DerivativeStream denormalize(const TaylorSeries& s);

// Row m of Pascal's triangle as doubles, built by the additive
// recurrence. Entries are exact integers as long as they fit the
// 53-bit significand and stay representable up to C(1029,514).
std::vector<double> pascal_row(int m);

} // namespace tforge
