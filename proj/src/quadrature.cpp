#include "tforge/quadrature.hpp"

#include <cmath>

#include "tforge/errors.hpp"

namespace tforge {

namespace {

double simpson(const std::function<double(double)>& f, double a, double fa,
               double b, double fb, double m, double fm) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive(const std::function<double(double)>& f, double a, double fa,
                double b, double fb, double m, double fm, double whole,
                double tol, int depth) {
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    double flm = f(lm), frm = f(rm);
    double left = simpson(f, a, fa, m, fm, lm, flm);
    double right = simpson(f, m, fm, b, fb, rm, frm);
    double delta = left + right - whole;
    if (depth <= 0) throw NumericError("integrate: adaptive recursion exhausted");
    if (std::fabs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    return adaptive(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
           adaptive(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}

} // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol) {
    if (a == b) return 0.0;
    double fa = f(a), fb = f(b);
    double m = 0.5 * (a + b), fm = f(m);
    double whole = simpson(f, a, fa, b, fb, m, fm);
    return adaptive(f, a, fa, b, fb, m, fm, whole, tol, 48);
}

} // namespace tforge
