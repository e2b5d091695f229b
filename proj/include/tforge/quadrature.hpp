#pragma once

#include <functional>

namespace tforge {

// Adaptive Simpson integration of f over [a, b] to the given absolute
// tolerance. Signed: integrate(f, a, b) = -integrate(f, b, a).
double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol = 1e-12);

} // namespace tforge
