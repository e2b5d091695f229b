#pragma once

#include <functional>
#include <string>
#include <vector>

namespace tforge::oracles {

// Independent ground-truth evaluators for tests and acceptance runs.
// Nothing in the solver paths depends on this header.

// Phi(x) by adaptive quadrature of the normal density, |x| <= 8.
double normal_cdf_reference(double x);

struct Oracle {
    std::string name;
    std::function<double(const std::vector<double>&)> evaluator;
    // A second, algebraically different route to the same value; used by
    // registration self-certification.
    std::function<double(const std::vector<double>&)> alt;
    std::string domain_note;
    // Points inside the stated domain where the two routes are compared.
    std::vector<std::vector<double>> sample_points;
};

// Registered analytic solutions: exp_sum, exp_product, geometric2/3/4,
// sincos_423, expinvsq, plus fixed-parameter instances of the univariate
// problems. Throws on an unknown name or a domain violation.
double closed_form(const std::string& name, const std::vector<double>& point);

const std::vector<Oracle>& registry();

// Runs each oracle's self-certification: evaluator vs alt at the sample
// points, agreement to 1e-10 relative. Returns the names that fail.
std::vector<std::string> verify_registry();

// Richardson-extrapolated central difference estimate of f^(k)(x0),
// k <= 4.
double finite_difference_jet(const std::function<double(double)>& f, double x0,
                             int k);

} // namespace tforge::oracles
