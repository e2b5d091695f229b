#include "tforge/oracles.hpp"

#include <cmath>

#include "tforge/errors.hpp"
#include "tforge/quadrature.hpp"

namespace tforge::oracles {

double normal_cdf_reference(double x) {
    if (std::fabs(x) > 8.0) {
        throw NumericError("normal_cdf_reference: |x| > 8 outside stated domain");
    }
    const double D = 1.0 / std::sqrt(2.0 * M_PI);
    auto density = [D](double t) { return D * std::exp(-0.5 * t * t); };
    return 0.5 + integrate(density, 0.0, x, 1e-13);
}

namespace {

double geom_sum(const std::vector<double>& p) {
    double t = 0.0;
    for (double x : p) t += x;
    if (std::fabs(t) >= 1.0) {
        throw NumericError("closed_form: geometric form needs |sum x_i| < 1");
    }
    // Direct geometric partial sum, the second route to 1/(1-t).
    double acc = 0.0, term = 1.0;
    while (std::fabs(term) > 1e-14) {
        acc += term;
        term *= t;
    }
    return acc;
}

double geom_closed(const std::vector<double>& p) {
    double t = 0.0;
    for (double x : p) t += x;
    if (t == 1.0) throw NumericError("closed_form: geometric form undefined at sum = 1");
    return 1.0 / (1.0 - t);
}

std::vector<Oracle> build_registry() {
    std::vector<Oracle> reg;

    reg.push_back({"exp_sum",
                   [](const std::vector<double>& p) { return std::exp(p.at(0) + p.at(1)); },
                   [](const std::vector<double>& p) { return std::exp(p.at(0)) * std::exp(p.at(1)); },
                   "all of R^2",
                   {{0, 0}, {0.3, 0.4}, {-1, 2}, {1.5, -0.2}, {0.77, 0.13},
                    {-0.5, -0.5}, {2, 1}, {0.1, 0.9}, {-2, 0.25}, {1, 1}}});

    reg.push_back({"exp_product",
                   [](const std::vector<double>& p) { return std::exp(p.at(0) * p.at(1)); },
                   [](const std::vector<double>& p) { return std::pow(std::exp(p.at(0)), p.at(1)); },
                   "all of R^2",
                   {{0, 0}, {0.5, 0.5}, {1, 2}, {-1, 1}, {0.3, -0.7},
                    {2, 0.25}, {-0.5, -0.5}, {1.2, 0.4}, {0.9, 0.9}, {0.1, 3}}});

    for (int d = 2; d <= 4; ++d) {
        Oracle o;
        o.name = "geometric" + std::to_string(d);
        o.evaluator = geom_closed;
        o.alt = geom_sum;
        o.domain_note = "|x_1 + ... + x_d| < 1";
        for (int i = 0; i < 10; ++i) {
            std::vector<double> pt(static_cast<size_t>(d));
            double budget = 0.9 - 0.08 * i;
            for (int j = 0; j < d; ++j) pt[static_cast<size_t>(j)] = budget / d * (j % 2 ? 1.0 : 0.7);
            o.sample_points.push_back(pt);
        }
        reg.push_back(std::move(o));
    }

    reg.push_back({"sincos_423",
                   [](const std::vector<double>& p) {
                       return std::exp(std::sin(p.at(1)) - std::cos(p.at(0)));
                   },
                   [](const std::vector<double>& p) {
                       return std::exp(1.0 - std::cos(p.at(0))) * std::exp(std::sin(p.at(1)) - 1.0);
                   },
                   "all of R^2",
                   {{0, M_PI / 2}, {1, 1}, {0.5, 2}, {-1, 0}, {2, -1},
                    {0.1, 0.2}, {3, 3}, {-0.7, 1.3}, {1.5, 1.5}, {0.25, 2.5}}});

    reg.push_back({"expinvsq",
                   [](const std::vector<double>& p) {
                       double x = p.at(0);
                       return x == 0.0 ? 0.0 : std::exp(-1.0 / (x * x));
                   },
                   [](const std::vector<double>& p) {
                       double x = p.at(0);
                       return x == 0.0 ? 0.0 : 1.0 / std::exp(1.0 / (x * x));
                   },
                   "all of R",
                   {{1}, {2}, {0.5}, {-1}, {1.5}, {0.8}, {3}, {-2}, {0.6}, {1.2}}});

    const double L = -1.0, Ta = 20.0, c0 = 100.0;
    reg.push_back({"newton_cooling_demo",
                   [=](const std::vector<double>& p) {
                       return (c0 - Ta) * std::exp(L * p.at(0)) + Ta;
                   },
                   [=](const std::vector<double>& p) {
                       double t = L * p.at(0);
                       return Ta + (c0 - Ta) * (std::cosh(t) + std::sinh(t));
                   },
                   "t >= 0",
                   {{0}, {0.5}, {1}, {1.5}, {2}, {2.5}, {3}, {0.1}, {0.9}, {4}}});

    reg.push_back({"harmonic_unit",
                   [](const std::vector<double>& p) { return std::cos(p.at(0)); },
                   [](const std::vector<double>& p) {
                       double s = std::sin(0.5 * p.at(0));
                       return 1.0 - 2.0 * s * s;
                   },
                   "all of R",
                   {{0}, {1}, {M_PI}, {-1}, {2.5}, {0.3}, {-2}, {3.1}, {0.77}, {1.9}}});

    // Non-homogeneous demo, c = 0, d = 1: C1 = 1/2, C2 = 0.
    reg.push_back({"nonhomogeneous_demo",
                   [](const std::vector<double>& p) {
                       double x = p.at(0);
                       return -0.5 * std::exp(-x) + 0.5 * (std::cos(x) + std::sin(x));
                   },
                   [](const std::vector<double>& p) {
                       double x = p.at(0);
                       return -0.5 * std::exp(-x) +
                              std::sqrt(0.5) * std::sin(x + M_PI / 4.0);
                   },
                   "all of R",
                   {{0}, {1}, {-1}, {0.5}, {2}, {-0.5}, {1.5}, {3}, {0.25}, {-2}}});

    // Constant-coefficients demo, B = 2, c = 2, d = 1.
    reg.push_back({"homogeneous_const_demo",
                   [](const std::vector<double>& p) {
                       double x = p.at(0);
                       return 2.0 * (std::exp(2.0 * x) - std::exp(x));
                   },
                   [](const std::vector<double>& p) {
                       double x = p.at(0);
                       return 2.0 * std::exp(x) * std::expm1(x);
                   },
                   "all of R",
                   {{0}, {0.5}, {1}, {-1}, {0.25}, {2}, {-0.5}, {1.5}, {0.1}, {0.9}}});

    return reg;
}

} // namespace

const std::vector<Oracle>& registry() {
    static const std::vector<Oracle> reg = build_registry();
    return reg;
}

double closed_form(const std::string& name, const std::vector<double>& point) {
    for (const Oracle& o : registry()) {
        if (o.name == name) return o.evaluator(point);
    }
    throw NumericError("closed_form: unknown oracle '" + name + "'");
}

std::vector<std::string> verify_registry() {
    std::vector<std::string> failures;
    for (const Oracle& o : registry()) {
        for (const auto& pt : o.sample_points) {
            double a = o.evaluator(pt);
            double b = o.alt(pt);
            if (std::fabs(a - b) > 1e-10 * std::max({1.0, std::fabs(a), std::fabs(b)})) {
                failures.push_back(o.name);
                break;
            }
        }
    }
    return failures;
}

double finite_difference_jet(const std::function<double(double)>& f, double x0,
                             int k) {
    if (k < 0 || k > 4) {
        throw NumericError("finite_difference_jet: k must be in [0, 4]");
    }
    if (k == 0) return f(x0);
    auto central = [&](double h) {
        switch (k) {
            case 1:
                return (f(x0 + h) - f(x0 - h)) / (2.0 * h);
            case 2:
                return (f(x0 + h) - 2.0 * f(x0) + f(x0 - h)) / (h * h);
            case 3:
                return (f(x0 + 2 * h) - 2.0 * f(x0 + h) + 2.0 * f(x0 - h) -
                        f(x0 - 2 * h)) /
                       (2.0 * h * h * h);
            default:
                return (f(x0 + 2 * h) - 4.0 * f(x0 + h) + 6.0 * f(x0) -
                        4.0 * f(x0 - h) + f(x0 - 2 * h)) /
                       (h * h * h * h);
        }
    };
    // Two Richardson levels on the O(h^2) stencils.
    double h = k <= 2 ? 1e-2 : 5e-2;
    double d1 = central(h), d2 = central(h / 2.0), d3 = central(h / 4.0);
    double r1 = (4.0 * d2 - d1) / 3.0;
    double r2 = (4.0 * d3 - d2) / 3.0;
    return (16.0 * r2 - r1) / 15.0;
}

} // namespace tforge::oracles
