#include "tforge/descriptor.hpp"

#include <cmath>
#include <fstream>

#include "tforge/radius.hpp"
#include <memory>
#include <sstream>

namespace tforge {

ordered_json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IoError("read failure on '" + path + "'");
    try {
        return ordered_json::parse(buf.str());
    } catch (const ordered_json::parse_error& e) {
        throw DescriptorError("'" + path + "': " + e.what());
    }
}

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& what) {
    throw DescriptorError("field '" + field + "': " + what);
}

double get_number(const ordered_json& j, const std::string& field) {
    if (!j.contains(field)) fail(field, "missing");
    if (!j.at(field).is_number()) fail(field, "expected a number");
    return j.at(field).get<double>();
}

double get_number_or(const ordered_json& j, const std::string& field, double dflt) {
    if (!j.contains(field)) return dflt;
    if (!j.at(field).is_number()) fail(field, "expected a number");
    return j.at(field).get<double>();
}

int get_int_or(const ordered_json& j, const std::string& field, int dflt) {
    if (!j.contains(field)) return dflt;
    if (!j.at(field).is_number_integer()) fail(field, "expected an integer");
    return j.at(field).get<int>();
}

std::vector<double> get_number_array(const ordered_json& j, const std::string& field) {
    if (!j.contains(field)) fail(field, "missing");
    if (!j.at(field).is_array()) fail(field, "expected an array");
    std::vector<double> out;
    for (const auto& v : j.at(field)) {
        if (!v.is_number()) fail(field, "expected numeric entries");
        out.push_back(v.get<double>());
    }
    return out;
}

const ordered_json& get_params(const ordered_json& doc) {
    if (!doc.contains("params")) fail("params", "missing");
    if (!doc.at("params").is_object()) fail("params", "expected an object");
    return doc.at("params");
}

int resolve_order(const ordered_json& doc, int override_value, int dflt = 30) {
    int order = override_value > 0 ? override_value : get_int_or(doc, "order", dflt);
    if (order < 1) fail("order", "must be >= 1");
    return order;
}

// Derivatives of the partial sum, precomputed up to the given depth so
// residual closures stay cheap.
std::vector<TaylorSeries> derivative_chain(const TaylorSeries& s, int depth) {
    std::vector<TaylorSeries> chain{s};
    for (int i = 0; i < depth; ++i) chain.push_back(differentiate(chain.back()));
    return chain;
}

std::function<double(double)> make_residual(
    std::vector<TaylorSeries> chain,
    std::function<double(const std::vector<double>&, double)> equation) {
    auto shared = std::make_shared<std::vector<TaylorSeries>>(std::move(chain));
    auto eq = std::move(equation);
    return [shared, eq](double x) {
        std::vector<double> d;
        d.reserve(shared->size());
        for (const TaylorSeries& s : *shared) {
            d.push_back(eval_partial_sum(s, x, s.order()));
        }
        return eq(d, x);
    };
}

} // namespace

DerivativeOracle parse_oracle(const ordered_json& j, const std::string& field) {
    if (!j.is_object()) fail(field, "expected an oracle object");
    if (j.contains("named")) {
        if (!j.at("named").is_string()) fail(field + ".named", "expected a string");
        try {
            return DerivativeOracle::named(j.at("named").get<std::string>());
        } catch (const NumericError& e) {
            fail(field + ".named", e.what());
        }
    }
    if (j.contains("coeffs")) {
        std::vector<double> c = get_number_array(j, "coeffs");
        if (c.empty()) fail(field + ".coeffs", "must be nonempty");
        double center = get_number_or(j, "center", 0.0);
        return DerivativeOracle::explicit_coeffs(TaylorSeries(center, std::move(c)));
    }
    if (j.contains("poly")) {
        return DerivativeOracle::polynomial(Polynomial(get_number_array(j, "poly")));
    }
    fail(field, "expected one of 'named', 'coeffs', 'poly'");
}

bool is_univariate_type(const std::string& type) {
    static const char* kinds[] = {"theorem1",       "gaussian", "newton",
                                  "harmonic",       "nonhomogeneous",
                                  "homogeneous_const", "expinvsq", "log", "exp"};
    for (const char* k : kinds) if (type == k) return true;
    return false;
}

bool is_multivar_type(const std::string& type) {
    return type == "exp_sum" || type == "exp_product" || type == "geometric" ||
           type == "lemma5";
}

SolvedProblem solve_descriptor(const ordered_json& doc, int order_override) {
    if (!doc.is_object()) throw DescriptorError("descriptor must be a JSON object");
    if (!doc.contains("type") || !doc.at("type").is_string()) {
        fail("type", "missing or not a string");
    }
    const std::string type = doc.at("type").get<std::string>();
    if (!is_univariate_type(type)) fail("type", "unknown problem type '" + type + "'");

    SolvedProblem out{type, TaylorSeries(0.0, {0.0}), "", nullptr, nullptr, {}};
    if (doc.contains("eval")) out.eval_points = get_number_array(doc, "eval");

    if (type == "theorem1") {
        double x0 = get_number_or(doc, "x0", 0.0);
        int order = resolve_order(doc, order_override);
        std::vector<double> initial;
        if (doc.contains("initial")) initial = get_number_array(doc, "initial");
        if (initial.empty()) {
            out.series = TaylorSeries(x0, std::vector<double>(
                                              static_cast<size_t>(order) + 1, 0.0));
            return out;
        }
        if (!doc.contains("g") || !doc.at("g").is_array()) {
            fail("g", "expected an array of oracle descriptors");
        }
        std::vector<DerivativeOracle> g;
        for (size_t i = 0; i < doc.at("g").size(); ++i) {
            g.push_back(parse_oracle(doc.at("g")[i], "g[" + std::to_string(i) + "]"));
        }
        if (g.size() != initial.size()) {
            fail("g", "needs as many oracles as initial values");
        }
        int n = static_cast<int>(g.size());
        if (order < n) fail("order", "must be >= the number of initial values");
        LinearImplicitODE problem(n, g, x0, initial);
        DerivativeStream stream = theorem1_extend(problem, order - n);
        out.series = normalize(stream);
        auto oracles = std::make_shared<std::vector<DerivativeOracle>>(problem.g);
        auto chain = std::make_shared<std::vector<TaylorSeries>>(
            derivative_chain(out.series, n));
        out.residual = [oracles, chain](double x) {
            double acc = eval_partial_sum((*chain)[0], x, (*chain)[0].order());
            for (size_t j = 1; j < chain->size(); ++j) {
                acc -= (*oracles)[j - 1].value_at(x) *
                       eval_partial_sum((*chain)[j], x, (*chain)[j].order());
            }
            return acc;
        };
        return out;
    }

    if (type == "gaussian") {
        int order = resolve_order(doc, order_override, 75);
        if (order < 2) fail("order", "must be >= 2");
        out.series = solve_gaussian_cdf(order).series;
        out.residual = make_residual(
            derivative_chain(out.series, 1), [](const std::vector<double>& d, double x) {
                const double D = 1.0 / std::sqrt(2.0 * M_PI);
                return d[1] - D * std::exp(-0.5 * x * x);
            });
        return out;
    }

    if (type == "newton") {
        const ordered_json& p = get_params(doc);
        double L = get_number(p, "L"), Ta = get_number(p, "Ta"), c = get_number(p, "c");
        int order = resolve_order(doc, order_override);
        auto [series, cf] = solve_newton_cooling(L, Ta, c, order);
        out.series = series;
        out.closed_form_desc = cf.description;
        out.closed_form = cf.evaluator;
        out.residual = make_residual(
            derivative_chain(series, 1), [L, Ta](const std::vector<double>& d, double) {
                return d[1] - L * (d[0] - Ta);
            });
        return out;
    }

    if (type == "harmonic") {
        const ordered_json& p = get_params(doc);
        double M = get_number(p, "M"), c = get_number(p, "c"), d0 = get_number(p, "d");
        if (M <= 0.0) fail("params.M", "must be positive");
        int order = resolve_order(doc, order_override);
        auto [series, cf] = solve_harmonic(M, c, d0, order);
        out.series = series;
        out.closed_form_desc = cf.description;
        out.closed_form = cf.evaluator;
        out.residual = make_residual(
            derivative_chain(series, 2), [M](const std::vector<double>& d, double) {
                return d[2] + M * d[0];
            });
        return out;
    }

    if (type == "nonhomogeneous") {
        const ordered_json& p = get_params(doc);
        double c = get_number(p, "c"), d0 = get_number(p, "d");
        int order = resolve_order(doc, order_override);
        auto [series, cf] = solve_nonhomogeneous(c, d0, order);
        out.series = series;
        out.closed_form_desc = cf.description;
        out.closed_form = cf.evaluator;
        out.residual = make_residual(
            derivative_chain(series, 2), [](const std::vector<double>& d, double x) {
                return d[2] + d[1] + std::sin(x);
            });
        return out;
    }

    if (type == "homogeneous_const") {
        const ordered_json& p = get_params(doc);
        double B = get_number(p, "B"), c = get_number(p, "c"), d0 = get_number(p, "d");
        if (c == d0) fail("params", "requires c != d");
        if (std::fabs(d0) >= std::fabs(c)) fail("params", "requires |d| < |c|");
        int order = resolve_order(doc, order_override);
        auto [series, cf] = solve_homogeneous_const(B, c, d0, order);
        out.series = series;
        out.closed_form_desc = cf.description;
        out.closed_form = cf.evaluator;
        out.residual = make_residual(
            derivative_chain(series, 2), [c, d0](const std::vector<double>& d, double) {
                return d[2] - (c + d0) * d[1] + c * d0 * d[0];
            });
        return out;
    }

    if (type == "expinvsq") {
        double x0 = get_number(doc, "x0");
        if (x0 == 0.0) fail("x0", "must be nonzero");
        int order = resolve_order(doc, order_override, 100);
        out.series = expinvsq_taylor(x0, order);
        out.closed_form_desc = "exp(-1/x^2)";
        out.closed_form = [](double x) {
            return x == 0.0 ? 0.0 : std::exp(-1.0 / (x * x));
        };
        out.residual = make_residual(
            derivative_chain(out.series, 1), [](const std::vector<double>& d, double x) {
                return d[1] - 2.0 / (x * x * x) * d[0];
            });
        return out;
    }

    if (type == "log") {
        const ordered_json& p = get_params(doc);
        double a = get_number(p, "a");
        if (a <= 0.0) fail("params.a", "must be positive");
        int order = resolve_order(doc, order_override, 100);
        out.series = log_series(a, order);
        out.closed_form_desc = "ln(a + x)";
        out.closed_form = [a](double x) { return std::log(a + x); };
        out.residual = make_residual(
            derivative_chain(out.series, 1), [a](const std::vector<double>& d, double x) {
                return d[1] - 1.0 / (a + x);
            });
        return out;
    }

    // exp
    double x0 = get_number_or(doc, "x0", 0.0);
    int order = resolve_order(doc, order_override, 500);
    out.series = exp_series(x0, order);
    out.closed_form_desc = "exp(x)";
    out.closed_form = [](double x) { return std::exp(x); };
    out.residual = make_residual(
        derivative_chain(out.series, 1), [](const std::vector<double>& d, double) {
            return d[1] - d[0];
        });
    return out;
}

namespace {

std::vector<std::vector<double>> get_point_list(const ordered_json& doc,
                                                const std::string& field) {
    std::vector<std::vector<double>> out;
    if (!doc.contains(field)) return out;
    if (!doc.at(field).is_array()) fail(field, "expected an array of [x, y] pairs");
    for (const auto& p : doc.at(field)) {
        if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number()) {
            fail(field, "expected [x, y] numeric pairs");
        }
        out.push_back({p[0].get<double>(), p[1].get<double>()});
    }
    return out;
}

} // namespace

MultivarSolved solve_multivar_descriptor(const ordered_json& doc,
                                         int degree_override) {
    if (!doc.is_object()) throw DescriptorError("descriptor must be a JSON object");
    if (!doc.contains("type") || !doc.at("type").is_string()) {
        fail("type", "missing or not a string");
    }
    const std::string type = doc.at("type").get<std::string>();
    if (!is_multivar_type(type)) fail("type", "unknown problem type '" + type + "'");

    int degree = degree_override > 0 ? degree_override
                                     : get_int_or(doc, "degree", 10);
    if (degree < 1) fail("degree", "must be >= 1");

    MultivarSolved out{type, MultiTaylor({0.0, 0.0}, 0), "", nullptr,
                       get_point_list(doc, "eval")};

    if (type == "exp_sum") {
        out.series = pde_exp_sum(degree);
        out.closed_form_desc = "exp(x + y)";
        out.closed_form = [](double x, double y) { return std::exp(x + y); };
        return out;
    }
    if (type == "exp_product") {
        out.series = pde_exp_product(degree);
        out.closed_form_desc = "exp(x * y)";
        out.closed_form = [](double x, double y) { return std::exp(x * y); };
        return out;
    }
    if (type == "geometric") {
        out.series = pde_geometric(degree);
        out.closed_form_desc = "1 / (1 - x - y)";
        out.closed_form = [](double x, double y) { return 1.0 / (1.0 - x - y); };
        return out;
    }

    // lemma5
    if (!doc.contains("g")) fail("g", "missing");
    if (!doc.contains("h")) fail("h", "missing");
    SeparablePDEProblem problem{parse_oracle(doc.at("g"), "g"),
                                parse_oracle(doc.at("h"), "h"), 0.0, 0.0,
                                get_number_or(doc, "C", 1.0)};
    if (doc.contains("center")) {
        std::vector<double> c = get_number_array(doc, "center");
        if (c.size() != 2) fail("center", "expected [x0, y0]");
        problem.x0 = c[0];
        problem.y0 = c[1];
    }
    if (problem.C == 0.0) fail("C", "must be nonzero");
    auto [series, cf] = lemma5_solve(problem, degree);
    out.series = std::move(series);
    out.closed_form_desc = cf.description;
    out.closed_form = cf.evaluator;
    return out;
}

} // namespace tforge
