#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "tforge/multivar.hpp"
#include "tforge/ode.hpp"
#include "tforge/series.hpp"

namespace tforge {

using ordered_json = nlohmann::ordered_json;

// Reads and parses a JSON file; IoError if unreadable, DescriptorError on
// malformed JSON.
ordered_json load_json_file(const std::string& path);

// {"named": "sin"} | {"coeffs": [...], "center": x0} | {"poly": [...]}.
DerivativeOracle parse_oracle(const ordered_json& j, const std::string& field);

// A univariate problem solved from its JSON descriptor. The residual
// closure substitutes the truncated series back into the defining
// equation; it is only meaningful near the center, within truncation
// error.
struct SolvedProblem {
    std::string type;
    TaylorSeries series;
    std::string closed_form_desc;                // empty if none
    std::function<double(double)> closed_form;   // null if none
    std::function<double(double)> residual;      // null if none
    std::vector<double> eval_points;             // descriptor "eval" array
};

bool is_univariate_type(const std::string& type);
bool is_multivar_type(const std::string& type);

// Types: theorem1, gaussian, newton, harmonic, nonhomogeneous,
// homogeneous_const, expinvsq, log, exp. order_override wins over the
// descriptor's "order"; the fallback is 30. Throws DescriptorError with
// field-level messages.
SolvedProblem solve_descriptor(const ordered_json& doc, int order_override = 0);

struct MultivarSolved {
    std::string type;
    MultiTaylor series;
    std::string closed_form_desc;
    std::function<double(double, double)> closed_form; // null if none
    std::vector<std::vector<double>> eval_points;
};

// Types: exp_sum, exp_product, geometric, lemma5.
MultivarSolved solve_multivar_descriptor(const ordered_json& doc,
                                         int degree_override = 0);

} // namespace tforge
