#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tforge/descriptor.hpp"
#include "tforge/errors.hpp"
#include "tforge/radius.hpp"
#include "tforge/tables.hpp"

namespace {

using tforge::ordered_json;

struct Config {
    std::string command;
    std::string problem_path;
    int order = 0; // 0 = use the descriptor's order
    std::string format = "csv";
    std::string out_path;
    bool compare = false;
    int window = 0; // 0 = default window
    bool full_precision = false;
};

std::string fmt(double v, const Config& cfg, int decimals = 12) {
    if (cfg.full_precision) return tforge::format_full(v);
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", decimals, v);
    return buf;
}

void write_output(const Config& cfg, const std::string& text) {
    if (cfg.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(cfg.out_path, std::ios::binary);
    if (!out) throw tforge::IoError("cannot open '" + cfg.out_path + "' for writing");
    out << text;
    if (!out) throw tforge::IoError("write failure on '" + cfg.out_path + "'");
}

std::string render(const tforge::TableDocument& doc, const Config& cfg) {
    if (cfg.format == "csv") return tforge::to_csv(doc);
    if (cfg.format == "markdown") return tforge::to_markdown(doc);
    return tforge::to_json_doc(doc).dump(2) + "\n";
}

ordered_json load_problem(const Config& cfg) {
    if (cfg.problem_path.empty()) {
        throw tforge::DescriptorError("this command requires --problem FILE");
    }
    return tforge::load_json_file(cfg.problem_path);
}

bool descriptor_is_multivar(const ordered_json& doc) {
    return doc.is_object() && doc.contains("type") && doc.at("type").is_string() &&
           tforge::is_multivar_type(doc.at("type").get<std::string>());
}

tforge::RadiusEstimate radius_of(const tforge::TaylorSeries& series,
                                 const Config& cfg) {
    int window = cfg.window > 0 ? cfg.window
                                : std::min(tforge::default_radius_window(series.order()),
                                           series.order());
    return tforge::estimate_radius(series, window);
}

ordered_json radius_json(const tforge::RadiusEstimate& est) {
    ordered_json j;
    ordered_json checkpoints = ordered_json::array();
    for (const auto& [n, v] : est.checkpoints) checkpoints.push_back({{"n", n}, {"root", v}});
    j["checkpoints"] = std::move(checkpoints);
    j["tail_estimate"] = est.tail_estimate;
    j["window"] = est.window;
    j["infinite"] = est.infinite;
    if (est.infinite) {
        j["radius"] = nullptr;
    } else {
        j["radius"] = est.radius;
    }
    return j;
}

tforge::TableDocument radius_table(const tforge::RadiusEstimate& est,
                                   const Config& cfg) {
    tforge::TableDocument doc;
    doc.name = "radius";
    doc.columns = {"n", "root"};
    for (const auto& [n, v] : est.checkpoints) {
        doc.rows.push_back({std::to_string(n), fmt(v, cfg)});
    }
    doc.rows.push_back({"tail_estimate", fmt(est.tail_estimate, cfg)});
    doc.rows.push_back({"window", std::to_string(est.window)});
    doc.rows.push_back({"radius", est.infinite ? "inf" : fmt(est.radius, cfg)});
    doc.rows.push_back({"infinite", est.infinite ? "true" : "false"});
    return doc;
}

int run_univariate(const Config& cfg, const ordered_json& desc) {
    tforge::SolvedProblem solved = tforge::solve_descriptor(desc, cfg.order);
    const tforge::TaylorSeries& s = solved.series;

    if (cfg.command == "radius") {
        tforge::RadiusEstimate est = radius_of(s, cfg);
        if (cfg.format == "json") {
            ordered_json j = radius_json(est);
            j["type"] = solved.type;
            write_output(cfg, j.dump(2) + "\n");
        } else {
            write_output(cfg, render(radius_table(est, cfg), cfg));
        }
        return 0;
    }

    ordered_json evals = ordered_json::array();
    for (double x : solved.eval_points) {
        ordered_json e;
        e["x"] = x;
        double v = tforge::eval_partial_sum(s, x, s.order());
        e["value"] = v;
        if (cfg.compare && solved.closed_form) {
            double exact = solved.closed_form(x);
            e["oracle"] = exact;
            e["abs_error"] = std::fabs(v - exact);
        }
        evals.push_back(std::move(e));
    }

    if (cfg.command == "eval") {
        if (cfg.format == "json") {
            ordered_json j;
            j["type"] = solved.type;
            j["evaluations"] = std::move(evals);
            write_output(cfg, j.dump(2) + "\n");
        } else {
            tforge::TableDocument doc;
            doc.name = "eval";
            doc.columns = cfg.compare && solved.closed_form
                              ? std::vector<std::string>{"x", "value", "oracle", "abs_error"}
                              : std::vector<std::string>{"x", "value"};
            for (const auto& e : evals) {
                std::vector<std::string> row{fmt(e.at("x").get<double>(), cfg),
                                             fmt(e.at("value").get<double>(), cfg, 17)};
                if (doc.columns.size() == 4) {
                    row.push_back(fmt(e.at("oracle").get<double>(), cfg, 17));
                    row.push_back(fmt(e.at("abs_error").get<double>(), cfg));
                }
                doc.rows.push_back(std::move(row));
            }
            write_output(cfg, render(doc, cfg));
        }
        return 0;
    }

    // solve
    if (cfg.format == "json") {
        ordered_json j;
        j["type"] = solved.type;
        j["center"] = s.center();
        j["order"] = s.order();
        j["scale"] = s.scale();
        ordered_json coeffs = ordered_json::array();
        for (int k = 0; k <= s.order(); ++k) coeffs.push_back(s.coeff(k));
        j["coefficients"] = std::move(coeffs);
        if (!solved.closed_form_desc.empty()) j["closed_form"] = solved.closed_form_desc;
        j["evaluations"] = std::move(evals);
        if (solved.residual) {
            ordered_json res = ordered_json::array();
            for (double dx : {0.0, 0.01, 0.1}) {
                double x = s.center() + dx;
                res.push_back({{"x", x}, {"residual", solved.residual(x)}});
            }
            j["residual_samples"] = std::move(res);
        }
        j["radius_estimate"] = radius_json(radius_of(s, cfg));
        write_output(cfg, j.dump(2) + "\n");
    } else {
        tforge::TableDocument doc;
        doc.name = "solve";
        doc.columns = {"k", "c"};
        for (int k = 0; k <= s.order(); ++k) {
            doc.rows.push_back({std::to_string(k), fmt(s.coeff(k), cfg, 17)});
        }
        write_output(cfg, render(doc, cfg));
    }
    return 0;
}

int run_multivar(const Config& cfg, const ordered_json& desc) {
    tforge::MultivarSolved solved = tforge::solve_multivar_descriptor(desc, cfg.order);
    const tforge::MultiTaylor& m = solved.series;

    if (cfg.command == "radius") {
        throw tforge::DescriptorError(
            "radius expects a univariate problem descriptor");
    }

    ordered_json evals = ordered_json::array();
    for (const auto& pt : solved.eval_points) {
        ordered_json e;
        e["point"] = pt;
        double v = tforge::eval_multitaylor(m, pt, m.max_total_degree());
        e["value"] = v;
        if (cfg.compare && solved.closed_form) {
            double exact = solved.closed_form(pt[0], pt[1]);
            e["oracle"] = exact;
            e["abs_error"] = std::fabs(v - exact);
        }
        evals.push_back(std::move(e));
    }

    if (cfg.command == "eval" || cfg.format != "json") {
        tforge::TableDocument doc;
        if (cfg.command == "eval") {
            doc.name = "eval";
            doc.columns = cfg.compare && solved.closed_form
                              ? std::vector<std::string>{"x", "y", "value", "oracle", "abs_error"}
                              : std::vector<std::string>{"x", "y", "value"};
            for (const auto& e : evals) {
                std::vector<double> pt = e.at("point").get<std::vector<double>>();
                std::vector<std::string> row{fmt(pt[0], cfg), fmt(pt[1], cfg),
                                             fmt(e.at("value").get<double>(), cfg, 17)};
                if (doc.columns.size() == 5) {
                    row.push_back(fmt(e.at("oracle").get<double>(), cfg, 17));
                    row.push_back(fmt(e.at("abs_error").get<double>(), cfg));
                }
                doc.rows.push_back(std::move(row));
            }
        } else {
            doc.name = "solve";
            doc.columns = {"j", "k", "C"};
            for (const auto& [alpha, c] : m.coeffs()) {
                doc.rows.push_back({std::to_string(alpha.parts[0]),
                                    std::to_string(alpha.parts[1]),
                                    fmt(c, cfg, 17)});
            }
        }
        if (cfg.format == "json" && cfg.command == "eval") {
            ordered_json j;
            j["type"] = solved.type;
            j["evaluations"] = std::move(evals);
            write_output(cfg, j.dump(2) + "\n");
        } else {
            write_output(cfg, render(doc, cfg));
        }
        return 0;
    }

    ordered_json j;
    j["type"] = solved.type;
    j["center"] = m.center();
    j["degree"] = m.max_total_degree();
    ordered_json coeffs = ordered_json::array();
    for (const auto& [alpha, c] : m.coeffs()) {
        coeffs.push_back({{"alpha", alpha.parts}, {"C", c}});
    }
    j["coefficients"] = std::move(coeffs);
    if (!solved.closed_form_desc.empty()) j["closed_form"] = solved.closed_form_desc;
    j["evaluations"] = std::move(evals);
    write_output(cfg, j.dump(2) + "\n");
    return 0;
}

int dispatch(const Config& cfg) {
    const std::string& cmd = cfg.command;
    if (cmd.rfind("table", 0) == 0) {
        tforge::TableOptions opt{cfg.compare, cfg.full_precision};
        write_output(cfg, render(tforge::run_table(cmd, opt), cfg));
        return 0;
    }
    if (cmd == "solve" || cmd == "radius" || cmd == "eval") {
        ordered_json desc = load_problem(cfg);
        if (descriptor_is_multivar(desc)) return run_multivar(cfg, desc);
        return run_univariate(cfg, desc);
    }
    throw tforge::DescriptorError("unknown command '" + cmd + "'");
}

} // namespace

int main(int argc, char** argv) {
    Config cfg;
    CLI::App app{"Taylor-series ODE/PDE solver and table generator"};
    app.add_option("command", cfg.command,
                   "table1..table6 | solve | radius | eval")
        ->required();
    app.add_option("--problem", cfg.problem_path, "JSON problem descriptor");
    app.add_option("--order", cfg.order, "series truncation order")
        ->check(CLI::PositiveNumber);
    app.add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"csv", "markdown", "json"}));
    app.add_option("--out", cfg.out_path, "output path (default stdout)");
    app.add_flag("--compare", cfg.compare, "attach oracle values and errors");
    app.add_option("--window", cfg.window, "radius tail window")
        ->check(CLI::PositiveNumber);
    app.add_flag("--full-precision", cfg.full_precision,
                 "emit 17 significant digits");
    CLI11_PARSE(app, argc, argv);

    try {
        return dispatch(cfg);
    } catch (const tforge::DescriptorError& e) {
        std::cerr << "descriptor error: " << e.what() << "\n";
        return 2;
    } catch (const tforge::NumericError& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return 3;
    } catch (const tforge::IoError& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return 4;
    }
}
