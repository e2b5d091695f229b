#include "tforge/tables.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>

#include "tforge/errors.hpp"
#include "tforge/kernels.hpp"
#include "tforge/ode.hpp"
#include "tforge/oracles.hpp"
#include "tforge/radius.hpp"

namespace tforge {

std::string format_fixed(double v, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
    return buf;
}

std::string format_full(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string format_compact(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

namespace {

std::string format_cell(double v, int decimals, const TableOptions& opt) {
    return opt.full_precision ? format_full(v) : format_fixed(v, decimals);
}

std::string format_error(double v, const TableOptions& opt) {
    if (opt.full_precision) return format_full(v);
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.3e", v);
    return buf;
}

// Partial-sum table against a truth column: the layout shared by the
// Gaussian CDF table and the two exp(-1/x^2) tables.
TableDocument partial_sum_table(std::string name, const std::string& grid_label,
                                const std::vector<double>& xs,
                                const std::vector<int>& orders,
                                const std::string& order_prefix,
                                const std::string& truth_label,
                                const TaylorSeries& series,
                                const std::function<double(double)>& truth,
                                int decimals, const TableOptions& opt) {
    const int ncols = static_cast<int>(orders.size()) + 1; // value cells per row
    const int nrows = static_cast<int>(xs.size());
    std::vector<double> cells = kernels::parallel_map(
        nrows * ncols, [&](int i) {
            int r = i / ncols, c = i % ncols;
            if (c < static_cast<int>(orders.size())) {
                return eval_partial_sum(series, xs[static_cast<size_t>(r)],
                                        orders[static_cast<size_t>(c)]);
            }
            return truth(xs[static_cast<size_t>(r)]);
        });

    TableDocument doc;
    doc.name = std::move(name);
    doc.columns.push_back(grid_label);
    for (int n : orders) doc.columns.push_back(order_prefix + std::to_string(n));
    doc.columns.push_back(truth_label);
    for (int r = 0; r < nrows; ++r) {
        std::vector<std::string> row{format_compact(xs[static_cast<size_t>(r)])};
        for (int c = 0; c < ncols; ++c) {
            row.push_back(format_cell(cells[static_cast<size_t>(r * ncols + c)],
                                      decimals, opt));
        }
        doc.rows.push_back(std::move(row));
    }
    if (opt.compare) {
        std::vector<std::string> summary{"max_abs_error"};
        for (size_t c = 0; c + 1 < static_cast<size_t>(ncols); ++c) {
            double worst = 0.0;
            for (int r = 0; r < nrows; ++r) {
                double approx = cells[static_cast<size_t>(r) * ncols + c];
                double exact = cells[static_cast<size_t>(r) * ncols +
                                     static_cast<size_t>(ncols) - 1];
                worst = std::max(worst, std::fabs(approx - exact));
            }
            summary.push_back(format_error(worst, opt));
        }
        summary.emplace_back("");
        doc.rows.push_back(std::move(summary));
    }
    return doc;
}

const std::vector<int> kRootCheckpoints = {10, 50, 100, 500, 750, 1000, 1500, 2000};

TableDocument root_table(std::string name, double x0, const TableOptions& opt) {
    TaylorSeries series = expinvsq_taylor(x0, 2000);
    auto roots = root_sequence(series, kRootCheckpoints);
    TableDocument doc;
    doc.name = std::move(name);
    doc.columns = {"n", "root"};
    for (const auto& [n, v] : roots) {
        doc.rows.push_back({std::to_string(n), format_cell(v, 4, opt)});
    }
    if (opt.compare) doc.notes.push_back("no oracle column for this table");
    return doc;
}

} // namespace

TableDocument run_table(const std::string& cmd, const TableOptions& opt) {
    if (cmd == "table1") {
        TaylorSeries series = solve_gaussian_cdf(75).series;
        TableDocument doc = partial_sum_table(
            "table1", "x",
            {-4, -3.6, -2.8, -2.2, -1.5, -1, 0, 1, 1.5, 2.2, 2.8, 3.6, 4},
            {5, 10, 25, 50, 75}, "n=", "real",
            series, [](double x) { return oracles::normal_cdf_reference(x); }, 7,
            opt);
        doc.notes.push_back("n=5 column is supplementary; the reference "
                            "baseline starts at n=10");
        return doc;
    }
    if (cmd == "table2" || cmd == "table3") {
        const double x0 = cmd == "table2" ? 1.0 : 2.0;
        const std::vector<double> xs =
            cmd == "table2"
                ? std::vector<double>{0.01, 0.1, 0.2, 0.4, 0.6, 0.8, 1,
                                      1.2, 1.4, 1.6, 1.8, 1.9, 2}
                : std::vector<double>{0.01, 0.2, 0.4, 0.8, 1.2, 1.6, 2,
                                      2.4, 2.8, 3.2, 3.6, 3.8, 4};
        TaylorSeries series = expinvsq_taylor(x0, 100);
        TableDocument doc = partial_sum_table(
            cmd, "x", xs, {5, 20, 50, 75, 100}, "m=", "f(x)", series,
            [](double x) { return x == 0.0 ? 0.0 : std::exp(-1.0 / (x * x)); }, 6,
            opt);
        if (cmd == "table3" && opt.compare) {
            // These cells are known transcription anomalies in the source
            // table; reported, never asserted.
            doc.notes.push_back("paper-suspect cell x=0.8, m=5");
            doc.notes.push_back("paper-suspect cell x=0.8, m=20");
            doc.notes.push_back("paper-suspect cell x=3.6, m=75");
            doc.notes.push_back("paper-suspect cell x=3.8, m=75");
        }
        return doc;
    }
    if (cmd == "table4") return root_table("table4", 1.0, opt);
    if (cmd == "table5") return root_table("table5", 2.0, opt);
    if (cmd == "table6") {
        auto d3 = multivariate_diagonal_sequence(3, kRootCheckpoints);
        auto d4 = multivariate_diagonal_sequence(4, kRootCheckpoints);
        TableDocument doc;
        doc.name = "table6";
        doc.columns = {"k", "dim3", "dim4"};
        for (size_t i = 0; i < kRootCheckpoints.size(); ++i) {
            doc.rows.push_back({std::to_string(kRootCheckpoints[i]),
                                format_cell(d3[i].second, 4, opt),
                                format_cell(d4[i].second, 4, opt)});
        }
        if (opt.compare) doc.notes.push_back("no oracle column for this table");
        return doc;
    }
    throw DescriptorError("unknown table command '" + cmd + "'");
}

std::string to_csv(const TableDocument& doc) {
    std::string out;
    auto emit_row = [&out](const std::vector<std::string>& row) {
        for (size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += row[i];
        }
        out += '\n';
    };
    emit_row(doc.columns);
    for (const auto& row : doc.rows) emit_row(row);
    return out;
}

std::string to_markdown(const TableDocument& doc) {
    std::string out;
    auto emit_row = [&out](const std::vector<std::string>& row) {
        out += '|';
        for (const auto& cell : row) {
            out += ' ';
            out += cell;
            out += " |";
        }
        out += '\n';
    };
    emit_row(doc.columns);
    out += '|';
    for (size_t i = 0; i < doc.columns.size(); ++i) out += "---|";
    out += '\n';
    for (const auto& row : doc.rows) emit_row(row);
    if (!doc.notes.empty()) {
        out += '\n';
        for (const auto& note : doc.notes) {
            out += "- ";
            out += note;
            out += '\n';
        }
    }
    return out;
}

nlohmann::ordered_json to_json_doc(const TableDocument& doc) {
    nlohmann::ordered_json j;
    j["name"] = doc.name;
    j["columns"] = doc.columns;
    j["rows"] = doc.rows;
    j["notes"] = doc.notes;
    return j;
}

TableDocument parse_csv(const std::string& csv, std::string name) {
    TableDocument doc;
    doc.name = std::move(name);
    std::vector<std::vector<std::string>> lines;
    std::vector<std::string> fields;
    std::string cell;
    for (char ch : csv) {
        if (ch == '\n') {
            fields.push_back(cell);
            cell.clear();
            lines.push_back(std::move(fields));
            fields.clear();
        } else if (ch == ',') {
            fields.push_back(cell);
            cell.clear();
        } else {
            cell += ch;
        }
    }
    if (!cell.empty() || !fields.empty()) {
        throw IoError("parse_csv: missing trailing newline");
    }
    if (lines.empty()) throw IoError("parse_csv: empty document");
    doc.columns = lines.front();
    for (size_t i = 1; i < lines.size(); ++i) {
        if (lines[i].size() != doc.columns.size()) {
            throw IoError("parse_csv: ragged row " + std::to_string(i));
        }
        doc.rows.push_back(std::move(lines[i]));
    }
    return doc;
}

} // namespace tforge
