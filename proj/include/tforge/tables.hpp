#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace tforge {

struct TableOptions {
    bool compare = false;        // append oracle/error summary row + flags
    bool full_precision = false; // 17 significant digits instead of table precision
};

// Formatted table: every row has exactly columns.size() cells. Notes are
// emitted in markdown/JSON only, never in CSV, so CSV stays a pure
// rectangular header + rows document.
struct TableDocument {
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> notes;
};

// cmd in {table1..table6}. Cells are computed independently (in
// parallel) and assembled in a fixed order, so output is deterministic.
TableDocument run_table(const std::string& cmd, const TableOptions& opt = {});

std::string to_csv(const TableDocument& doc);
std::string to_markdown(const TableDocument& doc);
nlohmann::ordered_json to_json_doc(const TableDocument& doc);

// Inverse of to_csv for rectangular documents (no quoting; cells never
// contain commas). Notes are not representable in CSV and come back
// empty.
TableDocument parse_csv(const std::string& csv, std::string name);

// Fixed-point formatting helpers shared with the CLI. Locale-independent.
std::string format_fixed(double v, int decimals);
std::string format_full(double v);
std::string format_compact(double v); // %g, for grid labels

} // namespace tforge
