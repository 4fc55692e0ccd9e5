// io.hpp - deterministic table output (CSV with # metadata header, JSON mirror)
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace chiralix::io {

struct Table {
    std::vector<std::pair<std::string, std::string>> meta;  // emitted in order
    std::vector<std::string> columns;
    std::vector<std::vector<std::optional<double>>> rows;   // nullopt = blank cell
};

// 17 significant digits, round-trip exact: "%.16e".
std::string format_number(double v);

// "# key: value" header lines, then the column row, then data rows.
std::string to_csv(const Table& table);

// {"meta": {...}, "columns": [...], "rows": [[...]]}; blanks and non-finite
// values become null.
std::string to_json(const Table& table);

// path "-" writes to stdout; anything else is created or truncated.
void write_text(const std::string& path, const std::string& content);

}  // namespace chiralix::io
