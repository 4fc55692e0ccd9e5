#include "chiralix/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <stdexcept>

#include <json.hpp>

namespace chiralix::io {

namespace {

void check_shape(const Table& table) {
    for (const auto& row : table.rows)
        if (row.size() != table.columns.size())
            throw std::invalid_argument("table row width does not match the column count");
}

}  // namespace

std::string format_number(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.16e", v);
    return buf;
}

std::string to_csv(const Table& table) {
    check_shape(table);
    std::string out;
    for (const auto& [key, value] : table.meta) {
        out += "# ";
        out += key;
        out += ": ";
        out += value;
        out += '\n';
    }
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        if (c) out += ',';
        out += table.columns[c];
    }
    out += '\n';
    for (const auto& row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) out += ',';
            if (row[c]) out += format_number(*row[c]);
        }
        out += '\n';
    }
    return out;
}

std::string to_json(const Table& table) {
    check_shape(table);
    nlohmann::ordered_json doc;
    doc["meta"] = nlohmann::ordered_json::object();
    for (const auto& [key, value] : table.meta) doc["meta"][key] = value;
    doc["columns"] = table.columns;
    doc["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
        nlohmann::ordered_json jrow = nlohmann::ordered_json::array();
        for (const auto& cell : row) {
            if (cell && std::isfinite(*cell))
                jrow.push_back(*cell);
            else
                jrow.push_back(nullptr);
        }
        doc["rows"].push_back(std::move(jrow));
    }
    return doc.dump(2) + "\n";
}

void write_text(const std::string& path, const std::string& content) {
    if (path == "-") {
        std::cout << content;
        std::cout.flush();
        return;
    }
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) throw std::runtime_error("cannot open output file: " + path);
    file << content;
    if (!file) throw std::runtime_error("write failed: " + path);
}

}  // namespace chiralix::io
