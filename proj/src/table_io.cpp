#include "fockmetric/table_io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

namespace fockmetric {

namespace {

constexpr const char* kTool = "fockmetric 0.1.0";

std::string format_value(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

void write_csv(const Table& table, std::ostream& out) {
    for (size_t c = 0; c < table.columns.size(); ++c)
        out << (c ? "," : "") << table.columns[c];
    out << '\n';
    for (const auto& row : table.rows) {
        for (size_t c = 0; c < row.size(); ++c)
            out << (c ? "," : "") << format_value(row[c]);
        out << '\n';
    }
}

Table read_csv(std::istream& in) {
    Table t;
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("read_csv: empty input");
    std::stringstream header(line);
    std::string cell;
    while (std::getline(header, cell, ',')) t.columns.push_back(cell);
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<double> row;
        std::stringstream fields(line);
        while (std::getline(fields, cell, ',')) row.push_back(std::strtod(cell.c_str(), nullptr));
        if (row.size() != t.columns.size())
            throw std::invalid_argument("read_csv: ragged row");
        t.rows.push_back(std::move(row));
    }
    return t;
}

void write_json(const Table& table, std::ostream& out) {
    nlohmann::json j;
    j["command"] = table.command;
    j["params"] = table.params;
    j["columns"] = table.columns;
    j["rows"] = table.rows;
    j["provenance"] = kTool;
    out << j.dump(2) << '\n';
}

void write_table_file(const Table& table, const std::string& path, const std::string& format) {
    if (format != "csv" && format != "json")
        throw std::invalid_argument("write_table_file: format must be csv or json");
    std::ofstream out(path);
    if (!out) throw std::ios_base::failure("cannot open " + path + " for writing");
    if (format == "csv")
        write_csv(table, out);
    else
        write_json(table, out);
    out.flush();
    if (!out) throw std::ios_base::failure("write failed for " + path);
}

}  // namespace fockmetric
