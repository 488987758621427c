#pragma once

#include <iosfwd>
#include <string>

#include "fockmetric/tables.hpp"

namespace fockmetric {

// CSV: header row with the column names, then one row per line, values at 17
// significant digits so a double round-trips losslessly. UTF-8, LF endings.
void write_csv(const Table& table, std::ostream& out);

// Re-parse of the CSV layout above; used to certify the round trip.
Table read_csv(std::istream& in);

// Single JSON object {command, params, columns, rows, provenance}.
void write_json(const Table& table, std::ostream& out);

void write_table_file(const Table& table, const std::string& path,
                      const std::string& format);

}  // namespace fockmetric
