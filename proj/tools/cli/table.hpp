// table.hpp - Column-typed result tables and their CSV / JSON writers

#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace ness::cli {

using Cell = std::variant<double, long long, bool, std::string>;

struct Column {
    std::string name;
    std::string description;
};

struct Table {
    std::vector<Column> columns;
    std::vector<std::vector<Cell>> rows;

    void add_row(std::vector<Cell> row);
};

using Metadata = std::vector<std::pair<std::string, std::string>>;

enum class Format { csv, json };

Format parse_format(const std::string& name);

// 17 significant digits (round-trip exact); nan / inf / -inf for non-finite values.
std::string format_double(double x);

// '#'-prefixed metadata lines, header row, one line per record, LF endings.
// Doubles use 17 significant digits; booleans are written as 1/0.
void write_csv(std::ostream& out, const Metadata& metadata, const Table& table);

// {"metadata": [{"key": ..., "value": ...}], "records": [{column: value}]};
// non-finite doubles become null.
void write_json(std::ostream& out, const Metadata& metadata, const Table& table);

void write_table(std::ostream& out, Format format, const Metadata& metadata, const Table& table);

// Column list as "name,description" lines.
void write_schema(std::ostream& out, const std::vector<Column>& columns);

} // namespace ness::cli
