// table.cpp - CSV and JSON serialization

#include "table.hpp"

#include <cmath>
#include <cstdio>

#include <json.hpp>

#include "config.hpp"

namespace ness::cli {

void Table::add_row(std::vector<Cell> row)
{
    if (row.size() != columns.size()) {
        throw std::logic_error("row width does not match the column count");
    }
    rows.push_back(std::move(row));
}

Format parse_format(const std::string& name)
{
    if (name == "csv") return Format::csv;
    if (name == "json") return Format::json;
    throw UsageError("unknown format '" + name + "' (expected csv or json)");
}

std::string format_double(double x)
{
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x == 0.0 ? 0.0 : x);
    return buf;
}

namespace {

std::string csv_escape(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

struct CsvCell {
    std::string operator()(double x) const { return format_double(x); }
    std::string operator()(long long x) const { return std::to_string(x); }
    std::string operator()(bool x) const { return x ? "1" : "0"; }
    std::string operator()(const std::string& x) const { return csv_escape(x); }
};

struct JsonCell {
    nlohmann::json operator()(double x) const
    {
        return std::isfinite(x) ? nlohmann::json(x) : nlohmann::json(nullptr);
    }
    nlohmann::json operator()(long long x) const { return x; }
    nlohmann::json operator()(bool x) const { return x; }
    nlohmann::json operator()(const std::string& x) const { return x; }
};

} // namespace

void write_csv(std::ostream& out, const Metadata& metadata, const Table& table)
{
    for (const auto& [key, value] : metadata) {
        out << "# " << key << ": " << value << '\n';
    }
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        out << (i ? "," : "") << table.columns[i].name;
    }
    out << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            out << (i ? "," : "") << std::visit(CsvCell{}, row[i]);
        }
        out << '\n';
    }
}

void write_json(std::ostream& out, const Metadata& metadata, const Table& table)
{
    nlohmann::ordered_json doc;
    doc["metadata"] = nlohmann::ordered_json::array();
    for (const auto& [key, value] : metadata) {
        doc["metadata"].push_back({{"key", key}, {"value", value}});
    }
    doc["records"] = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
        nlohmann::ordered_json rec = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < row.size(); ++i) {
            rec[table.columns[i].name] = std::visit(JsonCell{}, row[i]);
        }
        doc["records"].push_back(std::move(rec));
    }
    out << doc.dump(1) << '\n';
}

void write_table(std::ostream& out, Format format, const Metadata& metadata, const Table& table)
{
    if (format == Format::csv) write_csv(out, metadata, table);
    else write_json(out, metadata, table);
}

void write_schema(std::ostream& out, const std::vector<Column>& columns)
{
    out << "column,description\n";
    for (const auto& c : columns) {
        out << c.name << ',' << csv_escape(c.description) << '\n';
    }
}

} // namespace ness::cli
