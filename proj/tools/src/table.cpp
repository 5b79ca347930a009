#include "table.hpp"

#include <ostream>
#include <stdexcept>

#include <fmt/format.h>

#include "pf/error.hpp"

namespace pf::cli {

Column& Table::add(std::string name, std::string unit) {
    columns.push_back({std::move(name), std::move(unit), {}});
    return columns.back();
}

std::size_t Table::rows() const {
    return columns.empty() ? 0 : columns.front().values.size();
}

void Table::validate() const {
    for (const auto& c : columns) {
        if (c.values.size() != rows()) throw ValidationError("table: ragged column " + c.name);
    }
}

Format parse_format(const std::string& s) {
    if (s == "csv") return Format::Csv;
    if (s == "json") return Format::Json;
    throw ValidationError("unknown format " + s);
}

std::string extension(Format f) {
    return f == Format::Csv ? ".csv" : ".json";
}

void write_csv(const Table& t, std::ostream& out) {
    t.validate();
    for (const auto& [key, value] : t.meta.items()) {
        out << "# " << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump())
            << '\n';
    }
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
        out << (i ? "," : "") << t.columns[i].name << ':' << t.columns[i].unit;
    }
    out << '\n';
    for (std::size_t r = 0; r < t.rows(); ++r) {
        for (std::size_t i = 0; i < t.columns.size(); ++i) {
            out << (i ? "," : "") << fmt::format("{}", t.columns[i].values[r]);
        }
        out << '\n';
    }
}

void write_json(const Table& t, std::ostream& out) {
    t.validate();
    nlohmann::ordered_json doc;
    doc["meta"] = t.meta;
    doc["columns"] = nlohmann::ordered_json::array();
    for (const auto& c : t.columns) {
        doc["columns"].push_back({{"name", c.name}, {"unit", c.unit}, {"values", c.values}});
    }
    out << doc.dump(2) << '\n';
}

void write_table(const Table& t, Format f, std::ostream& out) {
    if (f == Format::Csv) {
        write_csv(t, out);
    } else {
        write_json(t, out);
    }
}

}  // namespace pf::cli
