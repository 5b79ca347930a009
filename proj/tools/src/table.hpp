#pragma once

#include <deque>
#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

namespace pf::cli {

struct Column {
    std::string name;
    std::string unit;  // "1" for dimensionless
    std::vector<double> values;
};

// A rectangular numeric table with free-form metadata.
struct Table {
    std::deque<Column> columns;  // stable references across add()
    nlohmann::ordered_json meta = nlohmann::ordered_json::object();

    Column& add(std::string name, std::string unit);
    std::size_t rows() const;
    void validate() const;
};

enum class Format { Csv, Json };

Format parse_format(const std::string& s);
std::string extension(Format f);

// CSV: metadata as leading "# key: value" lines, then a single `name:unit`
// header row. Numbers use the shortest round-trip representation.
void write_csv(const Table& t, std::ostream& out);
// {"meta": {...}, "columns": [{"name", "unit", "values"}...]}
void write_json(const Table& t, std::ostream& out);
void write_table(const Table& t, Format f, std::ostream& out);

}  // namespace pf::cli
