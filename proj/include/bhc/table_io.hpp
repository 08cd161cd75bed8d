#pragma once

// CSV and JSON emission for constant tables and plot data.
//
// CSV: one header row, comma separated, integer columns printed exactly and
// real columns with "%.*g" at the configured precision. Parsing an emitted
// table and emitting it again reproduces the bytes.

#include "bhc/report.hpp"
#include "bhc/sequences.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace bhc {

enum class OutputFormat { Csv, Json };

OutputFormat output_format_from_string(std::string_view name);

inline constexpr int kDefaultPrecision = 12;

struct OutputSpec {
    OutputFormat format = OutputFormat::Csv;
    int precision = kDefaultPrecision; // significant digits, 6..17
    std::string path;                  // empty: standard output

    /// DomainError unless precision is in [6, 17].
    void validate() const;
};

std::string format_number(double value, int precision);

/// value rounded to `precision` significant digits.
double round_significant(double value, int precision);

struct DataColumn {
    std::string name;
    bool integer = false;
};

struct DataTable {
    std::vector<DataColumn> columns;
    std::vector<std::vector<double>> rows;
};

std::string to_csv(const DataTable& table, int precision);

/// Columns are integer when every cell is a plain integer literal.
/// ParseError on ragged rows or non-numeric cells.
DataTable parse_csv(std::string_view text);

DataTable to_data_table(const ConstantTable& table);
std::string to_csv(const ConstantTable& table, int precision);
Json to_json(const ConstantTable& table, int precision);

/// Array of row objects keyed by column name.
Json to_json(const DataTable& table, int precision);

/// Writes to spec.path through a temporary file and rename, or to `out` when
/// the path is empty. IoError on failure; no partial file is left behind.
void write_output(const OutputSpec& spec, std::string_view content, std::ostream& out);

/// Same, for an explicit path.
void write_file_atomic(const std::string& path, std::string_view content);

} // namespace bhc
