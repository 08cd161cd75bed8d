#include "bhc/table_io.hpp"

#include "bhc/errors.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <unistd.h>

namespace bhc {

OutputFormat output_format_from_string(std::string_view name)
{
    if (name == "csv")
        return OutputFormat::Csv;
    if (name == "json")
        return OutputFormat::Json;
    throw DomainError("unknown output format '" + std::string(name) + "'");
}

void OutputSpec::validate() const
{
    if (precision < 6 || precision > 17)
        throw DomainError("precision must be in [6, 17]");
}

std::string format_number(double value, int precision)
{
    char buf[64];
    const int len = std::snprintf(buf, sizeof buf, "%.*g", precision, value);
    return std::string(buf, static_cast<std::size_t>(len));
}

double round_significant(double value, int precision)
{
    if (!std::isfinite(value))
        return value;
    return std::strtod(format_number(value, precision).c_str(), nullptr);
}

namespace {

std::string format_cell(double value, const DataColumn& column, int precision)
{
    if (column.integer)
        return std::to_string(static_cast<long long>(value));
    return format_number(value, precision);
}

bool is_integer_literal(std::string_view cell)
{
    std::size_t i = (!cell.empty() && cell[0] == '-') ? 1 : 0;
    if (i == cell.size())
        return false;
    for (; i < cell.size(); ++i) {
        if (cell[i] < '0' || cell[i] > '9')
            return false;
    }
    return true;
}

std::vector<std::string_view> split(std::string_view line)
{
    std::vector<std::string_view> cells;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        cells.push_back(line.substr(start, comma - start));
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return cells;
}

double parse_cell(std::string_view cell)
{
    const std::string s(cell);
    char* end = nullptr;
    errno = 0;
    const double v = std::strtod(s.c_str(), &end);
    if (s.empty() || end != s.c_str() + s.size() || errno == ERANGE)
        throw ParseError("not a number: '" + s + "'");
    return v;
}

} // namespace

std::string to_csv(const DataTable& table, int precision)
{
    std::string out;
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        if (c)
            out += ',';
        out += table.columns[c].name;
    }
    out += '\n';
    for (const auto& row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c)
                out += ',';
            out += format_cell(row[c], table.columns[c], precision);
        }
        out += '\n';
    }
    return out;
}

DataTable parse_csv(std::string_view text)
{
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t nl = text.find('\n', start);
        if (nl == std::string_view::npos)
            nl = text.size();
        std::string_view line = text.substr(start, nl - start);
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        lines.push_back(line);
        start = nl + 1;
    }
    if (lines.empty() || lines.front().empty())
        throw ParseError("CSV has no header");

    DataTable table;
    for (std::string_view name : split(lines.front()))
        table.columns.push_back({std::string(name), true});
    for (std::size_t l = 1; l < lines.size(); ++l) {
        if (lines[l].empty())
            continue;
        const auto cells = split(lines[l]);
        if (cells.size() != table.columns.size())
            throw ParseError("CSV row " + std::to_string(l + 1) + " has " + std::to_string(cells.size())
                             + " cells, expected " + std::to_string(table.columns.size()));
        std::vector<double> row;
        row.reserve(cells.size());
        for (std::size_t c = 0; c < cells.size(); ++c) {
            if (!is_integer_literal(cells[c]))
                table.columns[c].integer = false;
            row.push_back(parse_cell(cells[c]));
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

DataTable to_data_table(const ConstantTable& table)
{
    DataTable out;
    out.columns = {{"n", true}, {"value", false}};
    for (const TableRow& row : table.values)
        out.rows.push_back({static_cast<double>(row.n), row.value});
    return out;
}

std::string to_csv(const ConstantTable& table, int precision)
{
    return to_csv(to_data_table(table), precision);
}

Json to_json(const ConstantTable& table, int precision)
{
    Json rows = Json::array();
    for (const TableRow& row : table.values)
        rows.push_back({{"n", row.n}, {"value", round_significant(row.value, precision)}});
    return {{"family", std::string(to_string(table.spec.family))},
            {"scalars", to_string(table.spec.scalar_field)},
            {"t", table.spec.t},
            {"rows", rows}};
}

Json to_json(const DataTable& table, int precision)
{
    Json rows = Json::array();
    for (const auto& row : table.rows) {
        Json obj = Json::object();
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (table.columns[c].integer)
                obj[table.columns[c].name] = static_cast<long long>(row[c]);
            else
                obj[table.columns[c].name] = round_significant(row[c], precision);
        }
        rows.push_back(std::move(obj));
    }
    return rows;
}

void write_file_atomic(const std::string& path, std::string_view content)
{
    namespace fs = std::filesystem;
    const std::string tmp = path + ".tmp." + std::to_string(::getpid());
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f)
            throw IoError("cannot open '" + tmp + "' for writing");
        f.write(content.data(), static_cast<std::streamsize>(content.size()));
        f.flush();
        if (!f) {
            f.close();
            std::error_code ec;
            fs::remove(tmp, ec);
            throw IoError("write to '" + tmp + "' failed");
        }
    }
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec) {
        std::error_code ignore;
        fs::remove(tmp, ignore);
        throw IoError("cannot rename '" + tmp + "' to '" + path + "': " + ec.message());
    }
}

void write_output(const OutputSpec& spec, std::string_view content, std::ostream& out)
{
    if (spec.path.empty() || spec.path == "-") {
        out << content;
        out.flush();
        if (!out)
            throw IoError("write to standard output failed");
        return;
    }
    write_file_atomic(spec.path, content);
}

} // namespace bhc
