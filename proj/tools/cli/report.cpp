#include "report.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace lifshitz::cli {
namespace {

std::string json_float(double v) {
    if (!std::isfinite(v)) return "null";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    std::string s = buf;
    // Keep integral values recognisable as floats.
    if (s.find_first_of(".eE") == std::string::npos) s += ".0";
    return s;
}

void write(const Json& j, std::string& out, int indent) {
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    const std::string inner(static_cast<std::size_t>(indent + 1) * 2, ' ');
    switch (j.type()) {
        case Json::value_t::object: {
            if (j.empty()) {
                out += "{}";
                return;
            }
            out += "{\n";
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) out += ",\n";
                first = false;
                out += inner + Json(it.key()).dump() + ": ";
                write(it.value(), out, indent + 1);
            }
            out += "\n" + pad + "}";
            return;
        }
        case Json::value_t::array: {
            if (j.empty()) {
                out += "[]";
                return;
            }
            out += "[\n";
            for (std::size_t i = 0; i < j.size(); ++i) {
                if (i) out += ",\n";
                out += inner;
                write(j[i], out, indent + 1);
            }
            out += "\n" + pad + "]";
            return;
        }
        case Json::value_t::number_float: out += json_float(j.get<double>()); return;
        default: out += j.dump(); return;
    }
}

std::string quote(const std::string& cell) {
    if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
    std::string q = "\"";
    for (char ch : cell) {
        if (ch == '"') q += '"';
        q += ch;
    }
    return q + '"';
}

}  // namespace

std::string dump_json(const Json& doc) {
    std::string out;
    write(doc, out, 0);
    out += '\n';
    return out;
}

std::string csv_number(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

void Table::add_row(std::vector<std::string> row) {
    if (row.size() != columns.size()) throw std::logic_error("CSV row width does not match the header");
    rows.push_back(std::move(row));
}

std::string dump_csv(const Echo& echo, const Table& table) {
    std::string out;
    for (const auto& [k, v] : echo) out += "# " + k + "=" + v + "\n";
    const auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) out += ',';
            out += quote(cells[i]);
        }
        out += '\n';
    };
    line(table.columns);
    for (const auto& r : table.rows) line(r);
    return out;
}

std::string dump_plot_data(const std::string& x_name, const std::string& y_name, const std::vector<double>& x,
                           const std::vector<double>& y) {
    std::string out = "# " + x_name + " " + y_name + "\n";
    for (std::size_t i = 0; i < x.size(); ++i) out += csv_number(x[i]) + " " + csv_number(y[i]) + "\n";
    return out;
}

}  // namespace lifshitz::cli
