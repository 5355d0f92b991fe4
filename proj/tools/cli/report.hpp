// report.hpp
//
// Serialization helpers: JSON documents with 17 significant digits (non-finite
// values become null) and CSV tables with 12 significant digits, LF endings
// and a '# key=value' config echo above the header row.
#ifndef LIFSHITZ_CLI_REPORT_HPP
#define LIFSHITZ_CLI_REPORT_HPP

#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

namespace lifshitz::cli {

using Json = nlohmann::ordered_json;
using Echo = std::vector<std::pair<std::string, std::string>>;

/// Pretty-printed with two-space indentation and a trailing newline.
std::string dump_json(const Json& doc);

std::string csv_number(double v);

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    void add_row(std::vector<std::string> row);
};

std::string dump_csv(const Echo& echo, const Table& table);

/// Two-column whitespace-separated data for plotting one column against x.
std::string dump_plot_data(const std::string& x_name, const std::string& y_name, const std::vector<double>& x,
                           const std::vector<double>& y);

}  // namespace lifshitz::cli

#endif  // LIFSHITZ_CLI_REPORT_HPP
