#pragma once

#include <filesystem>
#include <string>
#include <vector>

// Deterministic file emission: CSV tables (17 significant digits, LF line
// endings) and static SVG line plots of populations against time.
namespace cavsim::output {

// %.17g rendering used for every numeric cell.
std::string format_value(double value);

struct Table {
    std::vector<std::string> header;
    // Cells are preformatted strings so string-valued columns (sweep axis
    // labels) and numbers mix freely.
    std::vector<std::vector<std::string>> rows;
};

void write_csv(const std::filesystem::path& path, const Table& table);

struct PlotSeries {
    std::string label;
    std::vector<double> values;
};

void write_line_plot(const std::filesystem::path& path, const std::string& title,
                     const std::vector<double>& times, const std::vector<PlotSeries>& series);

}  // namespace cavsim::output
