#include "cavsim/output.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "cavsim/errors.hpp"

namespace cavsim::output {

namespace {

// Fixed palette, one color per basis state / series.
const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                          "#9467bd", "#8c564b", "#17becf", "#7f7f7f"};
constexpr int kPaletteSize = 8;

std::ofstream open_for_write(const std::filesystem::path& path) {
    if (path.has_parent_path()) {
        std::error_code ec;
        std::filesystem::create_directories(path.parent_path(), ec);
        if (ec) {
            throw IoError("cannot create directory " + path.parent_path().string() + ": " +
                          ec.message());
        }
    }
    // Binary mode keeps line endings LF everywhere.
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open " + path.string() + " for writing");
    }
    return out;
}

std::string format_coord(double value) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%.2f", value);
    return buffer;
}

std::string format_tick(double value) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%.4g", value);
    return buffer;
}

}  // namespace

std::string format_value(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

void write_csv(const std::filesystem::path& path, const Table& table) {
    std::ofstream out = open_for_write(path);
    for (std::size_t i = 0; i < table.header.size(); ++i) {
        if (i) out << ',';
        out << table.header[i];
    }
    out << '\n';
    for (const auto& row : table.rows) {
        if (row.size() != table.header.size()) {
            throw IoError("csv row width " + std::to_string(row.size()) +
                          " does not match header width " + std::to_string(table.header.size()));
        }
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out << ',';
            out << row[i];
        }
        out << '\n';
    }
    out.flush();
    if (!out) {
        throw IoError("write failed for " + path.string());
    }
}

void write_line_plot(const std::filesystem::path& path, const std::string& title,
                     const std::vector<double>& times, const std::vector<PlotSeries>& series) {
    if (times.empty() || series.empty()) {
        throw IoError("plot needs at least one sample and one series");
    }
    const double width = 960.0, height = 540.0;
    const double left = 70.0, right = 790.0, top = 50.0, bottom = 500.0;

    const double tmin = times.front();
    const double tmax = std::max(times.back(), tmin + 1e-12);
    double ymin = 0.0, ymax = 0.0;
    for (const auto& s : series) {
        for (double v : s.values) {
            ymin = std::min(ymin, v);
            ymax = std::max(ymax, v);
        }
    }
    if (ymax <= ymin) ymax = ymin + 1.0;
    const double pad = 0.05 * (ymax - ymin);
    ymin -= pad;
    ymax += pad;

    auto x_of = [&](double t) { return left + (t - tmin) / (tmax - tmin) * (right - left); };
    auto y_of = [&](double v) { return bottom - (v - ymin) / (ymax - ymin) * (bottom - top); };

    std::ofstream out = open_for_write(path);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
        << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<text x=\"" << (left + right) / 2.0 << "\" y=\"28\" text-anchor=\"middle\" "
        << "font-family=\"sans-serif\" font-size=\"16\">" << title << "</text>\n";

    // Axes and gridlines.
    out << "<g stroke=\"#cccccc\" stroke-width=\"1\" font-family=\"sans-serif\" font-size=\"11\">\n";
    const int xticks = 6, yticks = 5;
    for (int i = 0; i <= xticks; ++i) {
        const double t = tmin + (tmax - tmin) * i / xticks;
        const double x = x_of(t);
        out << "<line x1=\"" << format_coord(x) << "\" y1=\"" << format_coord(top) << "\" x2=\""
            << format_coord(x) << "\" y2=\"" << format_coord(bottom) << "\"/>\n";
        out << "<text x=\"" << format_coord(x) << "\" y=\"" << format_coord(bottom + 18.0)
            << "\" text-anchor=\"middle\" stroke=\"none\" fill=\"black\">" << format_tick(t)
            << "</text>\n";
    }
    for (int i = 0; i <= yticks; ++i) {
        const double v = ymin + (ymax - ymin) * i / yticks;
        const double y = y_of(v);
        out << "<line x1=\"" << format_coord(left) << "\" y1=\"" << format_coord(y) << "\" x2=\""
            << format_coord(right) << "\" y2=\"" << format_coord(y) << "\"/>\n";
        out << "<text x=\"" << format_coord(left - 8.0) << "\" y=\"" << format_coord(y + 4.0)
            << "\" text-anchor=\"end\" stroke=\"none\" fill=\"black\">" << format_tick(v)
            << "</text>\n";
    }
    out << "</g>\n";
    out << "<text x=\"" << (left + right) / 2.0 << "\" y=\"" << bottom + 36.0
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">t</text>\n";

    for (std::size_t s = 0; s < series.size(); ++s) {
        if (series[s].values.size() != times.size()) {
            throw IoError("series \"" + series[s].label + "\" length does not match time axis");
        }
        out << "<polyline fill=\"none\" stroke=\"" << kPalette[s % kPaletteSize]
            << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < times.size(); ++i) {
            if (i) out << ' ';
            out << format_coord(x_of(times[i])) << ',' << format_coord(y_of(series[s].values[i]));
        }
        out << "\"/>\n";
    }

    // Legend.
    out << "<g font-family=\"sans-serif\" font-size=\"12\">\n";
    for (std::size_t s = 0; s < series.size(); ++s) {
        const double y = top + 16.0 * static_cast<double>(s);
        out << "<line x1=\"" << right + 14.0 << "\" y1=\"" << format_coord(y) << "\" x2=\""
            << right + 38.0 << "\" y2=\"" << format_coord(y) << "\" stroke=\""
            << kPalette[s % kPaletteSize] << "\" stroke-width=\"2\"/>\n";
        out << "<text x=\"" << right + 44.0 << "\" y=\"" << format_coord(y + 4.0) << "\">"
            << series[s].label << "</text>\n";
    }
    out << "</g>\n</svg>\n";
    out.flush();
    if (!out) {
        throw IoError("write failed for " + path.string());
    }
}

}  // namespace cavsim::output
