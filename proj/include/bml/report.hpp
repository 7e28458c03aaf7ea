#ifndef BML_REPORT_HPP
#define BML_REPORT_HPP

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>
#include <utility>
#include <vector>

#include "bml/errors.hpp"

namespace bml {

inline constexpr const char* kToolVersion = "bml 1.0.0";

// Fixed-precision decimal, matching table precision. Values that round
// to zero never keep a minus sign.
inline std::string format_fixed(double v, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
    std::string s = buf;
    if (s.find_first_not_of("-0.") == std::string::npos && s[0] == '-') s.erase(0, 1);
    return s;
}

// Full-precision form that round-trips through text.
inline std::string format_raw(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

struct CsvCell {
    std::string text;
    CsvCell(std::string s) : text(std::move(s)) {}
    CsvCell(const char* s) : text(s) {}
    CsvCell(int v) : text(std::to_string(v)) {}
};

// Minimal CSV: header row, UTF-8, LF endings, no quoting (no field in
// this tool ever contains a comma).
class CsvWriter {
public:
    explicit CsvWriter(std::vector<std::string> header) : header_(std::move(header)) {}

    void add_row(std::vector<CsvCell> cells) {
        if (cells.size() != header_.size())
            throw Error("CSV row width does not match header");
        rows_.push_back(std::move(cells));
    }

    std::string text() const {
        std::string out;
        for (std::size_t i = 0; i < header_.size(); ++i) {
            if (i) out += ',';
            out += header_[i];
        }
        out += '\n';
        for (const auto& row : rows_) {
            for (std::size_t i = 0; i < row.size(); ++i) {
                if (i) out += ',';
                out += row[i].text;
            }
            out += '\n';
        }
        return out;
    }

private:
    std::vector<std::string> header_;
    std::vector<std::vector<CsvCell>> rows_;
};

inline void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);  // binary keeps LF endings everywhere
    if (!out) throw Error("cannot write file: " + path);
    out << text;
    if (!out) throw Error("failed writing file: " + path);
}

// Parses a CSV produced by CsvWriter back into cells.
inline std::vector<std::vector<std::string>> parse_csv_text(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> row;
    std::string cell;
    for (char c : text) {
        if (c == ',') {
            row.push_back(cell);
            cell.clear();
        } else if (c == '\n') {
            row.push_back(cell);
            cell.clear();
            rows.push_back(row);
            row.clear();
        } else {
            cell += c;
        }
    }
    if (!cell.empty() || !row.empty()) {
        row.push_back(cell);
        rows.push_back(row);
    }
    return rows;
}

struct ChartSeries {
    std::string label;
    std::string color;
    std::vector<std::pair<double, double>> points;
};

// Standalone SVG line chart: one polyline per series plus axes and
// labels, nothing more.
inline std::string render_line_chart(const std::vector<ChartSeries>& series,
                                     const std::string& x_label,
                                     const std::string& y_label) {
    const double width = 820.0, height = 520.0;
    const double ml = 70.0, mr = 20.0, mt = 20.0, mb = 60.0;
    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    for (const auto& s : series) {
        for (const auto& [x, y] : s.points) {
            xmin = std::min(xmin, x);
            xmax = std::max(xmax, x);
            ymin = std::min(ymin, y);
            ymax = std::max(ymax, y);
        }
    }
    if (!(xmax > xmin)) xmax = xmin + 1.0;
    if (!(ymax > ymin)) ymax = ymin + 1.0;
    const double yr = ymax - ymin;
    ymin -= 0.05 * yr;
    ymax += 0.05 * yr;

    auto px = [&](double x) {
        return ml + (x - xmin) / (xmax - xmin) * (width - ml - mr);
    };
    auto py = [&](double y) {
        return height - mb - (y - ymin) / (ymax - ymin) * (height - mt - mb);
    };
    auto num = [](double v) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.2f", v);
        return std::string(buf);
    };

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(width) +
           "\" height=\"" + num(height) + "\" viewBox=\"0 0 " + num(width) + " " +
           num(height) + "\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    // axes
    svg += "<line x1=\"" + num(ml) + "\" y1=\"" + num(height - mb) + "\" x2=\"" +
           num(width - mr) + "\" y2=\"" + num(height - mb) +
           "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    svg += "<line x1=\"" + num(ml) + "\" y1=\"" + num(mt) + "\" x2=\"" + num(ml) +
           "\" y2=\"" + num(height - mb) + "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    // ticks
    for (int i = 0; i <= 5; ++i) {
        const double x = xmin + (xmax - xmin) * i / 5.0;
        svg += "<text x=\"" + num(px(x)) + "\" y=\"" + num(height - mb + 18.0) +
               "\" font-size=\"11\" text-anchor=\"middle\">" + num(x) + "</text>\n";
        const double y = ymin + (ymax - ymin) * i / 5.0;
        svg += "<text x=\"" + num(ml - 8.0) + "\" y=\"" + num(py(y) + 4.0) +
               "\" font-size=\"11\" text-anchor=\"end\">" + num(y) + "</text>\n";
    }
    svg += "<text x=\"" + num((ml + width - mr) / 2.0) + "\" y=\"" + num(height - 14.0) +
           "\" font-size=\"13\" text-anchor=\"middle\">" + x_label + "</text>\n";
    svg += "<text x=\"16\" y=\"" + num((mt + height - mb) / 2.0) +
           "\" font-size=\"13\" text-anchor=\"middle\" transform=\"rotate(-90 16 " +
           num((mt + height - mb) / 2.0) + ")\">" + y_label + "</text>\n";

    double legend_y = mt + 10.0;
    for (const auto& s : series) {
        svg += "<polyline fill=\"none\" stroke=\"" + s.color +
               "\" stroke-width=\"1.5\" points=\"";
        for (const auto& [x, y] : s.points) svg += num(px(x)) + "," + num(py(y)) + " ";
        svg += "\"/>\n";
        svg += "<line x1=\"" + num(width - mr - 170.0) + "\" y1=\"" + num(legend_y) +
               "\" x2=\"" + num(width - mr - 140.0) + "\" y2=\"" + num(legend_y) +
               "\" stroke=\"" + s.color + "\" stroke-width=\"1.5\"/>\n";
        svg += "<text x=\"" + num(width - mr - 134.0) + "\" y=\"" + num(legend_y + 4.0) +
               "\" font-size=\"12\">" + s.label + "</text>\n";
        legend_y += 18.0;
    }
    svg += "</svg>\n";
    return svg;
}

}  // namespace bml

#endif  // BML_REPORT_HPP
