#pragma once

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace mpqw {

/// Shortest representation with the given number of significant digits.
/// All serialized floats in this project use 12 digits; circuit angles use 9.
inline std::string format_double(double x, int significant = 12) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", significant, x);
    return buf;
}

inline std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == '\n') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

inline std::vector<std::string> split_tokens(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

/// Parses "key = value" lines; returns false on blank/comment lines.
inline bool parse_key_value(const std::string& line, std::string& key, std::string& value) {
    const auto eq = line.find('=');
    if (eq == std::string::npos) return false;
    auto trim = [](std::string s) {
        const auto b = s.find_first_not_of(" \t");
        const auto e = s.find_last_not_of(" \t");
        return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
    };
    key = trim(line.substr(0, eq));
    value = trim(line.substr(eq + 1));
    return !key.empty();
}

inline double parse_double(const std::string& s) {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("malformed number: " + s);
    return v;
}

inline long long parse_int(const std::string& s) {
    std::size_t pos = 0;
    const long long v = std::stoll(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("malformed integer: " + s);
    return v;
}

/// Minimal SVG line plot: one polyline per series over a framed plot area,
/// with optional horizontal marker lines (used for the epsilon bands).
struct SvgSeries {
    std::vector<double> x;
    std::vector<double> y;
    std::string color = "#1f6fb2";
};

inline void write_svg_plot(std::ostream& out, const std::vector<SvgSeries>& series,
                           const std::vector<double>& hlines, const std::string& x_label,
                           const std::string& y_label) {
    const double width = 720, height = 440;
    const double l = 70, r = 20, top = 20, bot = 50;
    double xmin = 0, xmax = 1, ymin = 0, ymax = 1;
    bool first = true;
    for (const auto& s : series)
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            if (first) {
                xmin = xmax = s.x[i];
                ymin = ymax = s.y[i];
                first = false;
            }
            xmin = std::min(xmin, s.x[i]);
            xmax = std::max(xmax, s.x[i]);
            ymin = std::min(ymin, s.y[i]);
            ymax = std::max(ymax, s.y[i]);
        }
    for (double h : hlines) {
        ymin = std::min(ymin, h);
        ymax = std::max(ymax, h);
    }
    if (xmax == xmin) xmax = xmin + 1;
    if (ymax == ymin) ymax = ymin + 1;
    const double ypad = 0.05 * (ymax - ymin);
    ymin -= ypad;
    ymax += ypad;
    auto px = [&](double x) { return l + (x - xmin) / (xmax - xmin) * (width - l - r); };
    auto py = [&](double y) { return height - bot - (y - ymin) / (ymax - ymin) * (height - top - bot); };

    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    out << "  <rect x=\"" << l << "\" y=\"" << top << "\" width=\"" << width - l - r
        << "\" height=\"" << height - top - bot
        << "\" fill=\"none\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
    for (double h : hlines)
        out << "  <line x1=\"" << l << "\" y1=\"" << py(h) << "\" x2=\"" << width - r
            << "\" y2=\"" << py(h)
            << "\" stroke=\"#b24a4a\" stroke-width=\"1\" stroke-dasharray=\"6,4\"/>\n";
    for (const auto& s : series) {
        out << "  <polyline fill=\"none\" stroke=\"" << s.color
            << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            if (i) out << ' ';
            out << format_double(px(s.x[i]), 8) << ',' << format_double(py(s.y[i]), 8);
        }
        out << "\"/>\n";
    }
    out << "  <text x=\"" << (l + width - r) / 2 << "\" y=\"" << height - 14
        << "\" font-size=\"14\" text-anchor=\"middle\">" << x_label << "</text>\n";
    out << "  <text x=\"18\" y=\"" << (top + height - bot) / 2
        << "\" font-size=\"14\" text-anchor=\"middle\" transform=\"rotate(-90 18 "
        << (top + height - bot) / 2 << ")\">" << y_label << "</text>\n";
    out << "  <text x=\"" << l - 8 << "\" y=\"" << py(ymin) + 4
        << "\" font-size=\"11\" text-anchor=\"end\">" << format_double(ymin, 4) << "</text>\n";
    out << "  <text x=\"" << l - 8 << "\" y=\"" << py(ymax) + 4
        << "\" font-size=\"11\" text-anchor=\"end\">" << format_double(ymax, 4) << "</text>\n";
    out << "  <text x=\"" << px(xmin) << "\" y=\"" << height - bot + 16
        << "\" font-size=\"11\" text-anchor=\"middle\">" << format_double(xmin, 6) << "</text>\n";
    out << "  <text x=\"" << px(xmax) << "\" y=\"" << height - bot + 16
        << "\" font-size=\"11\" text-anchor=\"middle\">" << format_double(xmax, 6) << "</text>\n";
    out << "</svg>\n";
}

}  // namespace mpqw
