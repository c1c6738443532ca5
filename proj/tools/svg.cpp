#include "svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "csv.hpp"  // IoError, format_number

namespace gsm::cli {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 480.0;
constexpr double kLeft = 64.0;
constexpr double kRight = 616.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 432.0;
constexpr int kTicks = 6;

const char* const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

std::string px(double value) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", value);
    return buf;
}

std::string xml_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

struct Range {
    double lo = 0.0;
    double hi = 1.0;

    double map(double v, double out_lo, double out_hi) const {
        return out_lo + (v - lo) / (hi - lo) * (out_hi - out_lo);
    }
};

}  // namespace

void emit_svg_polyline(std::ostream& out, const std::vector<SvgSeries>& series,
                       const SvgAxes& axes, const std::vector<std::string>& metadata) {
    if (series.empty()) throw std::logic_error("svg needs at least one series");
    for (const SvgSeries& s : series) {
        if (s.x.size() != s.y.size()) {
            throw std::logic_error("svg series '" + s.name + "' has mismatched x/y lengths");
        }
        if (s.x.size() < 2) {
            throw std::logic_error("svg series '" + s.name + "' needs at least 2 points");
        }
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) {
                throw std::logic_error("svg series '" + s.name + "' has a non-finite value");
            }
        }
    }

    Range rx{series[0].x[0], series[0].x[0]};
    Range ry{series[0].y[0], series[0].y[0]};
    for (const SvgSeries& s : series) {
        for (double v : s.x) { rx.lo = std::min(rx.lo, v); rx.hi = std::max(rx.hi, v); }
        for (double v : s.y) { ry.lo = std::min(ry.lo, v); ry.hi = std::max(ry.hi, v); }
    }
    if (rx.hi == rx.lo) { rx.lo -= 0.5; rx.hi += 0.5; }
    if (ry.hi == ry.lo) { ry.lo -= 0.5; ry.hi += 0.5; }
    const double pad = 0.05 * (ry.hi - ry.lo);
    ry.lo -= pad;
    ry.hi += pad;

    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    for (const std::string& line : metadata) {
        out << "<!-- " << xml_escape(line) << " -->\n";
    }
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
        << kHeight << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\">\n";
    out << "<rect width=\"" << kWidth << "\" height=\"" << kHeight << "\" fill=\"white\"/>\n";
    if (!axes.title.empty()) {
        out << "<text x=\"" << px(0.5 * kWidth)
            << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"15\">"
            << xml_escape(axes.title) << "</text>\n";
    }

    // grid and tick labels
    for (int t = 0; t < kTicks; ++t) {
        const double f = static_cast<double>(t) / (kTicks - 1);
        const double xv = rx.lo + f * (rx.hi - rx.lo);
        const double yv = ry.lo + f * (ry.hi - ry.lo);
        const double xp = rx.map(xv, kLeft, kRight);
        const double yp = ry.map(yv, kBottom, kTop);
        out << "<line x1=\"" << px(xp) << "\" y1=\"" << px(kTop) << "\" x2=\"" << px(xp)
            << "\" y2=\"" << px(kBottom) << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
        out << "<line x1=\"" << px(kLeft) << "\" y1=\"" << px(yp) << "\" x2=\"" << px(kRight)
            << "\" y2=\"" << px(yp) << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
        out << "<text x=\"" << px(xp) << "\" y=\"" << px(kBottom + 18.0)
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">"
            << format_number(xv) << "</text>\n";
        out << "<text x=\"" << px(kLeft - 8.0) << "\" y=\"" << px(yp + 4.0)
            << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
            << format_number(yv) << "</text>\n";
    }

    // axes
    out << "<line x1=\"" << px(kLeft) << "\" y1=\"" << px(kBottom) << "\" x2=\"" << px(kRight)
        << "\" y2=\"" << px(kBottom) << "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    out << "<line x1=\"" << px(kLeft) << "\" y1=\"" << px(kTop) << "\" x2=\"" << px(kLeft)
        << "\" y2=\"" << px(kBottom) << "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    if (!axes.x_label.empty()) {
        out << "<text x=\"" << px(0.5 * (kLeft + kRight)) << "\" y=\"" << px(kHeight - 8.0)
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">"
            << xml_escape(axes.x_label) << "</text>\n";
    }
    if (!axes.y_label.empty()) {
        out << "<text x=\"16\" y=\"" << px(0.5 * (kTop + kBottom))
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" "
               "transform=\"rotate(-90 16 "
            << px(0.5 * (kTop + kBottom)) << ")\">" << xml_escape(axes.y_label) << "</text>\n";
    }

    // data
    for (std::size_t si = 0; si < series.size(); ++si) {
        const SvgSeries& s = series[si];
        const char* color = kPalette[si % (sizeof(kPalette) / sizeof(kPalette[0]))];
        out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.8\" points=\"";
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            if (i > 0) out << " ";
            out << px(rx.map(s.x[i], kLeft, kRight)) << "," << px(ry.map(s.y[i], kBottom, kTop));
        }
        out << "\"/>\n";
    }

    // legend
    for (std::size_t si = 0; si < series.size(); ++si) {
        const char* color = kPalette[si % (sizeof(kPalette) / sizeof(kPalette[0]))];
        const double ly = kTop + 16.0 + 18.0 * static_cast<double>(si);
        out << "<line x1=\"" << px(kRight - 150.0) << "\" y1=\"" << px(ly) << "\" x2=\""
            << px(kRight - 126.0) << "\" y2=\"" << px(ly) << "\" stroke=\"" << color
            << "\" stroke-width=\"1.8\"/>\n";
        out << "<text x=\"" << px(kRight - 120.0) << "\" y=\"" << px(ly + 4.0)
            << "\" font-family=\"sans-serif\" font-size=\"12\">" << xml_escape(series[si].name)
            << "</text>\n";
    }
    out << "</svg>\n";
}

void write_svg_file(const std::string& path, const std::vector<SvgSeries>& series,
                    const SvgAxes& axes, const std::vector<std::string>& metadata) {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw IoError("cannot open for writing: " + path);
    emit_svg_polyline(file, series, axes, metadata);
    file.flush();
    if (!file) throw IoError("write failed: " + path);
}

}  // namespace gsm::cli
