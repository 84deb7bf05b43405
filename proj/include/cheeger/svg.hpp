#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "cheeger/error.hpp"

namespace cheeger::svg {

struct Series {
    std::string label;
    std::vector<std::pair<double, double>> points;
};

struct RefLine {
    double y = 0;
    std::string label;
};

struct ChartOptions {
    std::string title;
    std::string x_label;
    std::string y_label;
    bool log_y = false;
    bool steps = false;  // staircase rendering (histograms)
    std::vector<RefLine> ref_lines;
};

namespace detail {

inline std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

inline std::string tick_label(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

inline std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            default: out += c;
        }
    }
    return out;
}

// Round the raw step to 1/2/5 times a power of ten.
inline double nice_step(double span, int target_ticks) {
    const double raw = span / std::max(1, target_ticks);
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    for (double m : {1.0, 2.0, 5.0, 10.0})
        if (raw <= m * mag * (1 + 1e-12)) return m * mag;
    return 10 * mag;
}

inline constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                           "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

}  // namespace detail

// Renders series as polylines with axes, ticks, legend and optional
// reference lines. Output is deterministic: fixed canvas, fixed formatting,
// no timestamps.
inline std::string line_chart(const std::vector<Series>& series, const ChartOptions& opt) {
    const double width = 720, height = 480;
    const double left = 70, right = 24, top = opt.title.empty() ? 20 : 44, bottom = 56;
    const double plot_w = width - left - right;
    const double plot_h = height - top - bottom;

    double x_min = 1e300, x_max = -1e300, y_min = 1e300, y_max = -1e300;
    std::size_t total_points = 0;
    for (const Series& s : series)
        for (auto [x, y] : s.points) {
            if (opt.log_y && y <= 0) continue;
            x_min = std::min(x_min, x);
            x_max = std::max(x_max, x);
            y_min = std::min(y_min, y);
            y_max = std::max(y_max, y);
            ++total_points;
        }
    for (const RefLine& r : opt.ref_lines) {
        y_min = std::min(y_min, r.y);
        y_max = std::max(y_max, r.y);
    }
    if (total_points == 0) fail(errc::invalid_parameters, "no drawable points");
    if (x_min == x_max) {
        x_min -= 1;
        x_max += 1;
    }
    if (y_min == y_max) {
        y_min -= 1;
        y_max += 1;
    }
    if (!opt.log_y) {
        const double pad = 0.06 * (y_max - y_min);
        y_min -= pad;
        y_max += pad;
    }

    auto ty = [&](double y) {
        const double v = opt.log_y ? std::log10(y) : y;
        const double lo = opt.log_y ? std::log10(y_min) : y_min;
        const double hi = opt.log_y ? std::log10(y_max) : y_max;
        return top + plot_h * (1 - (v - lo) / (hi - lo));
    };
    auto tx = [&](double x) { return left + plot_w * (x - x_min) / (x_max - x_min); };

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"720\" height=\"480\" "
           "viewBox=\"0 0 720 480\" font-family=\"sans-serif\">\n";
    out += "<rect width=\"720\" height=\"480\" fill=\"white\"/>\n";
    if (!opt.title.empty())
        out += "<text x=\"360\" y=\"24\" text-anchor=\"middle\" font-size=\"16\">" +
               detail::escape(opt.title) + "</text>\n";

    // axes frame
    out += "<rect x=\"" + detail::num(left) + "\" y=\"" + detail::num(top) + "\" width=\"" +
           detail::num(plot_w) + "\" height=\"" + detail::num(plot_h) +
           "\" fill=\"none\" stroke=\"#333\"/>\n";

    // x ticks
    const double x_step = detail::nice_step(x_max - x_min, 8);
    for (double x = std::ceil(x_min / x_step) * x_step; x <= x_max + 1e-9; x += x_step) {
        const double px = tx(x);
        out += "<line x1=\"" + detail::num(px) + "\" y1=\"" + detail::num(top + plot_h) +
               "\" x2=\"" + detail::num(px) + "\" y2=\"" + detail::num(top + plot_h + 5) +
               "\" stroke=\"#333\"/>\n";
        out += "<text x=\"" + detail::num(px) + "\" y=\"" + detail::num(top + plot_h + 20) +
               "\" text-anchor=\"middle\" font-size=\"12\">" + detail::tick_label(x) + "</text>\n";
    }

    // y ticks
    if (opt.log_y) {
        const int lo = int(std::floor(std::log10(y_min)));
        const int hi = int(std::ceil(std::log10(y_max)));
        for (int e = lo; e <= hi; ++e) {
            const double y = std::pow(10.0, e);
            if (y < y_min || y > y_max) continue;
            const double py = ty(y);
            out += "<line x1=\"" + detail::num(left) + "\" y1=\"" + detail::num(py) + "\" x2=\"" +
                   detail::num(left + plot_w) + "\" y2=\"" + detail::num(py) +
                   "\" stroke=\"#ddd\"/>\n";
            out += "<text x=\"" + detail::num(left - 8) + "\" y=\"" + detail::num(py + 4) +
                   "\" text-anchor=\"end\" font-size=\"12\">" + detail::tick_label(y) + "</text>\n";
        }
    } else {
        const double y_step = detail::nice_step(y_max - y_min, 6);
        for (double y = std::ceil(y_min / y_step) * y_step; y <= y_max + 1e-9; y += y_step) {
            const double py = ty(y);
            out += "<line x1=\"" + detail::num(left) + "\" y1=\"" + detail::num(py) + "\" x2=\"" +
                   detail::num(left + plot_w) + "\" y2=\"" + detail::num(py) +
                   "\" stroke=\"#ddd\"/>\n";
            out += "<text x=\"" + detail::num(left - 8) + "\" y=\"" + detail::num(py + 4) +
                   "\" text-anchor=\"end\" font-size=\"12\">" + detail::tick_label(y) + "</text>\n";
        }
    }

    // axis labels
    if (!opt.x_label.empty())
        out += "<text x=\"" + detail::num(left + plot_w / 2) + "\" y=\"" +
               detail::num(height - 12) + "\" text-anchor=\"middle\" font-size=\"13\">" +
               detail::escape(opt.x_label) + "</text>\n";
    if (!opt.y_label.empty())
        out += "<text x=\"18\" y=\"" + detail::num(top + plot_h / 2) +
               "\" text-anchor=\"middle\" font-size=\"13\" transform=\"rotate(-90 18 " +
               detail::num(top + plot_h / 2) + ")\">" + detail::escape(opt.y_label) + "</text>\n";

    for (const RefLine& r : opt.ref_lines) {
        if (opt.log_y && r.y <= 0) continue;
        const double py = ty(r.y);
        out += "<line x1=\"" + detail::num(left) + "\" y1=\"" + detail::num(py) + "\" x2=\"" +
               detail::num(left + plot_w) + "\" y2=\"" + detail::num(py) +
               "\" stroke=\"#888\" stroke-dasharray=\"6 4\"/>\n";
        if (!r.label.empty())
            out += "<text x=\"" + detail::num(left + plot_w - 4) + "\" y=\"" + detail::num(py - 4) +
                   "\" text-anchor=\"end\" font-size=\"11\" fill=\"#666\">" +
                   detail::escape(r.label) + "</text>\n";
    }

    for (std::size_t i = 0; i < series.size(); ++i) {
        const char* color = detail::kPalette[i % 8];
        std::string pts;
        double prev_y = 0;
        bool first = true;
        for (auto [x, y] : series[i].points) {
            if (opt.log_y && y <= 0) continue;
            if (opt.steps && !first)
                pts += detail::num(tx(x)) + "," + detail::num(ty(prev_y)) + " ";
            pts += detail::num(tx(x)) + "," + detail::num(ty(y)) + " ";
            prev_y = y;
            first = false;
        }
        out += "<polyline fill=\"none\" stroke=\"" + std::string(color) +
               "\" stroke-width=\"1.8\" points=\"" + pts + "\"/>\n";
        if (!opt.steps)
            for (auto [x, y] : series[i].points) {
                if (opt.log_y && y <= 0) continue;
                out += "<circle cx=\"" + detail::num(tx(x)) + "\" cy=\"" + detail::num(ty(y)) +
                       "\" r=\"2.6\" fill=\"" + color + "\"/>\n";
            }
    }

    // legend
    for (std::size_t i = 0; i < series.size(); ++i) {
        const double ly = top + 14 + 17 * double(i);
        const double lx = left + plot_w - 150;
        out += "<line x1=\"" + detail::num(lx) + "\" y1=\"" + detail::num(ly) + "\" x2=\"" +
               detail::num(lx + 22) + "\" y2=\"" + detail::num(ly) + "\" stroke=\"" +
               detail::kPalette[i % 8] + "\" stroke-width=\"2\"/>\n";
        out += "<text x=\"" + detail::num(lx + 28) + "\" y=\"" + detail::num(ly + 4) +
               "\" font-size=\"12\">" + detail::escape(series[i].label) + "</text>\n";
    }

    out += "</svg>\n";
    return out;
}

}  // namespace cheeger::svg
