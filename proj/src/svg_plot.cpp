// Copyright 2026 The qenc Authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qenc/svg_plot.hpp"
#include "qenc/error.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace qenc {

namespace {

constexpr std::array<const char *, 10> kPalette = {
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf",
};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string tick_label(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4g", std::abs(v) < 1e-12 ? 0.0 : v);
    return buf;
}

struct Range {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();

    void add(double v) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    void pad() {
        if (hi - lo < 1e-12) {
            const double d = std::max(std::abs(lo) * 0.05, 0.5);
            lo -= d;
            hi += d;
        }
    }
};

/// Roughly five ticks at 1/2/5 multiples.
std::vector<double> ticks(const Range &r) {
    const double raw = (r.hi - r.lo) / 5.0;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    double step = mag;
    for (double m : {1.0, 2.0, 5.0, 10.0}) {
        if (m * mag >= raw) {
            step = m * mag;
            break;
        }
    }
    std::vector<double> out;
    for (double t = std::ceil(r.lo / step) * step; t <= r.hi + step * 1e-9; t += step) {
        out.push_back(t);
    }
    return out;
}

} // namespace

std::string xml_escape(const std::string &s) {
    std::string out;
    for (char c : s) {
        switch (c) {
        case '&':
            out += "&amp;";
            break;
        case '<':
            out += "&lt;";
            break;
        case '>':
            out += "&gt;";
            break;
        case '"':
            out += "&quot;";
            break;
        default:
            out += c;
        }
    }
    return out;
}

std::string render_line_plot(const PlotSpec &spec, const std::vector<PlotSeries> &series) {
    Range xr;
    Range yr;
    for (const auto &s : series) {
        QENC_REQUIRE(s.x.size() == s.y.size(), "series '" + s.name + "' has mismatched x/y");
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            if (std::isfinite(s.x[i]) && std::isfinite(s.y[i])) {
                xr.add(s.x[i]);
                yr.add(s.y[i]);
            }
        }
    }
    QENC_REQUIRE(xr.lo <= xr.hi, "nothing to plot: no finite points");
    xr.pad();
    yr.pad();

    const double left = 70;
    const double right = spec.legend ? 150 : 20;
    const double top = 40;
    const double bottom = 50;
    const double pw = spec.width - left - right;
    const double ph = spec.height - top - bottom;
    auto px = [&](double x) { return left + (x - xr.lo) / (xr.hi - xr.lo) * pw; };
    auto py = [&](double y) { return top + ph - (y - yr.lo) / (yr.hi - yr.lo) * ph; };

    std::ostringstream o;
    o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << spec.width << "\" height=\""
      << spec.height << "\" viewBox=\"0 0 " << spec.width << ' ' << spec.height
      << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    o << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    o << "<text x=\"" << fmt(left + pw / 2) << "\" y=\"22\" text-anchor=\"middle\" font-size=\"15\">"
      << xml_escape(spec.title) << "</text>\n";

    for (double t : ticks(xr)) {
        o << "<line x1=\"" << fmt(px(t)) << "\" y1=\"" << fmt(top) << "\" x2=\"" << fmt(px(t))
          << "\" y2=\"" << fmt(top + ph) << "\" stroke=\"#e0e0e0\"/>\n";
        o << "<text x=\"" << fmt(px(t)) << "\" y=\"" << fmt(top + ph + 16)
          << "\" text-anchor=\"middle\">" << tick_label(t) << "</text>\n";
    }
    for (double t : ticks(yr)) {
        o << "<line x1=\"" << fmt(left) << "\" y1=\"" << fmt(py(t)) << "\" x2=\"" << fmt(left + pw)
          << "\" y2=\"" << fmt(py(t)) << "\" stroke=\"#e0e0e0\"/>\n";
        o << "<text x=\"" << fmt(left - 6) << "\" y=\"" << fmt(py(t) + 4)
          << "\" text-anchor=\"end\">" << tick_label(t) << "</text>\n";
    }
    o << "<rect x=\"" << fmt(left) << "\" y=\"" << fmt(top) << "\" width=\"" << fmt(pw)
      << "\" height=\"" << fmt(ph) << "\" fill=\"none\" stroke=\"black\"/>\n";
    o << "<text x=\"" << fmt(left + pw / 2) << "\" y=\"" << fmt(spec.height - 12.0)
      << "\" text-anchor=\"middle\">" << xml_escape(spec.x_label) << "</text>\n";
    o << "<text transform=\"translate(18," << fmt(top + ph / 2)
      << ") rotate(-90)\" text-anchor=\"middle\">" << xml_escape(spec.y_label) << "</text>\n";

    for (std::size_t k = 0; k < series.size(); ++k) {
        const auto &s = series[k];
        const char *color = kPalette[k % kPalette.size()];
        std::ostringstream pts;
        std::size_t n = 0;
        double first_x = 0.0;
        double first_y = 0.0;
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            if (std::isfinite(s.x[i]) && std::isfinite(s.y[i])) {
                if (n == 0) {
                    first_x = px(s.x[i]);
                    first_y = py(s.y[i]);
                }
                pts << (n++ == 0 ? "" : " ") << fmt(px(s.x[i])) << ',' << fmt(py(s.y[i]));
            }
        }
        if (n == 1) {
            // A single point would be an invisible zero-length polyline.
            o << "<circle cx=\"" << fmt(first_x) << "\" cy=\"" << fmt(first_y)
              << "\" r=\"3\" fill=\"" << color << "\"/>\n";
        } else if (n > 1) {
            o << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\""
              << pts.str() << "\"/>\n";
        }
        if (spec.legend) {
            const double ly = top + 8 + 16.0 * static_cast<double>(k);
            o << "<line x1=\"" << fmt(left + pw + 12) << "\" y1=\"" << fmt(ly) << "\" x2=\""
              << fmt(left + pw + 32) << "\" y2=\"" << fmt(ly) << "\" stroke=\"" << color
              << "\" stroke-width=\"2\"/>\n";
            o << "<text x=\"" << fmt(left + pw + 38) << "\" y=\"" << fmt(ly + 4) << "\">"
              << xml_escape(s.name) << "</text>\n";
        }
    }
    o << "</svg>\n";
    return o.str();
}

} // namespace qenc
