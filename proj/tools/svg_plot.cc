// Copyright 2026 The bellwb Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "svg_plot.h"

#include <algorithm>
#include <cstdio>
#include <map>
#include <sstream>

namespace bellwb::cli {

namespace {

constexpr double kWidth = 720;
constexpr double kHeight = 480;
constexpr double kLeft = 70;
constexpr double kRight = 120;
constexpr double kTop = 30;
constexpr double kBottom = 60;

const char *const kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#17becf"};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

}  // namespace

std::string render_fig1_svg(const std::vector<Fig1Row> &rows) {
    std::map<int, std::vector<const Fig1Row *>> curves;
    int m_min = 2, m_max = 2;
    double v_min = 1e300, v_max = -1e300;
    for (const auto &r : rows) {
        curves[r.n_parties].push_back(&r);
        m_max = std::max(m_max, r.n_settings);
        v_min = std::min({v_min, r.violation, r.limit});
        v_max = std::max({v_max, r.violation, r.limit});
    }
    if (rows.empty()) {
        v_min = 0;
        v_max = 1;
    }
    v_min = std::min(v_min, 1.0);
    const double pad = 0.05 * (v_max - v_min + 1e-9);
    v_min -= pad;
    v_max += pad;

    const double plot_w = kWidth - kLeft - kRight;
    const double plot_h = kHeight - kTop - kBottom;
    auto px = [&](double m) { return kLeft + plot_w * (m - m_min) / std::max(1, m_max - m_min); };
    auto py = [&](double v) { return kTop + plot_h * (1.0 - (v - v_min) / (v_max - v_min)); };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
        << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg << "<line x1=\"" << kLeft << "\" y1=\"" << kTop + plot_h << "\" x2=\"" << kLeft + plot_w << "\" y2=\""
        << kTop + plot_h << "\" stroke=\"black\"/>\n";
    svg << "<line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft << "\" y2=\"" << kTop + plot_h
        << "\" stroke=\"black\"/>\n";
    svg << "<line x1=\"" << kLeft << "\" y1=\"" << fmt(py(1.0)) << "\" x2=\"" << kLeft + plot_w << "\" y2=\""
        << fmt(py(1.0)) << "\" stroke=\"#999\" stroke-width=\"0.5\"/>\n";
    svg << "<text x=\"" << kLeft + plot_w / 2 << "\" y=\"" << kHeight - 15
        << "\" text-anchor=\"middle\">settings per party M</text>\n";
    svg << "<text x=\"18\" y=\"" << kTop + plot_h / 2 << "\" text-anchor=\"middle\" transform=\"rotate(-90 18 "
        << kTop + plot_h / 2 << ")\">violation factor V(N,M)</text>\n";

    const int tick_step = std::max(1, (m_max - m_min) / 10);
    for (int m = m_min; m <= m_max; m += tick_step) {
        svg << "<text x=\"" << fmt(px(m)) << "\" y=\"" << kTop + plot_h + 18 << "\" text-anchor=\"middle\">" << m
            << "</text>\n";
    }
    for (int k = 0; k <= 5; ++k) {
        const double v = v_min + (v_max - v_min) * k / 5.0;
        svg << "<text x=\"" << kLeft - 8 << "\" y=\"" << fmt(py(v) + 4) << "\" text-anchor=\"end\">" << fmt(v)
            << "</text>\n";
    }

    std::size_t color = 0;
    for (const auto &[n, points] : curves) {
        const char *stroke = kColors[color++ % std::size(kColors)];
        svg << "<polyline fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\"1.5\" points=\"";
        for (const auto *p : points) {
            svg << fmt(px(p->n_settings)) << "," << fmt(py(p->violation)) << " ";
        }
        svg << "\"/>\n";
        const double limit = points.front()->limit;
        svg << "<line x1=\"" << kLeft << "\" y1=\"" << fmt(py(limit)) << "\" x2=\"" << kLeft + plot_w << "\" y2=\""
            << fmt(py(limit)) << "\" stroke=\"" << stroke << "\" stroke-dasharray=\"6,4\" stroke-width=\"1\"/>\n";
        svg << "<text x=\"" << kLeft + plot_w + 8 << "\" y=\"" << fmt(py(limit) + 4) << "\" fill=\"" << stroke
            << "\">N = " << n << "</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace bellwb::cli
