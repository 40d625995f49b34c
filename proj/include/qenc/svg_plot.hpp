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

/**
 * @file
 * Static SVG line charts. Output depends only on the input data so plot
 * files are byte-stable across runs.
 */
#pragma once

#include <string>
#include <vector>

namespace qenc {

struct PlotSeries {
    std::string name;
    std::vector<double> x;
    std::vector<double> y;
};

struct PlotSpec {
    std::string title;
    std::string x_label;
    std::string y_label;
    int width = 720;
    int height = 440;
    bool legend = true;
};

/// Throws if a series has mismatched lengths or no series has a finite point.
[[nodiscard]] std::string render_line_plot(const PlotSpec &spec,
                                           const std::vector<PlotSeries> &series);

/// Escapes &, <, >, " for use in SVG text and attributes.
[[nodiscard]] std::string xml_escape(const std::string &s);

} // namespace qenc
