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

#include "qenc/error.hpp"
#include "qenc/numfmt.hpp"
#include "qenc/optimize.hpp"

#include <algorithm>
#include <ostream>

namespace qenc {

std::string_view stop_reason_name(StopReason r) {
    switch (r) {
    case StopReason::MaxIterations:
        return "max_iterations";
    case StopReason::TrustRegionConverged:
        return "trust_region_converged";
    case StopReason::GradientConverged:
        return "gradient_converged";
    case StopReason::LineSearchFailed:
        return "line_search_failed";
    case StopReason::NonFiniteValue:
        return "non_finite_value";
    }
    return "?";
}

std::vector<double> finite_difference_gradient(const Objective &f, std::span<const double> x,
                                               double eps) {
    QENC_REQUIRE(eps > 0, "finite-difference step must be positive");
    std::vector<double> probe(x.begin(), x.end());
    std::vector<double> g(x.size());
    for (std::size_t k = 0; k < x.size(); ++k) {
        probe[k] = x[k] + eps;
        const double up = f(probe);
        probe[k] = x[k] - eps;
        const double down = f(probe);
        probe[k] = x[k];
        g[k] = (up - down) / (2 * eps);
    }
    return g;
}

std::vector<double> best_so_far(const std::vector<HistoryEntry> &history) {
    std::vector<double> out;
    out.reserve(history.size());
    for (const auto &h : history) {
        out.push_back(out.empty() ? h.loss : std::min(out.back(), h.loss));
    }
    return out;
}

void write_history_csv(std::ostream &out, const std::vector<HistoryEntry> &history) {
    const std::size_t d = history.empty() ? 0 : history.front().params.size();
    out << "iteration,loss";
    for (std::size_t k = 0; k < d; ++k) {
        out << ",theta_" << k;
    }
    out << '\n';
    for (const auto &h : history) {
        out << h.iteration << ',' << sig10(h.loss);
        for (double v : h.params) {
            out << ',' << sig10(v);
        }
        out << '\n';
    }
}

} // namespace qenc
