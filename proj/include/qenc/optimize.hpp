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
 * Classical optimizers used to train the classifier weights.
 *
 * minimize_cobyla is a derivative-free trust-region method: it keeps a
 * simplex of d + 1 evaluated points, fits the linear interpolant through
 * them, steps to the minimizer of that model on the sphere of radius rho,
 * and halves rho whenever the model stops predicting progress on a
 * well-shaped simplex. Every objective evaluation counts as one iteration.
 *
 * minimize_lbfgsb is limited-memory BFGS with box constraints handled by
 * gradient projection and a backtracking Armijo line search along the
 * projected path. One accepted step counts as one iteration.
 */
#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qenc {

using Objective = std::function<double(std::span<const double>)>;
using GradientFn = std::function<std::vector<double>(std::span<const double>)>;

struct HistoryEntry {
    std::size_t iteration; ///< 1-based
    double loss;
    std::vector<double> params;
};

enum class StopReason {
    MaxIterations,
    TrustRegionConverged,
    GradientConverged,
    LineSearchFailed,
    NonFiniteValue,
};

[[nodiscard]] std::string_view stop_reason_name(StopReason r);

struct OptimizerResult {
    std::vector<double> best_params;
    double best_loss = 0.0;
    std::size_t n_evaluations = 0;
    std::size_t n_iterations = 0;
    std::vector<HistoryEntry> history;
    StopReason stop_reason = StopReason::MaxIterations;
    std::string message;

    [[nodiscard]] bool failed() const { return stop_reason == StopReason::NonFiniteValue; }
};

struct CobylaOptions {
    std::size_t max_iter = 100;
    double rho_begin = 1.0;
    double rho_end = 1e-4;
};

[[nodiscard]] OptimizerResult minimize_cobyla(const Objective &f, std::vector<double> x0,
                                              const CobylaOptions &options = {});

struct Bound {
    double lo;
    double hi;
};

struct LbfgsbOptions {
    std::size_t max_iter = 100;
    std::size_t memory = 10;
    std::optional<std::vector<Bound>> bounds;
    double gradient_tolerance = 1e-8;
    double sufficient_decrease = 1e-4;
    double backtrack_factor = 0.5;
    std::size_t max_backtracks = 20;
};

[[nodiscard]] OptimizerResult minimize_lbfgsb(const Objective &f, const GradientFn &grad,
                                              std::vector<double> x0,
                                              const LbfgsbOptions &options = {});

/// Central differences (f(x + eps e_k) - f(x - eps e_k)) / (2 eps).
[[nodiscard]] std::vector<double> finite_difference_gradient(const Objective &f,
                                                             std::span<const double> x,
                                                             double eps = 1e-6);

/// Best-so-far loss after each history entry.
[[nodiscard]] std::vector<double> best_so_far(const std::vector<HistoryEntry> &history);

/// CSV with header `iteration,loss,theta_0,...,theta_{d-1}`, 10 significant digits.
void write_history_csv(std::ostream &out, const std::vector<HistoryEntry> &history);

} // namespace qenc
