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
 * End-to-end training run on a labelled dataset: seeded split, min-max
 * scaling to [0, pi] fitted on the training part, model build, fit and
 * evaluation.
 */
#pragma once

#include "qenc/data.hpp"
#include "qenc/optimize.hpp"
#include "qenc/varforms.hpp"
#include "qenc/vqc.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace qenc {

struct PipelineConfig {
    FeatureMapKind feature_map = FeatureMapKind::Hybrid;
    OptimizerKind optimizer = OptimizerKind::Cobyla;
    std::size_t max_iter = 100;
    std::uint64_t seed = 42;       ///< theta initialization
    std::uint64_t split_seed = 42; ///< train/test permutation
    double test_fraction = 0.2;
    std::size_t reps = 2; ///< ansatz reps, and zz feature-map reps
    Entanglement entanglement = Entanglement::Linear;
    double phase_scale = kHybridPhaseScale;
    CobylaOptions cobyla{};

    void validate() const;
};

struct PipelineResult {
    VqcModel model; ///< trained theta, fitted scaler attached
    Split split;    ///< scaled partitions
    TrainingRecord record;
};

[[nodiscard]] PipelineResult run_pipeline(const Dataset &data, const PipelineConfig &config);

/// History rows rebuilt from a record, iterations numbered from 1.
[[nodiscard]] std::vector<HistoryEntry> record_history(const TrainingRecord &record);

/// Number of history entries until the loss first comes within `fraction`
/// (relative) of the lowest loss in the history. Empty history gives 0.
[[nodiscard]] std::size_t iterations_to_within(const std::vector<double> &loss_history,
                                               double fraction);

} // namespace qenc
