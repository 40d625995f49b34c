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

#include "qenc/pipeline.hpp"
#include "qenc/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qenc {

void PipelineConfig::validate() const {
    QENC_REQUIRE(max_iter >= 1, "max-iter must be at least 1");
    QENC_REQUIRE(test_fraction > 0 && test_fraction < 1, "test fraction must be in (0, 1)");
    QENC_REQUIRE(reps >= 1, "reps must be at least 1");
    QENC_REQUIRE(std::isfinite(phase_scale), "phase scale must be finite");
    QENC_REQUIRE(cobyla.rho_begin > 0 && cobyla.rho_end > 0 && cobyla.rho_end <= cobyla.rho_begin,
                 "need 0 < rho-end <= rho-begin");
}

PipelineResult run_pipeline(const Dataset &data, const PipelineConfig &config) {
    config.validate();
    data.validate();
    auto split = train_test_split(data, config.test_fraction, config.split_seed);
    const auto scaler = fit_scaler(split.train, ScalerKind::MinMax, 0.0, std::numbers::pi);
    split.train = apply_scaler(scaler, split.train);
    split.test = apply_scaler(scaler, split.test);

    VqcConfig vc;
    vc.feature_map = config.feature_map;
    vc.feature_reps = config.reps;
    vc.feature_entanglement = config.entanglement;
    vc.phase_scale = config.phase_scale;
    vc.ansatz_reps = config.reps;
    vc.ansatz_entanglement = config.entanglement;
    auto model = VqcModel::build(data.n_features(), vc);
    model.scaler = scaler;

    FitOptions fo;
    fo.optimizer = config.optimizer;
    fo.max_iter = config.max_iter;
    fo.seed = config.seed;
    fo.cobyla = config.cobyla;
    auto record = fit(model, split.train, fo, &split.test);
    auto trained = model.with_theta(record.final_theta);
    return PipelineResult{std::move(trained), std::move(split), std::move(record)};
}

std::vector<HistoryEntry> record_history(const TrainingRecord &record) {
    std::vector<HistoryEntry> out;
    out.reserve(record.loss_history.size());
    for (std::size_t i = 0; i < record.loss_history.size(); ++i) {
        out.push_back({i + 1, record.loss_history[i], record.param_history[i]});
    }
    return out;
}

std::size_t iterations_to_within(const std::vector<double> &loss_history, double fraction) {
    if (loss_history.empty()) {
        return 0;
    }
    const double target = *std::min_element(loss_history.begin(), loss_history.end());
    const double tol = fraction * std::abs(target);
    for (std::size_t i = 0; i < loss_history.size(); ++i) {
        if (loss_history[i] <= target + tol) {
            return i + 1;
        }
    }
    return loss_history.size();
}

} // namespace qenc
