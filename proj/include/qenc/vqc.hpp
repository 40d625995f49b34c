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
 * Variational quantum classifier: a data-bound feature map followed by a
 * trainable real-amplitudes ansatz, read out by global bit parity (odd
 * parity is class 1) and trained on binary cross-entropy.
 */
#pragma once

#include "qenc/circuit.hpp"
#include "qenc/data.hpp"
#include "qenc/encoders.hpp"
#include "qenc/optimize.hpp"
#include "qenc/state_vector.hpp"
#include "qenc/varforms.hpp"

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace qenc {

struct VqcConfig {
    FeatureMapKind feature_map = FeatureMapKind::Hybrid;
    std::size_t feature_reps = 2;                         ///< zz only
    Entanglement feature_entanglement = Entanglement::Linear; ///< zz only
    double phase_scale = kHybridPhaseScale;               ///< hybrid only
    std::size_t ansatz_reps = 2;
    Entanglement ansatz_entanglement = Entanglement::Linear;
};

class VqcModel {
  public:
    /// Builds feature map and ansatz for `n_features` inputs with theta = 0.
    static VqcModel build(std::size_t n_features, const VqcConfig &config = {});

    VqcModel(FeatureMapKind kind, std::size_t n_features, Circuit feature_map, Circuit ansatz,
             std::vector<double> theta, double phase_scale = kHybridPhaseScale);

    [[nodiscard]] FeatureMapKind kind() const { return kind_; }
    [[nodiscard]] std::size_t n_features() const { return n_features_; }
    [[nodiscard]] std::size_t n_qubits() const { return ansatz_.n_qubits(); }
    [[nodiscard]] const Circuit &feature_map() const { return feature_map_; }
    [[nodiscard]] const Circuit &ansatz() const { return ansatz_; }
    [[nodiscard]] std::span<const double> theta() const { return theta_; }
    [[nodiscard]] std::size_t n_weights() const { return theta_.size(); }

    [[nodiscard]] VqcModel with_theta(std::vector<double> theta) const;

    /// Feature map followed by ansatz as two composite blocks.
    [[nodiscard]] Circuit full_circuit() const;

    /// State after the feature map. A hybrid model whose feature count is a
    /// power of two takes the amplitude path here.
    [[nodiscard]] StateVector encode(const FeatureVector &x) const;

    /// Binds theta into the ansatz.
    [[nodiscard]] Bindings weight_bindings(std::span<const double> theta) const;

    std::optional<ScalerParams> scaler;

  private:
    FeatureMapKind kind_;
    std::size_t n_features_;
    Circuit feature_map_;
    Circuit ansatz_;
    std::vector<double> theta_;
    double phase_scale_;
};

struct ClassProbabilities {
    double p0;
    double p1;
};

/// Total probability of the odd-parity basis states.
[[nodiscard]] double odd_parity_probability(const StateVector &state);

[[nodiscard]] ClassProbabilities forward(const VqcModel &model, const FeatureVector &x);

/// Probability floor applied before the logarithm in the loss.
inline constexpr double kProbabilityFloor = 1e-10;

[[nodiscard]] double loss(const VqcModel &model, const Dataset &batch);

/// d loss / d theta by the two-term parameter-shift rule.
[[nodiscard]] std::vector<double> parameter_shift_gradient(const VqcModel &model,
                                                           const Dataset &batch);

/// Loss and gradient for a fixed batch with the feature-map states cached,
/// so each evaluation only simulates the ansatz.
class LossEvaluator {
  public:
    LossEvaluator(const VqcModel &model, const Dataset &batch);

    [[nodiscard]] double loss(std::span<const double> theta) const;
    [[nodiscard]] std::vector<double> gradient(std::span<const double> theta) const;
    [[nodiscard]] std::vector<double> odd_probabilities(std::span<const double> theta) const;

  private:
    const VqcModel &model_;
    std::vector<StateVector> encoded_;
    std::vector<int> labels_;
    /// (op index, weight index) for every trainable rotation in the ansatz.
    std::vector<std::pair<std::size_t, std::size_t>> shifts_;
};

enum class OptimizerKind { Cobyla, Lbfgsb };

[[nodiscard]] std::string_view optimizer_name(OptimizerKind k);
[[nodiscard]] std::optional<OptimizerKind> optimizer_from_name(std::string_view name);

struct FitOptions {
    OptimizerKind optimizer = OptimizerKind::Cobyla;
    std::size_t max_iter = 100;
    std::uint64_t seed = 42;
    CobylaOptions cobyla{};
    LbfgsbOptions lbfgsb{};
};

using Confusion = std::array<std::array<std::size_t, 2>, 2>;

struct TrainingRecord {
    std::string optimizer;
    std::string feature_map;
    std::vector<double> initial_theta;
    std::vector<double> loss_history;
    std::vector<std::vector<double>> param_history;
    std::vector<double> final_theta;
    double final_loss = 0.0;
    double train_accuracy = 0.0;
    double test_accuracy = 0.0;
    Confusion confusion{}; ///< on the test set when given, else the training set
    std::size_t n_evaluations = 0;
    std::string stop_reason;
    bool failed = false;
    std::string message;
};

/// Trains theta from a seeded uniform [0, 2 pi) start. `test`, when given,
/// fills test_accuracy and the confusion matrix.
[[nodiscard]] TrainingRecord fit(const VqcModel &model, const Dataset &train,
                                 const FitOptions &options, const Dataset *test = nullptr);

[[nodiscard]] std::vector<double> initial_theta(std::size_t n, std::uint64_t seed);

/// argmax(p0, p1), ties to 0.
[[nodiscard]] int predict(const VqcModel &model, const FeatureVector &x);
[[nodiscard]] double score(const VqcModel &model, const Dataset &data);
/// Rows are true labels, columns predictions.
[[nodiscard]] Confusion confusion_matrix(const VqcModel &model, const Dataset &data);

} // namespace qenc
