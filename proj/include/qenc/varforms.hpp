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
 * Parameterized circuit families used by the classifier.
 *
 * Feature symbols are named `x[i]`, trainable ones `theta[i]`.
 */
#pragma once

#include "qenc/circuit.hpp"
#include "qenc/encoders.hpp"

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

namespace qenc {

enum class Entanglement { Linear, Full };

[[nodiscard]] std::string_view entanglement_name(Entanglement e);
[[nodiscard]] std::optional<Entanglement> entanglement_from_name(std::string_view name);

/// Linear: (i, i+1) in order. Full: every (i, j), i < j, lexicographic.
[[nodiscard]] std::vector<std::pair<std::size_t, std::size_t>> entangled_pairs(std::size_t n_qubits,
                                                                               Entanglement e);

enum class FeatureMapKind { ZZ, Hybrid };

[[nodiscard]] std::string_view feature_map_name(FeatureMapKind k);
[[nodiscard]] std::optional<FeatureMapKind> feature_map_from_name(std::string_view name);

struct FeatureMapSpec {
    FeatureMapKind kind = FeatureMapKind::Hybrid;
    std::size_t n_qubits = 6;
    std::size_t reps = 2;                          ///< zz only
    Entanglement entanglement = Entanglement::Linear; ///< zz only
    double phase_scale = kHybridPhaseScale;        ///< hybrid only
};

inline constexpr std::string_view kFeatureSymbol = "x";
inline constexpr std::string_view kWeightSymbol = "theta";

/// Per repetition: H on all qubits, P(2 x_i), then CX(i, j) P(2 (pi - x_i)(pi - x_j)) CX(i, j)
/// on qubit j for every entangled pair. The x symbols are shared across repetitions.
[[nodiscard]] Circuit build_zz_feature_map(std::size_t n_qubits, std::size_t reps,
                                           Entanglement ent);

/// RY layer, then `reps` times (CX entanglement layer, RY layer); each RY
/// carries its own theta symbol, (reps + 1) * n in total.
[[nodiscard]] Circuit build_real_amplitudes(std::size_t n_qubits, std::size_t reps,
                                            Entanglement ent);

/// RY(x_i) then RZ(phase_scale * x_i) on each qubit.
[[nodiscard]] Circuit build_hybrid_feature_map(std::size_t n_qubits,
                                               double phase_scale = kHybridPhaseScale);

[[nodiscard]] Circuit build_feature_map(const FeatureMapSpec &spec);

/// Block label used for a feature map of the given kind when assembled.
[[nodiscard]] std::string_view feature_map_block_name(FeatureMapKind k);
inline constexpr std::string_view kAnsatzBlockName = "real_amplitudes";

/// feature_map followed by ansatz, each kept as one composite block.
[[nodiscard]] Circuit assemble_classifier_circuit(const Circuit &feature_map, FeatureMapKind kind,
                                                  const Circuit &ansatz);

} // namespace qenc
