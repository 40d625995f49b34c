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
 * Classical-to-quantum encodings of a single feature vector.
 *
 * | method    | qubits          | circuit                                   |
 * |-----------|-----------------|-------------------------------------------|
 * | basis     | n               | X on qubit i iff x_i > threshold          |
 * | amplitude | ceil(log2 n)    | state preparation of x / |x| (zero padded) |
 * | angle     | n               | RY(x_i) on qubit i                        |
 * | phase     | n               | H then RZ(x_i) on qubit i                 |
 * | hybrid    | see below       | amplitude path when n is a power of two,  |
 * |           |                 | else RY(x_i) then RZ(s * x_i) on qubit i  |
 *
 * The hybrid rotation path uses a phase scale s (default 2), so the relative
 * phase written on qubit i is s * x_i.
 */
#pragma once

#include "qenc/circuit.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qenc {

class FeatureVector {
  public:
    explicit FeatureVector(std::vector<double> values);

    [[nodiscard]] std::span<const double> values() const { return values_; }
    [[nodiscard]] std::size_t size() const { return values_.size(); }
    [[nodiscard]] double operator[](std::size_t i) const { return values_[i]; }

  private:
    std::vector<double> values_;
};

enum class EncodingMethod { Basis, Amplitude, Angle, Phase, Hybrid };

[[nodiscard]] std::string_view encoding_name(EncodingMethod m);
[[nodiscard]] std::optional<EncodingMethod> encoding_from_name(std::string_view name);

/// Default RZ scale of the hybrid rotation path.
inline constexpr double kHybridPhaseScale = 2.0;

[[nodiscard]] std::size_t required_qubits(EncodingMethod method, std::size_t n_features);

/// True for 1, 2, 4, 8, ...: the feature counts that take the hybrid
/// amplitude path.
[[nodiscard]] bool hybrid_uses_amplitude_path(std::size_t n_features);

[[nodiscard]] Circuit basis_encode(const FeatureVector &x, double threshold = 0.0);
[[nodiscard]] Circuit angle_encode(const FeatureVector &x);
[[nodiscard]] Circuit phase_encode(const FeatureVector &x);
[[nodiscard]] Circuit amplitude_encode(const FeatureVector &x);
[[nodiscard]] Circuit hybrid_encode(const FeatureVector &x,
                                    double phase_scale = kHybridPhaseScale);

/// Dispatch on `method` with default options.
[[nodiscard]] Circuit encode(EncodingMethod method, const FeatureVector &x);

} // namespace qenc
