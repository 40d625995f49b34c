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

#include "qenc/stateprep.hpp"
#include "qenc/error.hpp"

#include <bit>
#include <cmath>

namespace qenc {

namespace {

std::size_t gray(std::size_t i) { return i ^ (i >> 1U); }

} // namespace

TargetState::TargetState(std::vector<double> amplitudes) : amps_(std::move(amplitudes)) {
    QENC_REQUIRE(amps_.size() >= 2 && std::has_single_bit(amps_.size()),
                 "target length must be a power of two >= 2, got " +
                     std::to_string(amps_.size()));
    double sq = 0.0;
    for (auto &a : amps_) {
        QENC_REQUIRE(std::isfinite(a), "target amplitudes must be finite");
        if (std::abs(a) < kZeroCutoff) {
            a = 0.0;
        }
        sq += a * a;
    }
    QENC_REQUIRE(sq > 0.0, "target is the zero vector");
    QENC_REQUIRE(std::abs(std::sqrt(sq) - 1.0) <= kNormTolerance,
                 "target is not normalized (norm " + std::to_string(std::sqrt(sq)) + ")");
    n_qubits_ = static_cast<std::size_t>(std::countr_zero(amps_.size()));
}

std::vector<double> gray_code_angles(std::span<const double> alpha) {
    const std::size_t len = alpha.size();
    std::vector<double> theta(len, 0.0);
    for (std::size_t i = 0; i < len; ++i) {
        double acc = 0.0;
        for (std::size_t j = 0; j < len; ++j) {
            const bool odd = (std::popcount(j & gray(i)) & 1) != 0;
            acc += odd ? -alpha[j] : alpha[j];
        }
        theta[i] = acc / static_cast<double>(len);
    }
    return theta;
}

Circuit prepare_state(const TargetState &target) {
    const std::size_t k = target.n_qubits();
    const auto amps = target.amplitudes();
    Circuit circuit(k);

    // weight[h] for the current level: norm of the amplitudes whose qubits
    // q..k-1 spell h.
    std::vector<double> weight(amps.begin(), amps.end());
    for (auto &w : weight) {
        w = std::abs(w);
    }
    std::vector<std::vector<double>> level_weights(k + 1);
    level_weights[0] = weight;
    for (std::size_t q = 1; q <= k; ++q) {
        const auto &below = level_weights[q - 1];
        std::vector<double> above(below.size() / 2);
        for (std::size_t h = 0; h < above.size(); ++h) {
            above[h] = std::hypot(below[2 * h], below[2 * h + 1]);
        }
        level_weights[q] = std::move(above);
    }

    for (std::size_t q = k; q-- > 0;) {
        const std::size_t n_controls = k - 1 - q;
        const std::size_t len = std::size_t{1} << n_controls;
        std::vector<double> alpha(len, 0.0);
        for (std::size_t j = 0; j < len; ++j) {
            double zero_branch = 0.0;
            double one_branch = 0.0;
            if (q == 0) {
                zero_branch = amps[2 * j];
                one_branch = amps[2 * j + 1];
            } else {
                zero_branch = level_weights[q][2 * j];
                one_branch = level_weights[q][2 * j + 1];
            }
            if (std::abs(zero_branch) >= TargetState::kZeroCutoff ||
                std::abs(one_branch) >= TargetState::kZeroCutoff) {
                alpha[j] = 2.0 * std::atan2(one_branch, zero_branch);
            }
        }

        if (n_controls == 0) {
            if (alpha[0] != 0.0) {
                circuit.ry(q, alpha[0]);
            }
            continue;
        }
        const auto theta = gray_code_angles(alpha);
        for (std::size_t i = 0; i < len; ++i) {
            circuit.ry(q, theta[i]);
            const std::size_t flip = gray(i) ^ gray((i + 1) % len);
            const auto bit = static_cast<std::size_t>(std::countr_zero(flip));
            circuit.cx(q + 1 + bit, q);
        }
    }
    return circuit;
}

} // namespace qenc
