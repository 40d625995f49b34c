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
 * Exact preparation of real-amplitude states from |0...0>.
 *
 * The circuit is a binary tree of uniformly controlled RY rotations: the
 * most-significant qubit splits the total weight between the two halves of
 * the register, each lower qubit splits its parent's conditional weight,
 * and the least-significant qubit also fixes the sign of each amplitude
 * pair. Every uniformly controlled rotation is lowered to alternating RY
 * and CX gates along a Gray-code cycle of its control values.
 */
#pragma once

#include "qenc/circuit.hpp"

#include <span>
#include <vector>

namespace qenc {

/// Real unit vector of length 2^k, k >= 1.
class TargetState {
  public:
    static constexpr double kNormTolerance = 1e-10;
    static constexpr double kZeroCutoff = 1e-12;

    explicit TargetState(std::vector<double> amplitudes);

    [[nodiscard]] std::span<const double> amplitudes() const { return amps_; }
    [[nodiscard]] std::size_t n_qubits() const { return n_qubits_; }

  private:
    std::vector<double> amps_;
    std::size_t n_qubits_;
};

[[nodiscard]] Circuit prepare_state(const TargetState &target);

/// Angles of the RY gates realizing a uniformly controlled rotation with
/// per-control-value angles `alpha` (length 2^c). Output index i is the
/// rotation applied before the i-th CX of the Gray-code cycle.
[[nodiscard]] std::vector<double> gray_code_angles(std::span<const double> alpha);

} // namespace qenc
