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

#pragma once

#include "qenc/gates.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace qenc {

/// Dense pure state of `n_qubits` qubits: 2^n amplitudes with unit L2 norm.
class StateVector {
  public:
    static constexpr double kNormTolerance = 1e-10;

    /// |0...0> on `n_qubits` qubits.
    explicit StateVector(std::size_t n_qubits);

    /// Validates length (a power of two), finiteness and unit norm.
    explicit StateVector(std::vector<Complex> amplitudes);

    [[nodiscard]] std::size_t n_qubits() const { return n_qubits_; }
    [[nodiscard]] std::size_t dim() const { return amps_.size(); }
    [[nodiscard]] std::span<const Complex> amplitudes() const { return amps_; }
    [[nodiscard]] const Complex &operator[](std::size_t i) const { return amps_[i]; }

    [[nodiscard]] double norm() const;

    /// Ket label of a basis index, printed q_{n-1} ... q_0.
    [[nodiscard]] std::string ket(std::size_t index) const;

  private:
    struct Unchecked {};
    StateVector(std::vector<Complex> amplitudes, Unchecked);

    std::size_t n_qubits_;
    std::vector<Complex> amps_;

    friend class Simulator;
};

/// Ket label of `index` in an `n_qubits` register, most-significant qubit first.
std::string ket_label(std::size_t index, std::size_t n_qubits);

/// |<a|b>|^2.
double fidelity(const StateVector &a, const StateVector &b);

} // namespace qenc
