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

#include "qenc/state_vector.hpp"
#include "qenc/error.hpp"

#include <bit>
#include <cmath>

namespace qenc {

StateVector::StateVector(std::size_t n_qubits)
    : n_qubits_(n_qubits), amps_(std::size_t{1} << n_qubits, Complex{}) {
    QENC_REQUIRE(n_qubits >= 1 && n_qubits <= 24, "qubit count must be in [1, 24]");
    amps_[0] = 1.0;
}

StateVector::StateVector(std::vector<Complex> amplitudes)
    : n_qubits_(0), amps_(std::move(amplitudes)) {
    QENC_REQUIRE(amps_.size() >= 2 && std::has_single_bit(amps_.size()),
                 "state length must be a power of two >= 2, got " +
                     std::to_string(amps_.size()));
    n_qubits_ = static_cast<std::size_t>(std::countr_zero(amps_.size()));
    for (const auto &a : amps_) {
        QENC_REQUIRE(std::isfinite(a.real()) && std::isfinite(a.imag()),
                     "state amplitudes must be finite");
    }
    QENC_REQUIRE(std::abs(norm() - 1.0) <= kNormTolerance,
                 "state is not normalized (norm " + std::to_string(norm()) + ")");
}

StateVector::StateVector(std::vector<Complex> amplitudes, Unchecked)
    : n_qubits_(static_cast<std::size_t>(std::countr_zero(amplitudes.size()))),
      amps_(std::move(amplitudes)) {}

double StateVector::norm() const {
    double s = 0.0;
    for (const auto &a : amps_) {
        s += std::norm(a);
    }
    return std::sqrt(s);
}

std::string StateVector::ket(std::size_t index) const { return ket_label(index, n_qubits_); }

std::string ket_label(std::size_t index, std::size_t n_qubits) {
    std::string s = "|";
    for (std::size_t q = n_qubits; q-- > 0;) {
        s += ((index >> q) & 1U) != 0 ? '1' : '0';
    }
    return s + ">";
}

double fidelity(const StateVector &a, const StateVector &b) {
    QENC_REQUIRE(a.dim() == b.dim(), "fidelity of states with different dimensions");
    Complex overlap{};
    for (std::size_t i = 0; i < a.dim(); ++i) {
        overlap += std::conj(a[i]) * b[i];
    }
    return std::norm(overlap);
}

} // namespace qenc
