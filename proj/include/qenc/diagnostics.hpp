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
 * Entanglement and visualization diagnostics on pure states.
 */
#pragma once

#include "qenc/state_vector.hpp"

#include <array>
#include <set>
#include <span>
#include <vector>

namespace qenc {

/// Hermitian, unit-trace, positive semidefinite matrix of dimension 2^k,
/// stored row-major.
class DensityMatrix {
  public:
    static constexpr double kTolerance = 1e-10;

    /// Validates the density-matrix invariants.
    DensityMatrix(std::size_t dim, std::vector<Complex> entries);

    [[nodiscard]] std::size_t dim() const { return dim_; }
    [[nodiscard]] const Complex &operator()(std::size_t r, std::size_t c) const {
        return entries_[r * dim_ + c];
    }
    [[nodiscard]] std::span<const Complex> entries() const { return entries_; }

    /// Eigenvalues in descending order.
    [[nodiscard]] std::vector<double> eigenvalues() const;

  private:
    std::size_t dim_;
    std::vector<Complex> entries_;
};

struct SchmidtDecomposition {
    std::vector<double> coefficients; ///< descending, non-negative
    std::vector<std::size_t> part_a;
    std::vector<std::size_t> part_b;
};

/// Reduced state on `keep`; kept qubit keep[j] (ascending) becomes bit j.
[[nodiscard]] DensityMatrix partial_trace(const StateVector &state,
                                          const std::set<std::size_t> &keep);

[[nodiscard]] double purity(const DensityMatrix &rho);

/// Von Neumann entropy in bits; eigenvalues below 1e-12 are dropped.
[[nodiscard]] double von_neumann_entropy(const DensityMatrix &rho);

/// Entropy in bits of a probability spectrum (same cutoff as above).
[[nodiscard]] double spectrum_entropy(std::span<const double> eigenvalues);

[[nodiscard]] SchmidtDecomposition schmidt_decompose(const StateVector &state,
                                                     const std::set<std::size_t> &part_a);

/// (Tr rho X, Tr rho Y, Tr rho Z) of the single-qubit reduction.
[[nodiscard]] std::array<double, 3> bloch_vector(const StateVector &state, std::size_t qubit);

} // namespace qenc
