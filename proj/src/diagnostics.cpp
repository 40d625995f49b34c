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

#include "qenc/diagnostics.hpp"
#include "qenc/error.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>

namespace qenc {

namespace {

constexpr double kEigenCutoff = 1e-12;

Eigen::MatrixXcd to_eigen(const DensityMatrix &rho) {
    Eigen::MatrixXcd m(rho.dim(), rho.dim());
    for (std::size_t r = 0; r < rho.dim(); ++r) {
        for (std::size_t c = 0; c < rho.dim(); ++c) {
            m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = rho(r, c);
        }
    }
    return m;
}

std::vector<double> hermitian_eigenvalues(const Eigen::MatrixXcd &m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
    const auto &ev = solver.eigenvalues();
    std::vector<double> out(ev.data(), ev.data() + ev.size());
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

/// Gathers the bits of `index` at `qubits` (ascending) into a compact index.
std::size_t gather_bits(std::size_t index, const std::vector<std::size_t> &qubits) {
    std::size_t out = 0;
    for (std::size_t j = 0; j < qubits.size(); ++j) {
        out |= ((index >> qubits[j]) & 1U) << j;
    }
    return out;
}

void check_partition(const StateVector &state, const std::set<std::size_t> &subset) {
    QENC_REQUIRE(!subset.empty(), "qubit subset must be nonempty");
    QENC_REQUIRE(subset.size() < state.n_qubits(), "qubit subset must be a proper subset");
    QENC_REQUIRE(*subset.rbegin() < state.n_qubits(), "qubit index out of range");
}

std::vector<std::size_t> complement(std::size_t n_qubits, const std::set<std::size_t> &subset) {
    std::vector<std::size_t> rest;
    for (std::size_t q = 0; q < n_qubits; ++q) {
        if (subset.count(q) == 0) {
            rest.push_back(q);
        }
    }
    return rest;
}

DensityMatrix reduce(const StateVector &state, const std::set<std::size_t> &keep) {
    const std::vector<std::size_t> kept(keep.begin(), keep.end());
    const auto traced = complement(state.n_qubits(), keep);
    const std::size_t dim = std::size_t{1} << kept.size();
    const std::size_t rest_dim = std::size_t{1} << traced.size();

    // Amplitude matrix psi[a][b] with a over kept bits, b over traced bits.
    std::vector<Complex> psi(dim * rest_dim);
    for (std::size_t i = 0; i < state.dim(); ++i) {
        psi[gather_bits(i, kept) * rest_dim + gather_bits(i, traced)] = state[i];
    }
    std::vector<Complex> rho(dim * dim);
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            Complex acc{};
            for (std::size_t b = 0; b < rest_dim; ++b) {
                acc += psi[r * rest_dim + b] * std::conj(psi[c * rest_dim + b]);
            }
            rho[r * dim + c] = acc;
        }
    }
    return DensityMatrix(dim, std::move(rho));
}

} // namespace

DensityMatrix::DensityMatrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), entries_(std::move(entries)) {
    QENC_REQUIRE(dim >= 2 && std::has_single_bit(dim), "density matrix dimension must be 2^k");
    QENC_REQUIRE(entries_.size() == dim * dim, "density matrix entry count mismatch");
    Complex trace{};
    for (std::size_t r = 0; r < dim; ++r) {
        trace += (*this)(r, r);
        for (std::size_t c = 0; c < dim; ++c) {
            QENC_REQUIRE(std::abs((*this)(r, c) - std::conj((*this)(c, r))) <= kTolerance,
                         "density matrix is not Hermitian");
        }
    }
    QENC_REQUIRE(std::abs(trace - 1.0) <= kTolerance, "density matrix trace is not 1");
    const auto ev = eigenvalues();
    QENC_REQUIRE(ev.back() >= -kTolerance, "density matrix has a negative eigenvalue");
}

std::vector<double> DensityMatrix::eigenvalues() const { return hermitian_eigenvalues(to_eigen(*this)); }

DensityMatrix partial_trace(const StateVector &state, const std::set<std::size_t> &keep) {
    check_partition(state, keep);
    return reduce(state, keep);
}

double purity(const DensityMatrix &rho) {
    // Tr(rho^2) = sum |rho_rc|^2 for Hermitian rho.
    double s = 0.0;
    for (const auto &e : rho.entries()) {
        s += std::norm(e);
    }
    return s;
}

double spectrum_entropy(std::span<const double> eigenvalues) {
    double h = 0.0;
    for (double l : eigenvalues) {
        if (l > kEigenCutoff) {
            h -= l * std::log2(l);
        }
    }
    return h;
}

double von_neumann_entropy(const DensityMatrix &rho) {
    const auto ev = rho.eigenvalues();
    return spectrum_entropy(ev);
}

SchmidtDecomposition schmidt_decompose(const StateVector &state,
                                       const std::set<std::size_t> &part_a) {
    check_partition(state, part_a);
    SchmidtDecomposition out;
    out.part_a.assign(part_a.begin(), part_a.end());
    out.part_b = complement(state.n_qubits(), part_a);

    const auto rows = static_cast<Eigen::Index>(std::size_t{1} << out.part_a.size());
    const auto cols = static_cast<Eigen::Index>(std::size_t{1} << out.part_b.size());
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(rows, cols);
    for (std::size_t i = 0; i < state.dim(); ++i) {
        m(static_cast<Eigen::Index>(gather_bits(i, out.part_a)),
          static_cast<Eigen::Index>(gather_bits(i, out.part_b))) = state[i];
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    const auto &sv = svd.singularValues();
    for (Eigen::Index k = 0; k < sv.size(); ++k) {
        out.coefficients.push_back(sv(k));
    }
    std::sort(out.coefficients.begin(), out.coefficients.end(), std::greater<>());
    return out;
}

std::array<double, 3> bloch_vector(const StateVector &state, std::size_t qubit) {
    QENC_REQUIRE(qubit < state.n_qubits(), "qubit index out of range");
    const auto rho = reduce(state, {qubit});
    const Complex r01 = rho(0, 1);
    return {2.0 * r01.real(), -2.0 * r01.imag(), rho(0, 0).real() - rho(1, 1).real()};
}

} // namespace qenc
