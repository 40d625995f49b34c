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
#include "qenc/encoders.hpp"
#include "qenc/error.hpp"
#include "qenc/simulator.hpp"

#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <random>

using namespace qenc;
using Catch::Matchers::WithinAbs;
using C = std::complex<double>;

namespace {

const std::vector<double> kPublished = {0.191, 0.639, 0.211, 0.241, 0.652, 0.166, 0, 0};

/// rho_A[r][c] = sum_e psi[r + e] conj(psi[c + e]) for A = {qubit 0}.
std::array<C, 4> reduce_qubit0(const StateVector &s) {
    std::array<C, 4> rho{};
    for (std::size_t r = 0; r < 2; ++r) {
        for (std::size_t c = 0; c < 2; ++c) {
            for (std::size_t env = 0; env < s.dim(); env += 2) {
                rho[r * 2 + c] += s[env | r] * std::conj(s[env | c]);
            }
        }
    }
    return rho;
}

StateVector random_state(std::size_t n, std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    std::vector<C> v(std::size_t{1} << n);
    double norm = 0;
    for (auto &a : v) {
        a = C(g(rng), g(rng));
        norm += std::norm(a);
    }
    for (auto &a : v) {
        a /= std::sqrt(norm);
    }
    return StateVector(v);
}

} // namespace

TEST_CASE("published amplitude state: qubit-0 diagnostics", "[diagnostics][published]") {
    const auto s = run(amplitude_encode(FeatureVector(kPublished)));
    const auto oracle = reduce_qubit0(s);
    const auto rho = partial_trace(s, {0});
    REQUIRE(rho.dim() == 2);
    for (std::size_t k = 0; k < 4; ++k) {
        CHECK(std::abs(rho(k / 2, k % 2) - oracle[k]) < 1e-14);
    }
    // Closed-form 2x2 spectrum.
    const double tr = oracle[0].real() + oracle[3].real();
    const double det = (oracle[0] * oracle[3] - oracle[1] * oracle[2]).real();
    const double disc = std::sqrt(tr * tr / 4 - det);
    const double l1 = tr / 2 + disc;
    const double l2 = tr / 2 - disc;
    const double entropy = -(l1 * std::log2(l1) + l2 * std::log2(l2));

    CHECK_THAT(purity(rho), WithinAbs(l1 * l1 + l2 * l2, 1e-12));
    CHECK_THAT(purity(rho), WithinAbs(0.658, 1e-3));
    CHECK_THAT(von_neumann_entropy(rho), WithinAbs(entropy, 1e-12));
    CHECK_THAT(von_neumann_entropy(rho), WithinAbs(0.758, 1e-3));
    const auto ev = rho.eigenvalues();
    CHECK_THAT(ev[0], WithinAbs(l1, 1e-12));
    CHECK_THAT(ev[1], WithinAbs(l2, 1e-12));

    const auto sd = schmidt_decompose(s, {0});
    REQUIRE(sd.coefficients.size() == 2);
    CHECK_THAT(sd.coefficients[0], WithinAbs(std::sqrt(l1), 1e-12));
    CHECK_THAT(sd.coefficients[1], WithinAbs(std::sqrt(l2), 1e-12));
    CHECK_THAT(sd.coefficients[0], WithinAbs(0.884, 1e-3));
    CHECK_THAT(sd.coefficients[1], WithinAbs(0.468, 1e-3));
}

TEST_CASE("product states are pure on every cut", "[diagnostics]") {
    const auto s = run(angle_encode(FeatureVector({0.3, 1.2, 2.2, 0.9})));
    for (std::size_t q = 0; q < 4; ++q) {
        const auto rho = partial_trace(s, {q});
        CHECK_THAT(purity(rho), WithinAbs(1.0, 1e-12));
        CHECK_THAT(von_neumann_entropy(rho), WithinAbs(0.0, 1e-9));
        const auto sd = schmidt_decompose(s, {q});
        CHECK_THAT(sd.coefficients[0], WithinAbs(1.0, 1e-12));
    }
}

TEST_CASE("bell state is maximally entangled", "[diagnostics]") {
    Circuit c(2);
    c.h(0).cx(0, 1);
    const auto s = run(c);
    const auto rho = partial_trace(s, {1});
    CHECK_THAT(purity(rho), WithinAbs(0.5, 1e-15));
    CHECK_THAT(von_neumann_entropy(rho), WithinAbs(1.0, 1e-12));
    const auto b = bloch_vector(s, 0);
    CHECK_THAT(b[0] * b[0] + b[1] * b[1] + b[2] * b[2], WithinAbs(0.0, 1e-15));
}

TEST_CASE("bloch vectors of the cardinal states", "[diagnostics]") {
    auto one = [](auto build) {
        Circuit c(1);
        build(c);
        return bloch_vector(run(c), 0);
    };
    const auto z = one([](Circuit &) {});
    CHECK(z == std::array<double, 3>{0, 0, 1});
    const auto minus_z = one([](Circuit &c) { c.x(0); });
    CHECK_THAT(minus_z[2], WithinAbs(-1, 1e-15));
    const auto plus_x = one([](Circuit &c) { c.h(0); });
    CHECK_THAT(plus_x[0], WithinAbs(1, 1e-15));
    const auto plus_y = one([](Circuit &c) { c.h(0).p(0, std::numbers::pi / 2); });
    CHECK_THAT(plus_y[1], WithinAbs(1, 1e-15));
    CHECK_THAT(plus_y[0], WithinAbs(0, 1e-15));
}

TEST_CASE("kept qubits map to ascending bits", "[diagnostics]") {
    // |q2 q1 q0> = |100>: keeping {0, 2} leaves |q2 q0> = |10>, index 2.
    Circuit c(3);
    c.x(2);
    const auto rho = partial_trace(run(c), {0, 2});
    REQUIRE(rho.dim() == 4);
    CHECK_THAT(rho(2, 2).real(), WithinAbs(1.0, 1e-15));
}

TEST_CASE("diagnostic invariants on random states", "[diagnostics][property]") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 2 + trial % 4;
        const auto s = random_state(n, rng);
        std::set<std::size_t> keep;
        for (std::size_t q = 0; q < n; ++q) {
            if ((trial >> q) & 1 || keep.empty()) {
                keep.insert(q);
            }
        }
        if (keep.size() == n) {
            keep.erase(keep.begin());
        }
        std::set<std::size_t> rest;
        for (std::size_t q = 0; q < n; ++q) {
            if (keep.count(q) == 0) {
                rest.insert(q);
            }
        }
        const auto ra = partial_trace(s, keep);
        const auto rb = partial_trace(s, rest);
        const double pa = purity(ra);
        CHECK(pa <= 1 + 1e-12);
        CHECK(pa >= 1.0 / static_cast<double>(std::min(ra.dim(), rb.dim())) - 1e-12);
        // Both sides of a pure-state cut share their spectrum.
        CHECK_THAT(pa, WithinAbs(purity(rb), 1e-12));
        CHECK_THAT(von_neumann_entropy(ra), WithinAbs(von_neumann_entropy(rb), 1e-9));
        const auto sd = schmidt_decompose(s, keep);
        double sum_sq = 0;
        for (double v : sd.coefficients) {
            sum_sq += v * v;
        }
        CHECK_THAT(sum_sq, WithinAbs(1.0, 1e-12));
        const auto ev = ra.eigenvalues();
        for (std::size_t k = 0; k < std::min(ev.size(), sd.coefficients.size()); ++k) {
            CHECK_THAT(sd.coefficients[k] * sd.coefficients[k], WithinAbs(ev[k], 1e-10));
        }
        for (std::size_t q = 0; q < n; ++q) {
            const auto b = bloch_vector(s, q);
            CHECK(b[0] * b[0] + b[1] * b[1] + b[2] * b[2] <= 1 + 1e-12);
        }
    }
}

TEST_CASE("density matrix and subsystem validation", "[diagnostics]") {
    const StateVector s(2);
    CHECK_THROWS_AS(partial_trace(s, {}), Error);
    CHECK_THROWS_AS(partial_trace(s, {0, 1}), Error);
    CHECK_THROWS_AS(partial_trace(s, {5}), Error);
    CHECK_THROWS_AS(DensityMatrix(2, {C(0.5), C(0.1), C(0.2), C(0.5)}), Error); // not Hermitian
    CHECK_THROWS_AS(DensityMatrix(2, {C(0.7), C(0), C(0), C(0.7)}), Error);     // trace
    CHECK_THROWS_AS(DensityMatrix(2, {C(1.5), C(0), C(0), C(-0.5)}), Error);    // negative
    CHECK_NOTHROW(DensityMatrix(2, {C(0.5), C(0.5), C(0.5), C(0.5)}));
    CHECK_THAT(spectrum_entropy(std::vector<double>{0.5, 0.5, 0.0}), WithinAbs(1.0, 1e-15));
}
