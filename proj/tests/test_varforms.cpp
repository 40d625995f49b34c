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

#include "qenc/encoders.hpp"
#include "qenc/error.hpp"
#include "qenc/simulator.hpp"
#include "qenc/varforms.hpp"

#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <random>

using namespace qenc;
using C = std::complex<double>;

namespace {

Bindings feature_bindings(const std::vector<double> &x) {
    Bindings b;
    for (std::size_t i = 0; i < x.size(); ++i) {
        b["x[" + std::to_string(i) + "]"] = x[i];
    }
    return b;
}

/// ZZ map as (diagonal phase) x (Hadamard transform), per repetition.
std::vector<C> zz_oracle(const std::vector<double> &x, std::size_t reps,
                         const std::vector<std::pair<std::size_t, std::size_t>> &pairs) {
    const std::size_t n = x.size();
    const std::size_t dim = std::size_t{1} << n;
    std::vector<C> psi(dim, 0.0);
    psi[0] = 1.0;
    for (std::size_t r = 0; r < reps; ++r) {
        std::vector<C> h(dim, 0.0);
        for (std::size_t out = 0; out < dim; ++out) {
            for (std::size_t in = 0; in < dim; ++in) {
                const double sign = (std::popcount(out & in) & 1) != 0 ? -1.0 : 1.0;
                h[out] += sign * psi[in];
            }
            h[out] /= std::sqrt(static_cast<double>(dim));
        }
        for (std::size_t b = 0; b < dim; ++b) {
            double phase = 0;
            for (std::size_t i = 0; i < n; ++i) {
                phase += 2 * x[i] * static_cast<double>((b >> i) & 1U);
            }
            for (const auto &[i, j] : pairs) {
                const auto parity = ((b >> i) ^ (b >> j)) & 1U;
                phase += 2 * (std::numbers::pi - x[i]) * (std::numbers::pi - x[j]) *
                         static_cast<double>(parity);
            }
            h[b] *= std::polar(1.0, phase);
        }
        psi = std::move(h);
    }
    return psi;
}

} // namespace

TEST_CASE("entangled pairs", "[varforms]") {
    using P = std::vector<std::pair<std::size_t, std::size_t>>;
    CHECK(entangled_pairs(4, Entanglement::Linear) == P{{0, 1}, {1, 2}, {2, 3}});
    CHECK(entangled_pairs(3, Entanglement::Full) == P{{0, 1}, {0, 2}, {1, 2}});
    CHECK(entangled_pairs(1, Entanglement::Full).empty());
}

TEST_CASE("zz feature map gate counts", "[varforms]") {
    const auto c = build_zz_feature_map(6, 2, Entanglement::Linear);
    const auto s = c.stats();
    CHECK(s.op_counts.at("h") == 12);
    CHECK(s.op_counts.at("p") == 22);
    CHECK(s.op_counts.at("cx") == 20);
    CHECK(s.num_parameters == 6);
    CHECK(c.parameters().front() == "x[0]");
    const auto full = build_zz_feature_map(4, 1, Entanglement::Full).stats();
    CHECK(full.op_counts.at("cx") == 12);
    CHECK(full.op_counts.at("p") == 4 + 6);
}

TEST_CASE("zz feature map matches the diagonal-phase oracle", "[varforms]") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(0, std::numbers::pi);
    for (auto ent : {Entanglement::Linear, Entanglement::Full}) {
        for (std::size_t n : {2U, 3U, 4U}) {
            std::vector<double> x(n);
            for (auto &v : x) {
                v = u(rng);
            }
            const auto s = run(build_zz_feature_map(n, 2, ent), feature_bindings(x));
            const auto want = zz_oracle(x, 2, entangled_pairs(n, ent));
            for (std::size_t i = 0; i < want.size(); ++i) {
                CHECK(std::abs(s[i] - want[i]) < 1e-12);
            }
        }
    }
}

TEST_CASE("real amplitudes layout", "[varforms]") {
    const auto c = build_real_amplitudes(6, 2, Entanglement::Linear);
    const auto s = c.stats();
    CHECK(s.num_parameters == 18);
    CHECK(s.op_counts.at("ry") == 18);
    CHECK(s.op_counts.at("cx") == 10);
    CHECK(c.parameters().front() == "theta[0]");
    CHECK(c.parameters().back() == "theta[17]");
    // First layer: RY theta[q] on qubit q.
    for (std::size_t q = 0; q < 6; ++q) {
        CHECK(c.ops()[q].kind == GateKind::RY);
        CHECK(c.ops()[q].targets[0] == q);
        CHECK(c.ops()[q].angle->symbol_name() == "theta[" + std::to_string(q) + "]");
    }
    CHECK(build_real_amplitudes(3, 1, Entanglement::Full).stats().num_parameters == 6);
}

TEST_CASE("real amplitudes produce real states", "[varforms]") {
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> u(-3, 3);
    const auto c = build_real_amplitudes(4, 3, Entanglement::Full);
    Bindings b;
    for (const auto &name : c.parameters()) {
        b[name] = u(rng);
    }
    const auto s = run(c, b);
    for (std::size_t i = 0; i < s.dim(); ++i) {
        CHECK(std::abs(s[i].imag()) < 1e-14);
    }
}

TEST_CASE("hybrid feature map agrees with hybrid encoding", "[varforms]") {
    const std::vector<double> x = {0.1, 0.9, 1.7, 2.5, 3.0, 0.4};
    const auto fm = build_hybrid_feature_map(6);
    const auto s = fm.stats();
    CHECK(s.depth == 2);
    CHECK(s.width == 6);
    CHECK(s.op_counts == std::map<std::string, std::size_t>{{"ry", 6}, {"rz", 6}});
    CHECK(fidelity(run(fm, feature_bindings(x)), run(hybrid_encode(FeatureVector(x)))) >
          1 - 1e-14);
}

TEST_CASE("assembled standard classifier statistics", "[varforms]") {
    const auto fm = build_zz_feature_map(6, 2, Entanglement::Linear);
    const auto an = build_real_amplitudes(6, 2, Entanglement::Linear);
    const auto c = assemble_classifier_circuit(fm, FeatureMapKind::ZZ, an);
    const auto top = c.stats();
    CHECK(top.depth == 2);
    CHECK(top.width == 6);
    CHECK(top.num_parameters == 24);
    CHECK(top.op_counts ==
          std::map<std::string, std::size_t>{{"zz_feature_map", 1}, {"real_amplitudes", 1}});
    const auto flat = c.decompose().stats();
    CHECK(flat.op_counts ==
          std::map<std::string, std::size_t>{{"cx", 30}, {"p", 22}, {"ry", 18}, {"h", 12}});
    CHECK(flat.num_parameters == 24);
    CHECK(flat.width == 6);
}

TEST_CASE("build_feature_map dispatches on kind", "[varforms]") {
    FeatureMapSpec spec;
    spec.kind = FeatureMapKind::ZZ;
    spec.n_qubits = 3;
    spec.reps = 1;
    CHECK(build_feature_map(spec).stats().op_counts.at("h") == 3);
    spec.kind = FeatureMapKind::Hybrid;
    CHECK(build_feature_map(spec).stats().op_counts.at("rz") == 3);
    CHECK(feature_map_from_name("zz") == FeatureMapKind::ZZ);
    CHECK_FALSE(feature_map_from_name("ZZFeatureMap").has_value());
}
