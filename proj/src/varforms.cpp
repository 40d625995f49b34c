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

#include "qenc/varforms.hpp"
#include "qenc/error.hpp"

#include <numbers>

namespace qenc {

std::string_view entanglement_name(Entanglement e) {
    return e == Entanglement::Linear ? "linear" : "full";
}

std::optional<Entanglement> entanglement_from_name(std::string_view name) {
    if (name == "linear") {
        return Entanglement::Linear;
    }
    if (name == "full") {
        return Entanglement::Full;
    }
    return std::nullopt;
}

std::string_view feature_map_name(FeatureMapKind k) {
    return k == FeatureMapKind::ZZ ? "zz" : "hybrid";
}

std::optional<FeatureMapKind> feature_map_from_name(std::string_view name) {
    if (name == "zz") {
        return FeatureMapKind::ZZ;
    }
    if (name == "hybrid") {
        return FeatureMapKind::Hybrid;
    }
    return std::nullopt;
}

std::string_view feature_map_block_name(FeatureMapKind k) {
    return k == FeatureMapKind::ZZ ? "zz_feature_map" : "hybrid_feature_map";
}

std::vector<std::pair<std::size_t, std::size_t>> entangled_pairs(std::size_t n_qubits,
                                                                 Entanglement e) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    if (e == Entanglement::Linear) {
        for (std::size_t i = 0; i + 1 < n_qubits; ++i) {
            pairs.emplace_back(i, i + 1);
        }
    } else {
        for (std::size_t i = 0; i < n_qubits; ++i) {
            for (std::size_t j = i + 1; j < n_qubits; ++j) {
                pairs.emplace_back(i, j);
            }
        }
    }
    return pairs;
}

Circuit build_zz_feature_map(std::size_t n_qubits, std::size_t reps, Entanglement ent) {
    QENC_REQUIRE(n_qubits >= 2, "zz feature map needs at least 2 qubits");
    QENC_REQUIRE(reps >= 1, "reps must be at least 1");
    std::vector<ParamExpr> x;
    for (std::size_t i = 0; i < n_qubits; ++i) {
        x.push_back(ParamExpr::symbol(indexed_name(kFeatureSymbol, i)));
    }
    const ParamExpr pi(std::numbers::pi);
    const auto pairs = entangled_pairs(n_qubits, ent);

    Circuit c(n_qubits);
    for (std::size_t r = 0; r < reps; ++r) {
        for (std::size_t i = 0; i < n_qubits; ++i) {
            c.h(i);
        }
        for (std::size_t i = 0; i < n_qubits; ++i) {
            c.p(i, ParamExpr(2.0) * x[i]);
        }
        for (const auto &[i, j] : pairs) {
            c.cx(i, j);
            c.p(j, ParamExpr(2.0) * (pi - x[i]) * (pi - x[j]));
            c.cx(i, j);
        }
    }
    return c;
}

Circuit build_real_amplitudes(std::size_t n_qubits, std::size_t reps, Entanglement ent) {
    QENC_REQUIRE(n_qubits >= 1, "real amplitudes needs at least 1 qubit");
    QENC_REQUIRE(reps >= 1, "reps must be at least 1");
    const auto pairs = entangled_pairs(n_qubits, ent);
    Circuit c(n_qubits);
    std::size_t next = 0;
    auto rotation_layer = [&] {
        for (std::size_t i = 0; i < n_qubits; ++i) {
            c.ry(i, ParamExpr::symbol(indexed_name(kWeightSymbol, next++)));
        }
    };
    rotation_layer();
    for (std::size_t r = 0; r < reps; ++r) {
        for (const auto &[i, j] : pairs) {
            c.cx(i, j);
        }
        rotation_layer();
    }
    return c;
}

Circuit build_hybrid_feature_map(std::size_t n_qubits, double phase_scale) {
    QENC_REQUIRE(n_qubits >= 1, "hybrid feature map needs at least 1 qubit");
    Circuit c(n_qubits);
    for (std::size_t i = 0; i < n_qubits; ++i) {
        const auto xi = ParamExpr::symbol(indexed_name(kFeatureSymbol, i));
        c.ry(i, xi);
        c.rz(i, ParamExpr(phase_scale) * xi);
    }
    return c;
}

Circuit build_feature_map(const FeatureMapSpec &spec) {
    if (spec.kind == FeatureMapKind::ZZ) {
        return build_zz_feature_map(spec.n_qubits, spec.reps, spec.entanglement);
    }
    return build_hybrid_feature_map(spec.n_qubits, spec.phase_scale);
}

Circuit assemble_classifier_circuit(const Circuit &feature_map, FeatureMapKind kind,
                                    const Circuit &ansatz) {
    QENC_REQUIRE(feature_map.n_qubits() == ansatz.n_qubits(),
                 "feature map and ansatz widths differ");
    Circuit c(feature_map.n_qubits());
    c.compose(feature_map, std::string(feature_map_block_name(kind)));
    c.compose(ansatz, std::string(kAnsatzBlockName));
    return c;
}

} // namespace qenc
