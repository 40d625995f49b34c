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
#include "qenc/stateprep.hpp"

#include <bit>
#include <cmath>

namespace qenc {

FeatureVector::FeatureVector(std::vector<double> values) : values_(std::move(values)) {
    QENC_REQUIRE(!values_.empty(), "feature vector must have at least one feature");
    for (double v : values_) {
        QENC_REQUIRE(std::isfinite(v), "feature values must be finite");
    }
}

std::string_view encoding_name(EncodingMethod m) {
    switch (m) {
    case EncodingMethod::Basis:
        return "basis";
    case EncodingMethod::Amplitude:
        return "amplitude";
    case EncodingMethod::Angle:
        return "angle";
    case EncodingMethod::Phase:
        return "phase";
    case EncodingMethod::Hybrid:
        return "hybrid";
    }
    return "?";
}

std::optional<EncodingMethod> encoding_from_name(std::string_view name) {
    for (auto m : {EncodingMethod::Basis, EncodingMethod::Amplitude, EncodingMethod::Angle,
                   EncodingMethod::Phase, EncodingMethod::Hybrid}) {
        if (encoding_name(m) == name) {
            return m;
        }
    }
    return std::nullopt;
}

namespace {

std::size_t ceil_log2(std::size_t n) {
    return n <= 1 ? 0 : static_cast<std::size_t>(std::bit_width(n - 1));
}

} // namespace

bool hybrid_uses_amplitude_path(std::size_t n_features) { return std::has_single_bit(n_features); }

std::size_t required_qubits(EncodingMethod method, std::size_t n_features) {
    QENC_REQUIRE(n_features >= 1, "need at least one feature");
    switch (method) {
    case EncodingMethod::Amplitude:
        return std::max<std::size_t>(1, ceil_log2(n_features));
    case EncodingMethod::Hybrid:
        return hybrid_uses_amplitude_path(n_features)
                   ? std::max<std::size_t>(1, ceil_log2(n_features))
                   : n_features;
    default:
        return n_features;
    }
}

Circuit basis_encode(const FeatureVector &x, double threshold) {
    Circuit c(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] > threshold) {
            c.x(i);
        }
    }
    return c;
}

Circuit angle_encode(const FeatureVector &x) {
    Circuit c(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        c.ry(i, x[i]);
    }
    return c;
}

Circuit phase_encode(const FeatureVector &x) {
    Circuit c(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        c.h(i);
    }
    for (std::size_t i = 0; i < x.size(); ++i) {
        c.rz(i, x[i]);
    }
    return c;
}

Circuit amplitude_encode(const FeatureVector &x) {
    const std::size_t n_qubits = required_qubits(EncodingMethod::Amplitude, x.size());
    std::vector<double> padded(std::size_t{1} << n_qubits, 0.0);
    double sq = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        padded[i] = x[i];
        sq += x[i] * x[i];
    }
    QENC_REQUIRE(sq > 0.0, "cannot amplitude-encode the zero vector");
    const double norm = std::sqrt(sq);
    for (auto &v : padded) {
        v /= norm;
    }
    return prepare_state(TargetState(std::move(padded)));
}

Circuit hybrid_encode(const FeatureVector &x, double phase_scale) {
    if (hybrid_uses_amplitude_path(x.size())) {
        return amplitude_encode(x);
    }
    Circuit c(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        c.ry(i, x[i]);
        c.rz(i, phase_scale * x[i]);
    }
    return c;
}

Circuit encode(EncodingMethod method, const FeatureVector &x) {
    switch (method) {
    case EncodingMethod::Basis:
        return basis_encode(x);
    case EncodingMethod::Amplitude:
        return amplitude_encode(x);
    case EncodingMethod::Angle:
        return angle_encode(x);
    case EncodingMethod::Phase:
        return phase_encode(x);
    case EncodingMethod::Hybrid:
        return hybrid_encode(x);
    }
    throw Error("unknown encoding method");
}

} // namespace qenc
