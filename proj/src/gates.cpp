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

#include "qenc/gates.hpp"
#include "qenc/error.hpp"

#include <cmath>
#include <numbers>

namespace qenc {

std::string_view gate_name(GateKind kind) {
    switch (kind) {
    case GateKind::X:
        return "x";
    case GateKind::H:
        return "h";
    case GateKind::RX:
        return "rx";
    case GateKind::RY:
        return "ry";
    case GateKind::RZ:
        return "rz";
    case GateKind::P:
        return "p";
    case GateKind::CX:
        return "cx";
    case GateKind::CZ:
        return "cz";
    }
    return "?";
}

std::optional<GateKind> gate_from_name(std::string_view name) {
    for (auto k : {GateKind::X, GateKind::H, GateKind::RX, GateKind::RY, GateKind::RZ,
                   GateKind::P, GateKind::CX, GateKind::CZ}) {
        if (gate_name(k) == name) {
            return k;
        }
    }
    return std::nullopt;
}

Matrix2 single_qubit_matrix(GateKind kind, double angle) {
    using namespace std::complex_literals;
    const double c = std::cos(angle / 2);
    const double s = std::sin(angle / 2);
    switch (kind) {
    case GateKind::X:
        return {0.0, 1.0, 1.0, 0.0};
    case GateKind::H: {
        const double r = std::numbers::sqrt2 / 2;
        return {r, r, r, -r};
    }
    case GateKind::RX:
        return {c, -1i * s, -1i * s, c};
    case GateKind::RY:
        return {c, -s, s, c};
    case GateKind::RZ:
        return {std::polar(1.0, -angle / 2), 0.0, 0.0, std::polar(1.0, angle / 2)};
    case GateKind::P:
        return {1.0, 0.0, 0.0, std::polar(1.0, angle)};
    default:
        throw Error("gate '" + std::string(gate_name(kind)) + "' is not a single-qubit gate");
    }
}

} // namespace qenc
