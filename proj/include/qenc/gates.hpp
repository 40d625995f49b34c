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
 * The fixed base gate set and single-qubit matrix conventions.
 *
 * Basis indices are little-endian: qubit 0 is the least-significant bit.
 * RY(t) = [[cos t/2, -sin t/2], [sin t/2, cos t/2]],
 * RZ(t) = diag(exp(-i t/2), exp(i t/2)), P(l) = diag(1, exp(i l)).
 */
#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace qenc {

using Complex = std::complex<double>;

enum class GateKind { X, H, RX, RY, RZ, P, CX, CZ };

/// Row-major 2x2 unitary.
using Matrix2 = std::array<Complex, 4>;

[[nodiscard]] std::string_view gate_name(GateKind kind);
[[nodiscard]] std::optional<GateKind> gate_from_name(std::string_view name);

[[nodiscard]] constexpr std::size_t gate_arity(GateKind kind) {
    return (kind == GateKind::CX || kind == GateKind::CZ) ? 2 : 1;
}

[[nodiscard]] constexpr bool gate_takes_angle(GateKind kind) {
    return kind == GateKind::RX || kind == GateKind::RY || kind == GateKind::RZ ||
           kind == GateKind::P;
}

/// Rotation gates obeying the +-pi/2 two-term shift rule.
[[nodiscard]] constexpr bool gate_is_rotation(GateKind kind) {
    return kind == GateKind::RX || kind == GateKind::RY || kind == GateKind::RZ;
}

/// Matrix of a single-qubit gate. `angle` is ignored for X and H.
[[nodiscard]] Matrix2 single_qubit_matrix(GateKind kind, double angle = 0.0);

} // namespace qenc
