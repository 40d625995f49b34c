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

#include "qenc/circuit.hpp"
#include "qenc/state_vector.hpp"

#include <span>
#include <vector>

namespace qenc {

/// U|psi> for one operation. The op's angle must be fully bound.
[[nodiscard]] StateVector apply_gate(const StateVector &state, const Operation &op);

[[nodiscard]] StateVector apply_gate(const StateVector &state, GateKind kind,
                                     std::vector<std::size_t> targets, double angle = 0.0);

/// Runs `circuit` from |0...0> with `bindings` for its symbolic parameters.
/// Extra bindings are ignored; a missing one throws an Error naming it.
[[nodiscard]] StateVector run(const Circuit &circuit, const Bindings &bindings = {});

/// Runs `circuit` starting from `initial` instead of |0...0>.
[[nodiscard]] StateVector run(const Circuit &circuit, const Bindings &bindings,
                              const StateVector &initial);

/// |amplitude_i|^2 for every basis index.
[[nodiscard]] std::vector<double> probabilities(const StateVector &state);

} // namespace qenc
