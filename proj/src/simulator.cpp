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

#include "qenc/simulator.hpp"
#include "qenc/error.hpp"

#include <utility>

namespace qenc {

class Simulator {
  public:
    static std::vector<Complex> &raw(StateVector &s) { return s.amps_; }
    static StateVector wrap(std::vector<Complex> v) {
        return StateVector(std::move(v), StateVector::Unchecked{});
    }
};

namespace {

void apply_single(std::vector<Complex> &amps, std::size_t q, const Matrix2 &m) {
    const std::size_t mask = std::size_t{1} << q;
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if ((i & mask) != 0) {
            continue;
        }
        const Complex a0 = amps[i];
        const Complex a1 = amps[i | mask];
        amps[i] = m[0] * a0 + m[1] * a1;
        amps[i | mask] = m[2] * a0 + m[3] * a1;
    }
}

void apply_cx(std::vector<Complex> &amps, std::size_t control, std::size_t target) {
    const std::size_t cm = std::size_t{1} << control;
    const std::size_t tm = std::size_t{1} << target;
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if ((i & cm) != 0 && (i & tm) == 0) {
            std::swap(amps[i], amps[i | tm]);
        }
    }
}

void apply_cz(std::vector<Complex> &amps, std::size_t a, std::size_t b) {
    const std::size_t both = (std::size_t{1} << a) | (std::size_t{1} << b);
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if ((i & both) == both) {
            amps[i] = -amps[i];
        }
    }
}

void apply_inplace(std::vector<Complex> &amps, std::size_t n_qubits, GateKind kind,
                   const std::vector<std::size_t> &targets, double angle) {
    QENC_REQUIRE(targets.size() == gate_arity(kind),
                 std::string(gate_name(kind)) + " has wrong number of targets");
    for (auto q : targets) {
        QENC_REQUIRE(q < n_qubits, "target qubit " + std::to_string(q) + " out of range");
    }
    switch (kind) {
    case GateKind::CX:
        QENC_REQUIRE(targets[0] != targets[1], "duplicate targets");
        apply_cx(amps, targets[0], targets[1]);
        break;
    case GateKind::CZ:
        QENC_REQUIRE(targets[0] != targets[1], "duplicate targets");
        apply_cz(amps, targets[0], targets[1]);
        break;
    default:
        apply_single(amps, targets[0], single_qubit_matrix(kind, angle));
    }
}

double op_angle(const Operation &op, const Bindings &bindings) {
    return op.angle ? op.angle->evaluate(bindings) : 0.0;
}

} // namespace

StateVector apply_gate(const StateVector &state, const Operation &op) {
    double angle = 0.0;
    if (gate_takes_angle(op.kind)) {
        QENC_REQUIRE(op.angle.has_value(), std::string(gate_name(op.kind)) + " needs an angle");
        angle = op.angle->constant_value();
    }
    return apply_gate(state, op.kind, op.targets, angle);
}

StateVector apply_gate(const StateVector &state, GateKind kind,
                       std::vector<std::size_t> targets, double angle) {
    std::vector<Complex> amps(state.amplitudes().begin(), state.amplitudes().end());
    apply_inplace(amps, state.n_qubits(), kind, targets, angle);
    return Simulator::wrap(std::move(amps));
}

StateVector run(const Circuit &circuit, const Bindings &bindings) {
    return run(circuit, bindings, StateVector(circuit.n_qubits()));
}

StateVector run(const Circuit &circuit, const Bindings &bindings, const StateVector &initial) {
    QENC_REQUIRE(initial.n_qubits() == circuit.n_qubits(),
                 "initial state width does not match circuit");
    StateVector state = initial;
    auto &amps = Simulator::raw(state);
    for (const auto &op : circuit.ops()) {
        apply_inplace(amps, circuit.n_qubits(), op.kind, op.targets, op_angle(op, bindings));
    }
    return state;
}

std::vector<double> probabilities(const StateVector &state) {
    std::vector<double> p;
    p.reserve(state.dim());
    for (const auto &a : state.amplitudes()) {
        p.push_back(std::norm(a));
    }
    return p;
}

} // namespace qenc
