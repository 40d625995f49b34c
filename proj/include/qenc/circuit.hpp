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
 * Gate-list circuits with symbolic parameters.
 *
 * A Circuit is a flat, ordered list of base-gate operations. Composite
 * blocks (e.g. a feature map appended as a unit) are recorded as labeled,
 * contiguous ranges of that list: stats() treats each labeled range as one
 * opaque operation, and decompose() simply drops the labels.
 */
#pragma once

#include "qenc/gates.hpp"
#include "qenc/param_expr.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qenc {

struct Operation {
    GateKind kind;
    std::vector<std::size_t> targets; ///< control first for CX
    std::optional<ParamExpr> angle;   ///< present iff gate_takes_angle(kind)
};

struct CompositeBlock {
    std::string name;
    std::size_t begin; ///< first op index
    std::size_t end;   ///< one past the last op index
};

struct CircuitStats {
    std::size_t depth = 0;
    std::size_t width = 0;
    std::size_t num_parameters = 0;
    std::map<std::string, std::size_t> op_counts;
};

class Circuit {
  public:
    explicit Circuit(std::size_t n_qubits);

    /// Appends one base gate. Validates arity, target range, distinctness
    /// and the presence of an angle for parameterized kinds.
    Circuit &append(GateKind kind, std::vector<std::size_t> targets,
                    std::optional<ParamExpr> angle = std::nullopt);

    Circuit &x(std::size_t q) { return append(GateKind::X, {q}); }
    Circuit &h(std::size_t q) { return append(GateKind::H, {q}); }
    Circuit &rx(std::size_t q, ParamExpr a) { return append(GateKind::RX, {q}, std::move(a)); }
    Circuit &ry(std::size_t q, ParamExpr a) { return append(GateKind::RY, {q}, std::move(a)); }
    Circuit &rz(std::size_t q, ParamExpr a) { return append(GateKind::RZ, {q}, std::move(a)); }
    Circuit &p(std::size_t q, ParamExpr a) { return append(GateKind::P, {q}, std::move(a)); }
    Circuit &cx(std::size_t control, std::size_t target) {
        return append(GateKind::CX, {control, target});
    }
    Circuit &cz(std::size_t a, std::size_t b) { return append(GateKind::CZ, {a, b}); }

    /// Appends all of `other`'s ops (same width required). With a block
    /// name the appended range becomes one composite block; otherwise the
    /// other circuit's own blocks are carried over.
    Circuit &compose(const Circuit &other, std::optional<std::string> block_name = std::nullopt);

    /// Labels ops [begin, end) as a composite block. Blocks may not overlap.
    Circuit &label_block(std::string name, std::size_t begin, std::size_t end);

    [[nodiscard]] std::size_t n_qubits() const { return n_qubits_; }
    [[nodiscard]] const std::vector<Operation> &ops() const { return ops_; }
    [[nodiscard]] const std::vector<CompositeBlock> &blocks() const { return blocks_; }
    /// Distinct symbolic parameters in first-occurrence order.
    [[nodiscard]] const std::vector<std::string> &parameters() const { return params_; }

    /// Substitutes a (possibly partial) set of parameter values. Throws on
    /// names the circuit does not reference.
    [[nodiscard]] Circuit bind(const Bindings &values) const;

    /// Same ops with every composite block expanded into base gates.
    [[nodiscard]] Circuit decompose() const;

    /// Depth is the longest path of the qubit-conflict DAG, with each
    /// composite block acting as a single op on the union of its qubits.
    [[nodiscard]] CircuitStats stats() const;

  private:
    void register_params(const ParamExpr &e);

    std::size_t n_qubits_;
    std::vector<Operation> ops_;
    std::vector<CompositeBlock> blocks_;
    std::vector<std::string> params_;
};

} // namespace qenc
