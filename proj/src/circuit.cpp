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

#include "qenc/circuit.hpp"
#include "qenc/error.hpp"

#include <algorithm>
#include <set>

namespace qenc {

Circuit::Circuit(std::size_t n_qubits) : n_qubits_(n_qubits) {
    QENC_REQUIRE(n_qubits >= 1, "circuit needs at least one qubit");
}

Circuit &Circuit::append(GateKind kind, std::vector<std::size_t> targets,
                         std::optional<ParamExpr> angle) {
    const std::string name(gate_name(kind));
    QENC_REQUIRE(targets.size() == gate_arity(kind),
                 name + " expects " + std::to_string(gate_arity(kind)) + " target(s)");
    for (auto q : targets) {
        QENC_REQUIRE(q < n_qubits_, name + " target " + std::to_string(q) +
                                        " out of range for " + std::to_string(n_qubits_) +
                                        " qubits");
    }
    if (targets.size() == 2) {
        QENC_REQUIRE(targets[0] != targets[1], name + " targets must be distinct");
    }
    QENC_REQUIRE(gate_takes_angle(kind) == angle.has_value(),
                 gate_takes_angle(kind) ? name + " requires an angle"
                                        : name + " does not take an angle");
    if (angle) {
        register_params(*angle);
    }
    ops_.push_back(Operation{kind, std::move(targets), std::move(angle)});
    return *this;
}

void Circuit::register_params(const ParamExpr &e) {
    for (auto &s : e.symbols()) {
        if (std::find(params_.begin(), params_.end(), s) == params_.end()) {
            params_.push_back(std::move(s));
        }
    }
}

Circuit &Circuit::compose(const Circuit &other, std::optional<std::string> block_name) {
    QENC_REQUIRE(other.n_qubits_ == n_qubits_, "compose requires equal qubit counts");
    const std::size_t offset = ops_.size();
    for (const auto &op : other.ops_) {
        append(op.kind, op.targets, op.angle);
    }
    if (block_name) {
        if (ops_.size() == offset) {
            return *this;
        }
        label_block(std::move(*block_name), offset, ops_.size());
    } else {
        for (const auto &b : other.blocks_) {
            label_block(b.name, b.begin + offset, b.end + offset);
        }
    }
    return *this;
}

Circuit &Circuit::label_block(std::string name, std::size_t begin, std::size_t end) {
    QENC_REQUIRE(!name.empty(), "block name must be nonempty");
    QENC_REQUIRE(begin < end && end <= ops_.size(), "invalid block range");
    for (const auto &b : blocks_) {
        QENC_REQUIRE(end <= b.begin || begin >= b.end, "composite blocks may not overlap");
    }
    blocks_.push_back(CompositeBlock{std::move(name), begin, end});
    std::sort(blocks_.begin(), blocks_.end(),
              [](const auto &a, const auto &b) { return a.begin < b.begin; });
    return *this;
}

Circuit Circuit::bind(const Bindings &values) const {
    for (const auto &[name, v] : values) {
        QENC_REQUIRE(std::find(params_.begin(), params_.end(), name) != params_.end(),
                     "circuit has no parameter named '" + name + "'");
    }
    Circuit out(n_qubits_);
    for (const auto &op : ops_) {
        std::optional<ParamExpr> angle;
        if (op.angle) {
            angle = op.angle->bind(values);
        }
        out.append(op.kind, op.targets, std::move(angle));
    }
    out.blocks_ = blocks_;
    return out;
}

Circuit Circuit::decompose() const {
    Circuit out = *this;
    out.blocks_.clear();
    return out;
}

CircuitStats Circuit::stats() const {
    CircuitStats s;
    s.width = n_qubits_;
    s.num_parameters = params_.size();

    std::vector<std::size_t> level(n_qubits_, 0);
    auto schedule = [&](const std::set<std::size_t> &qubits) {
        std::size_t start = 0;
        for (auto q : qubits) {
            start = std::max(start, level[q]);
        }
        for (auto q : qubits) {
            level[q] = start + 1;
        }
    };

    auto block = blocks_.begin();
    for (std::size_t i = 0; i < ops_.size();) {
        if (block != blocks_.end() && block->begin == i) {
            std::set<std::size_t> qubits;
            for (std::size_t j = block->begin; j < block->end; ++j) {
                qubits.insert(ops_[j].targets.begin(), ops_[j].targets.end());
            }
            schedule(qubits);
            ++s.op_counts[block->name];
            i = block->end;
            ++block;
            continue;
        }
        const auto &op = ops_[i];
        schedule(std::set<std::size_t>(op.targets.begin(), op.targets.end()));
        ++s.op_counts[std::string(gate_name(op.kind))];
        ++i;
    }
    s.depth = level.empty() ? 0 : *std::max_element(level.begin(), level.end());
    return s;
}

} // namespace qenc
