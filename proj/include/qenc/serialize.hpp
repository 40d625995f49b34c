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
 * JSON documents for circuits, states, statistics and training records.
 * Every number is rounded to 10 significant digits on the way out.
 */
#pragma once

#include "qenc/circuit.hpp"
#include "qenc/state_vector.hpp"
#include "qenc/vqc.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>

namespace qenc {

using Json = nlohmann::ordered_json;

/// {n_qubits, ops:[{kind, targets, angle|param}], params:[names], blocks:[...]}.
/// Constant angles go to `angle`, symbolic ones to `param` as an expression.
[[nodiscard]] Json circuit_to_json(const Circuit &circuit);
[[nodiscard]] Circuit circuit_from_json(const Json &doc);

/// Array of [re, im] pairs.
[[nodiscard]] Json state_to_json(const StateVector &state);
[[nodiscard]] StateVector state_from_json(const Json &doc);

[[nodiscard]] Json stats_to_json(const CircuitStats &stats);

[[nodiscard]] Json record_to_json(const TrainingRecord &record);
[[nodiscard]] TrainingRecord record_from_json(const Json &doc);

[[nodiscard]] Json number(double v);
[[nodiscard]] Json numbers(std::span<const double> values);

/// Two-space indentation and a trailing newline.
[[nodiscard]] std::string dump(const Json &doc);

void write_text(const std::filesystem::path &path, const std::string &text);
[[nodiscard]] std::string read_text(const std::filesystem::path &path);

} // namespace qenc
