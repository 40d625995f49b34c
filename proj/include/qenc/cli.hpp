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
 * The `qenc` command line: gen-data, encode, diagnose, train and compare.
 *
 * Exit codes: 0 success, 1 usage or validation error, 2 runtime failure
 * (I/O, numerical failure, malformed input data).
 */
#pragma once

#include "qenc/serialize.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace qenc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitRuntime = 2;

/// Runs one command line. `argv[0]` is the program name.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

/// Lowercase hex SHA-256 of a file's bytes.
[[nodiscard]] std::string sha256_file(const std::filesystem::path &path);

/// One row of the compare table.
struct ComparisonRow {
    std::string feature_map;
    std::string optimizer;
    double train_acc = 0.0;
    double test_acc = 0.0;
    double final_loss = 0.0;
    std::size_t n_evaluations = 0;
    std::vector<double> final_theta;
    double reference_test_acc = 0.0; ///< published value for this cell
};

/// Published test accuracies per (feature map, optimizer) cell.
[[nodiscard]] double reference_accuracy(const std::string &feature_map,
                                        const std::string &optimizer);

[[nodiscard]] Json comparison_to_json(const std::vector<ComparisonRow> &rows);
[[nodiscard]] std::vector<ComparisonRow> comparison_from_json(const Json &doc);
[[nodiscard]] std::string comparison_table(const std::vector<ComparisonRow> &rows);

} // namespace qenc::cli
