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
 * Synthetic binary-classification data, feature scaling, seeded splitting
 * and CSV persistence.
 */
#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace qenc {

/// Seeded pseudo-random source. The distributions are implemented here
/// rather than taken from <random> so streams match across standard
/// libraries.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, 1) with 53 random bits.
    double uniform();
    /// Uniform integer in [0, n).
    std::size_t index(std::size_t n);
    /// Standard normal (Box-Muller).
    double normal();

  private:
    std::mt19937_64 engine_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

struct Dataset {
    std::vector<std::vector<double>> features; ///< rows
    std::vector<int> labels;                   ///< 0 or 1
    std::vector<std::string> feature_names;
    std::string provenance;

    [[nodiscard]] std::size_t n_samples() const { return labels.size(); }
    [[nodiscard]] std::size_t n_features() const { return feature_names.size(); }

    /// Throws unless shapes agree, values are finite and labels are 0/1.
    void validate() const;

    [[nodiscard]] Dataset subset(const std::vector<std::size_t> &rows) const;
};

struct GeneratorConfig {
    std::size_t n_samples = 1000;
    std::size_t n_features = 6;
    std::size_t n_informative = 2;
    std::size_t n_redundant = 2;
    std::size_t n_clusters_per_class = 2;
    double class_sep = 1.0;
    std::uint64_t seed = 42;
    bool shuffle = false;

    void validate() const;
    [[nodiscard]] std::string describe() const;
};

/// Gaussian clusters on hypercube vertices of the informative subspace.
///
/// Each class owns n_clusters_per_class distinct vertices of
/// [-class_sep, class_sep]^n_informative. A cluster's samples are standard
/// normal draws mapped through a random per-cluster linear transform
/// (entries uniform in [-1, 1]) and offset by the vertex. Redundant
/// features are a fixed random linear combination of the informative ones,
/// the remaining features are standard normal noise. Without shuffling,
/// all class-0 rows precede the class-1 rows.
[[nodiscard]] Dataset generate_classification(const GeneratorConfig &config);

enum class ScalerKind { Standard, MinMax };

struct ScalerParams {
    ScalerKind kind = ScalerKind::MinMax;
    std::vector<double> center; ///< mean (standard) or min (minmax)
    std::vector<double> spread; ///< std (standard) or max (minmax)
    double lo = 0.0;
    double hi = 1.0;
};

/// Standard scaling uses the population standard deviation.
[[nodiscard]] ScalerParams fit_scaler(const Dataset &data, ScalerKind kind, double lo = 0.0,
                                      double hi = 1.0);

/// Values outside the fitted range are passed through unclipped.
[[nodiscard]] std::vector<std::vector<double>>
apply_scaler(const ScalerParams &params, const std::vector<std::vector<double>> &features);

[[nodiscard]] Dataset apply_scaler(const ScalerParams &params, const Dataset &data);

struct Split {
    Dataset train;
    Dataset test;
    std::vector<std::size_t> train_rows;
    std::vector<std::size_t> test_rows;
};

/// Seeded uniform permutation, then the first ceil(m (1 - f)) rows train.
[[nodiscard]] Split train_test_split(const Dataset &data, double test_fraction,
                                     std::uint64_t seed);

/// Header `name,...,label`; numbers in shortest round-trip form.
void write_csv(const Dataset &data, std::ostream &out);
void write_csv(const Dataset &data, const std::filesystem::path &path);

[[nodiscard]] Dataset read_csv(std::istream &in, const std::string &source = "<stream>");
[[nodiscard]] Dataset read_csv(const std::filesystem::path &path);

} // namespace qenc
