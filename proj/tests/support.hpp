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

#include "qenc/state_vector.hpp"

#include <array>
#include <complex>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include <unistd.h>

namespace qenc::test {

/// Fresh empty directory under the system temp dir, removed on destruction.
class TempDir {
  public:
    explicit TempDir(const std::string &tag) {
        static int counter = 0;
        path_ = std::filesystem::temp_directory_path() /
                ("qenc_" + tag + "_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
        std::filesystem::remove_all(path_);
        std::filesystem::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir &) = delete;
    TempDir &operator=(const TempDir &) = delete;

    [[nodiscard]] const std::filesystem::path &path() const { return path_; }

  private:
    std::filesystem::path path_;
};

inline double max_abs_diff(const StateVector &s, const std::vector<std::complex<double>> &v) {
    double m = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        m = std::max(m, std::abs(s[i] - v[i]));
    }
    return m;
}

/// Dense matrix-vector oracle: applies a 2x2 matrix to qubit q by building
/// the full 2^n x 2^n Kronecker product. Deliberately slow and independent
/// of the simulator kernels.
inline std::vector<std::complex<double>> kron_apply(const std::vector<std::complex<double>> &psi,
                                                    std::size_t n, std::size_t q,
                                                    const std::array<std::complex<double>, 4> &m) {
    const std::size_t dim = std::size_t{1} << n;
    std::vector<std::complex<double>> out(dim);
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            // Identity on every qubit but q.
            if (((r ^ c) & ~(std::size_t{1} << q)) != 0) {
                continue;
            }
            const std::size_t br = (r >> q) & 1U;
            const std::size_t bc = (c >> q) & 1U;
            out[r] += m[br * 2 + bc] * psi[c];
        }
    }
    return out;
}

inline std::string repo_path(const std::string &rel) {
    return std::string(QENC_SOURCE_DIR) + "/" + rel;
}

} // namespace qenc::test
