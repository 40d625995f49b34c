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

#include "qenc/numfmt.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace qenc {

std::string shortest(double v) {
    std::array<char, 64> buf{};
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), ptr);
}

std::string sig10(double v) {
    std::array<char, 64> buf{};
    std::snprintf(buf.data(), buf.size(), "%.10g", v);
    return std::string(buf.data());
}

double round10(double v) {
    if (!std::isfinite(v)) {
        return v;
    }
    double r = std::strtod(sig10(v).c_str(), nullptr);
    // Avoid emitting "-0".
    return r == 0.0 ? 0.0 : r;
}

} // namespace qenc
