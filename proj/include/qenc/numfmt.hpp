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

#include <string>

namespace qenc {

/// Shortest decimal text that parses back to exactly `v`.
std::string shortest(double v);

/// `v` printed with 10 significant digits (`%.10g`).
std::string sig10(double v);

/// `v` rounded to 10 significant digits. Used before handing numbers to the
/// JSON writer so that serialized artifacts are stable across platforms.
double round10(double v);

} // namespace qenc
