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
 * Symbolic gate angles. A ParamExpr is an immutable expression tree over
 * named parameters (e.g. `x[0]`, `theta[3]`) and real constants, closed
 * under `+`, `-` and `*`. Feature maps need products of shifted symbols, so
 * plain "symbol or number" angles are not enough.
 */
#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace qenc {

using Bindings = std::map<std::string, double, std::less<>>;

class ParamExpr {
  public:
    /// Constant zero.
    ParamExpr();
    // NOLINTNEXTLINE(google-explicit-constructor)
    ParamExpr(double value);

    static ParamExpr symbol(std::string name);

    /// Parses the textual form produced by to_string(). Accepts numbers,
    /// identifiers with an optional `[index]` suffix, `pi`, parentheses,
    /// unary minus and the binary operators `+ - *`.
    static ParamExpr parse(std::string_view text);

    [[nodiscard]] bool is_constant() const;
    [[nodiscard]] bool is_symbol() const;

    /// Value of a constant expression; throws if any symbol is unbound.
    [[nodiscard]] double constant_value() const;
    /// Name of a bare-symbol expression; throws otherwise.
    [[nodiscard]] const std::string &symbol_name() const;

    /// Distinct symbols in first-occurrence (left to right) order.
    [[nodiscard]] std::vector<std::string> symbols() const;

    /// Full evaluation. Throws qenc::Error naming the first missing symbol.
    [[nodiscard]] double evaluate(const Bindings &values) const;

    /// Substitutes the symbols present in `values` and folds constants.
    [[nodiscard]] ParamExpr bind(const Bindings &values) const;

    [[nodiscard]] std::string to_string() const;

    friend ParamExpr operator+(const ParamExpr &a, const ParamExpr &b);
    friend ParamExpr operator-(const ParamExpr &a, const ParamExpr &b);
    friend ParamExpr operator*(const ParamExpr &a, const ParamExpr &b);
    friend ParamExpr operator-(const ParamExpr &a);

    struct Node;

  private:
    explicit ParamExpr(std::shared_ptr<const Node> node);
    std::shared_ptr<const Node> node_;
};

/// Indexed parameter name in the `base[i]` form used throughout the library.
std::string indexed_name(std::string_view base, std::size_t index);

} // namespace qenc
