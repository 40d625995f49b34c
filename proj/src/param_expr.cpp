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

#include "qenc/param_expr.hpp"
#include "qenc/error.hpp"
#include "qenc/numfmt.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>

namespace qenc {

struct ParamExpr::Node {
    enum class Op { Const, Sym, Add, Sub, Mul, Neg };
    Op op = Op::Const;
    double value = 0.0;
    std::string name;
    std::shared_ptr<const Node> lhs;
    std::shared_ptr<const Node> rhs;
};

namespace {

using NodePtr = std::shared_ptr<const ParamExpr::Node>;
using Op = ParamExpr::Node::Op;

NodePtr make_const(double v) {
    auto n = std::make_shared<ParamExpr::Node>();
    n->op = Op::Const;
    n->value = v;
    return n;
}

NodePtr make_binary(Op op, NodePtr a, NodePtr b) {
    if (a->op == Op::Const && b->op == Op::Const) {
        switch (op) {
        case Op::Add:
            return make_const(a->value + b->value);
        case Op::Sub:
            return make_const(a->value - b->value);
        case Op::Mul:
            return make_const(a->value * b->value);
        default:
            break;
        }
    }
    auto n = std::make_shared<ParamExpr::Node>();
    n->op = op;
    n->lhs = std::move(a);
    n->rhs = std::move(b);
    return n;
}

NodePtr make_neg(NodePtr a) {
    if (a->op == Op::Const) {
        return make_const(-a->value);
    }
    auto n = std::make_shared<ParamExpr::Node>();
    n->op = Op::Neg;
    n->lhs = std::move(a);
    return n;
}

void collect_symbols(const NodePtr &n, std::vector<std::string> &out) {
    switch (n->op) {
    case Op::Const:
        return;
    case Op::Sym:
        for (const auto &s : out) {
            if (s == n->name) {
                return;
            }
        }
        out.push_back(n->name);
        return;
    case Op::Neg:
        collect_symbols(n->lhs, out);
        return;
    default:
        collect_symbols(n->lhs, out);
        collect_symbols(n->rhs, out);
    }
}

double eval(const NodePtr &n, const Bindings &values) {
    switch (n->op) {
    case Op::Const:
        return n->value;
    case Op::Sym: {
        auto it = values.find(n->name);
        if (it == values.end()) {
            throw Error("missing binding for parameter '" + n->name + "'");
        }
        return it->second;
    }
    case Op::Add:
        return eval(n->lhs, values) + eval(n->rhs, values);
    case Op::Sub:
        return eval(n->lhs, values) - eval(n->rhs, values);
    case Op::Mul:
        return eval(n->lhs, values) * eval(n->rhs, values);
    case Op::Neg:
        return -eval(n->lhs, values);
    }
    return 0.0;
}

NodePtr substitute(const NodePtr &n, const Bindings &values) {
    switch (n->op) {
    case Op::Const:
        return n;
    case Op::Sym: {
        auto it = values.find(n->name);
        return it == values.end() ? n : make_const(it->second);
    }
    case Op::Neg:
        return make_neg(substitute(n->lhs, values));
    default:
        return make_binary(n->op, substitute(n->lhs, values),
                           substitute(n->rhs, values));
    }
}

bool is_sum(const NodePtr &n) { return n->op == Op::Add || n->op == Op::Sub; }

std::string print(const NodePtr &n) {
    switch (n->op) {
    case Op::Const:
        return n->value < 0 ? "(" + shortest(n->value) + ")" : shortest(n->value);
    case Op::Sym:
        return n->name;
    case Op::Add:
        return print(n->lhs) + " + " + print(n->rhs);
    case Op::Sub: {
        auto r = print(n->rhs);
        return print(n->lhs) + " - " + (is_sum(n->rhs) ? "(" + r + ")" : r);
    }
    case Op::Mul: {
        auto l = print(n->lhs);
        auto r = print(n->rhs);
        if (is_sum(n->lhs)) {
            l = "(" + l + ")";
        }
        if (is_sum(n->rhs)) {
            r = "(" + r + ")";
        }
        return l + "*" + r;
    }
    case Op::Neg: {
        auto inner = print(n->lhs);
        return n->lhs->op == Op::Sym ? "-" + inner : "-(" + inner + ")";
    }
    }
    return {};
}

class Parser {
  public:
    explicit Parser(std::string_view text) : text_(text) {}

    NodePtr parse() {
        auto n = expr();
        skip_ws();
        if (pos_ != text_.size()) {
            fail("unexpected trailing input");
        }
        return n;
    }

  private:
    NodePtr expr() {
        auto n = term();
        for (;;) {
            skip_ws();
            if (accept('+')) {
                n = make_binary(Op::Add, n, term());
            } else if (accept('-')) {
                n = make_binary(Op::Sub, n, term());
            } else {
                return n;
            }
        }
    }

    NodePtr term() {
        auto n = factor();
        for (;;) {
            skip_ws();
            if (!accept('*')) {
                return n;
            }
            n = make_binary(Op::Mul, n, factor());
        }
    }

    NodePtr factor() {
        skip_ws();
        if (accept('-')) {
            return make_neg(factor());
        }
        if (accept('(')) {
            auto n = expr();
            skip_ws();
            if (!accept(')')) {
                fail("expected ')'");
            }
            return n;
        }
        if (pos_ < text_.size() &&
            (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.')) {
            return number();
        }
        return identifier();
    }

    NodePtr number() {
        double v = 0.0;
        const char *first = text_.data() + pos_;
        const char *last = text_.data() + text_.size();
        auto [ptr, ec] = std::from_chars(first, last, v);
        if (ec != std::errc{}) {
            fail("malformed number");
        }
        pos_ += static_cast<std::size_t>(ptr - first);
        return make_const(v);
    }

    NodePtr identifier() {
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
            ++pos_;
        }
        if (start == pos_ || std::isdigit(static_cast<unsigned char>(text_[start]))) {
            fail("expected identifier");
        }
        if (pos_ < text_.size() && text_[pos_] == '[') {
            ++pos_;
            std::size_t digits = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                ++pos_;
            }
            if (digits == pos_ || !accept(']')) {
                fail("malformed parameter index");
            }
        }
        std::string name(text_.substr(start, pos_ - start));
        if (name == "pi") {
            return make_const(std::numbers::pi);
        }
        auto n = std::make_shared<ParamExpr::Node>();
        n->op = Op::Sym;
        n->name = std::move(name);
        return n;
    }

    bool accept(char c) {
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    [[noreturn]] void fail(const char *why) const {
        throw Error("cannot parse parameter expression '" + std::string(text_) +
                    "' at offset " + std::to_string(pos_) + ": " + why);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

ParamExpr::ParamExpr() : node_(make_const(0.0)) {}
ParamExpr::ParamExpr(double value) : node_(make_const(value)) {}
ParamExpr::ParamExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

ParamExpr ParamExpr::symbol(std::string name) {
    QENC_REQUIRE(!name.empty(), "parameter name must be nonempty");
    auto n = std::make_shared<Node>();
    n->op = Op::Sym;
    n->name = std::move(name);
    return ParamExpr(std::move(n));
}

ParamExpr ParamExpr::parse(std::string_view text) { return ParamExpr(Parser(text).parse()); }

bool ParamExpr::is_constant() const { return node_->op == Op::Const; }
bool ParamExpr::is_symbol() const { return node_->op == Op::Sym; }

double ParamExpr::constant_value() const {
    if (!is_constant()) {
        throw Error("unbound parameter '" + symbols().front() + "'");
    }
    return node_->value;
}

const std::string &ParamExpr::symbol_name() const {
    QENC_REQUIRE(is_symbol(), "expression '" + to_string() + "' is not a bare parameter");
    return node_->name;
}

std::vector<std::string> ParamExpr::symbols() const {
    std::vector<std::string> out;
    collect_symbols(node_, out);
    return out;
}

double ParamExpr::evaluate(const Bindings &values) const { return eval(node_, values); }

ParamExpr ParamExpr::bind(const Bindings &values) const {
    return ParamExpr(substitute(node_, values));
}

std::string ParamExpr::to_string() const { return print(node_); }

ParamExpr operator+(const ParamExpr &a, const ParamExpr &b) {
    return ParamExpr(make_binary(Op::Add, a.node_, b.node_));
}
ParamExpr operator-(const ParamExpr &a, const ParamExpr &b) {
    return ParamExpr(make_binary(Op::Sub, a.node_, b.node_));
}
ParamExpr operator*(const ParamExpr &a, const ParamExpr &b) {
    return ParamExpr(make_binary(Op::Mul, a.node_, b.node_));
}
ParamExpr operator-(const ParamExpr &a) { return ParamExpr(make_neg(a.node_)); }

std::string indexed_name(std::string_view base, std::size_t index) {
    return std::string(base) + "[" + std::to_string(index) + "]";
}

} // namespace qenc
