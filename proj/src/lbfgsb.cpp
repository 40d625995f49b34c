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

#include "qenc/error.hpp"
#include "qenc/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>

namespace qenc {

namespace {

using Vec = std::vector<double>;

double dot(const Vec &a, const Vec &b) {
    return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

double norm2(const Vec &a) { return std::sqrt(dot(a, a)); }

bool all_finite(const Vec &v) {
    return std::all_of(v.begin(), v.end(), [](double x) { return std::isfinite(x); });
}

struct Box {
    const std::optional<std::vector<Bound>> &bounds;

    [[nodiscard]] double lo(std::size_t i) const {
        return bounds ? (*bounds)[i].lo : -std::numeric_limits<double>::infinity();
    }
    [[nodiscard]] double hi(std::size_t i) const {
        return bounds ? (*bounds)[i].hi : std::numeric_limits<double>::infinity();
    }

    void project(Vec &x) const {
        for (std::size_t i = 0; i < x.size(); ++i) {
            x[i] = std::clamp(x[i], lo(i), hi(i));
        }
    }

    /// Coordinates pinned at a bound by a gradient pointing outward.
    [[nodiscard]] std::vector<bool> active(const Vec &x, const Vec &g) const {
        std::vector<bool> a(x.size(), false);
        for (std::size_t i = 0; i < x.size(); ++i) {
            a[i] = (x[i] <= lo(i) && g[i] > 0) || (x[i] >= hi(i) && g[i] < 0);
        }
        return a;
    }
};

struct Pair {
    Vec s;
    Vec y;
    double rho;
};

/// Two-loop recursion: returns -H g with H the L-BFGS inverse Hessian.
Vec two_loop(const std::deque<Pair> &mem, Vec q) {
    std::vector<double> alpha(mem.size());
    for (std::size_t k = mem.size(); k-- > 0;) {
        alpha[k] = mem[k].rho * dot(mem[k].s, q);
        for (std::size_t i = 0; i < q.size(); ++i) {
            q[i] -= alpha[k] * mem[k].y[i];
        }
    }
    if (!mem.empty()) {
        const auto &last = mem.back();
        const double gamma = dot(last.s, last.y) / dot(last.y, last.y);
        for (auto &v : q) {
            v *= gamma;
        }
    }
    for (std::size_t k = 0; k < mem.size(); ++k) {
        const double beta = mem[k].rho * dot(mem[k].y, q);
        for (std::size_t i = 0; i < q.size(); ++i) {
            q[i] += (alpha[k] - beta) * mem[k].s[i];
        }
    }
    for (auto &v : q) {
        v = -v;
    }
    return q;
}

} // namespace

OptimizerResult minimize_lbfgsb(const Objective &f, const GradientFn &grad, Vec x0,
                                const LbfgsbOptions &opt) {
    QENC_REQUIRE(!x0.empty(), "l-bfgs-b needs at least one parameter");
    QENC_REQUIRE(opt.memory >= 1, "memory must be at least 1");
    QENC_REQUIRE(opt.max_iter >= 1, "max_iter must be at least 1");
    if (opt.bounds) {
        QENC_REQUIRE(opt.bounds->size() == x0.size(), "bounds dimension mismatch");
        for (const auto &b : *opt.bounds) {
            QENC_REQUIRE(b.lo <= b.hi, "bound with lo > hi");
        }
    }
    const Box box{opt.bounds};
    const std::size_t d = x0.size();

    OptimizerResult result;
    Vec x = std::move(x0);
    box.project(x);

    auto fail = [&](std::string what) {
        result.stop_reason = StopReason::NonFiniteValue;
        result.message = std::move(what);
    };

    double fx = f(x);
    ++result.n_evaluations;
    result.best_params = x;
    result.best_loss = fx;
    if (!std::isfinite(fx)) {
        fail("objective is non-finite at the starting point");
        return result;
    }
    Vec g = grad(x);
    QENC_REQUIRE(g.size() == d, "gradient dimension mismatch");
    if (!all_finite(g)) {
        fail("gradient is non-finite at the starting point");
        return result;
    }

    std::deque<Pair> mem;
    result.stop_reason = StopReason::MaxIterations;
    for (std::size_t iter = 1; iter <= opt.max_iter; ++iter) {
        const auto active = box.active(x, g);
        Vec pg = g;
        for (std::size_t i = 0; i < d; ++i) {
            if (active[i]) {
                pg[i] = 0.0;
            }
        }
        if (norm2(pg) < opt.gradient_tolerance) {
            result.stop_reason = StopReason::GradientConverged;
            break;
        }

        Vec dir = two_loop(mem, pg);
        for (std::size_t i = 0; i < d; ++i) {
            if (active[i]) {
                dir[i] = 0.0;
            }
        }
        if (dot(dir, g) >= 0) {
            mem.clear();
            dir = pg;
            for (auto &v : dir) {
                v = -v;
            }
        }
        double step = mem.empty() ? std::min(1.0, 1.0 / norm2(pg)) : 1.0;

        bool accepted = false;
        Vec xn;
        double fn = 0.0;
        for (std::size_t k = 0; k <= opt.max_backtracks; ++k, step *= opt.backtrack_factor) {
            xn = x;
            for (std::size_t i = 0; i < d; ++i) {
                xn[i] += step * dir[i];
            }
            box.project(xn);
            Vec s(d);
            for (std::size_t i = 0; i < d; ++i) {
                s[i] = xn[i] - x[i];
            }
            if (norm2(s) == 0.0) {
                break;
            }
            fn = f(xn);
            ++result.n_evaluations;
            if (!std::isfinite(fn)) {
                fail("objective is non-finite at iteration " + std::to_string(iter));
                return result;
            }
            if (fn <= fx + opt.sufficient_decrease * dot(g, s)) {
                accepted = true;
                break;
            }
        }
        if (!accepted) {
            result.stop_reason = StopReason::LineSearchFailed;
            result.message = "line search failed at iteration " + std::to_string(iter);
            break;
        }

        Vec gn = grad(xn);
        if (!all_finite(gn)) {
            fail("gradient is non-finite at iteration " + std::to_string(iter));
            return result;
        }
        Pair p{Vec(d), Vec(d), 0.0};
        for (std::size_t i = 0; i < d; ++i) {
            p.s[i] = xn[i] - x[i];
            p.y[i] = gn[i] - g[i];
        }
        const double sy = dot(p.s, p.y);
        if (sy > 1e-10 * norm2(p.s) * norm2(p.y)) {
            p.rho = 1.0 / sy;
            mem.push_back(std::move(p));
            if (mem.size() > opt.memory) {
                mem.pop_front();
            }
        }
        x = std::move(xn);
        fx = fn;
        g = std::move(gn);
        ++result.n_iterations;
        result.history.push_back(HistoryEntry{iter, fx, x});
        if (fx < result.best_loss) {
            result.best_loss = fx;
            result.best_params = x;
        }
    }
    if (result.history.empty()) {
        // Stopped before the first step: record the starting point so the
        // history always holds the returned optimum.
        result.history.push_back(HistoryEntry{1, fx, x});
    }
    return result;
}

} // namespace qenc
