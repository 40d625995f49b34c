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

#include <catch_amalgamated.hpp>

#include <cmath>
#include <limits>
#include <sstream>

using namespace qenc;
using Catch::Matchers::WithinAbs;

namespace {

double sphere(std::span<const double> x) {
    double s = 0;
    for (double v : x) {
        s += v * v;
    }
    return s;
}

double rosenbrock(std::span<const double> x) {
    return 100 * std::pow(x[1] - x[0] * x[0], 2) + std::pow(1 - x[0], 2);
}

std::vector<double> rosenbrock_grad(std::span<const double> x) {
    return {-400 * x[0] * (x[1] - x[0] * x[0]) - 2 * (1 - x[0]), 200 * (x[1] - x[0] * x[0])};
}

} // namespace

TEST_CASE("cobyla minimizes the sphere", "[cobyla]") {
    const auto r = minimize_cobyla(sphere, {1, 1, 1}, {100, 1.0, 1e-4});
    CHECK(r.best_loss < 1e-4);
    CHECK(r.n_iterations <= 100);
    CHECK(r.history.size() <= 100);
    CHECK_FALSE(r.failed());
}

TEST_CASE("cobyla starts with the rho_begin simplex", "[cobyla]") {
    std::vector<std::vector<double>> seen;
    const Objective f = [&](std::span<const double> x) {
        seen.emplace_back(x.begin(), x.end());
        return sphere(x);
    };
    (void)minimize_cobyla(f, {0.5, -0.5}, {10, 0.25, 1e-6});
    REQUIRE(seen.size() >= 3);
    CHECK(seen[0] == std::vector<double>{0.5, -0.5});
    CHECK(seen[1] == std::vector<double>{0.75, -0.5});
    CHECK(seen[2] == std::vector<double>{0.5, -0.25});
}

TEST_CASE("cobyla history records every evaluation", "[cobyla]") {
    std::size_t calls = 0;
    const Objective f = [&](std::span<const double> x) {
        ++calls;
        return rosenbrock(x);
    };
    const auto r = minimize_cobyla(f, {-1.2, 1.0}, {60, 0.5, 1e-6});
    CHECK(r.n_evaluations == calls);
    CHECK(r.history.size() == calls);
    CHECK(r.history.size() <= 60);
    for (std::size_t i = 0; i < r.history.size(); ++i) {
        CHECK(r.history[i].iteration == i + 1);
        CHECK(r.history[i].params.size() == 2);
    }
    const auto best = best_so_far(r.history);
    for (std::size_t i = 1; i < best.size(); ++i) {
        CHECK(best[i] <= best[i - 1]);
    }
    CHECK(best.back() == r.best_loss);
    CHECK(rosenbrock(r.best_params) == r.best_loss);
}

TEST_CASE("cobyla stops at rho_end on an easy problem", "[cobyla]") {
    const auto r = minimize_cobyla(sphere, {0.3, 0.2}, {10000, 0.5, 1e-6});
    CHECK(r.stop_reason == StopReason::TrustRegionConverged);
    CHECK(r.best_loss < 1e-10);
}

TEST_CASE("cobyla reports non-finite objectives without throwing", "[cobyla]") {
    const Objective f = [](std::span<const double> x) {
        return x[0] > 1.5 ? std::numeric_limits<double>::quiet_NaN() : sphere(x);
    };
    const auto r = minimize_cobyla(f, {1.0}, {50, 1.0, 1e-6});
    CHECK(r.failed());
    CHECK(r.stop_reason == StopReason::NonFiniteValue);
    CHECK_FALSE(r.message.empty());
    CHECK(r.best_loss == 1.0);
}

TEST_CASE("cobyla is deterministic", "[cobyla]") {
    const auto a = minimize_cobyla(rosenbrock, {-1.2, 1.0}, {80, 0.5, 1e-6});
    const auto b = minimize_cobyla(rosenbrock, {-1.2, 1.0}, {80, 0.5, 1e-6});
    CHECK(a.best_params == b.best_params);
    CHECK(a.history.size() == b.history.size());
}

TEST_CASE("cobyla option validation", "[cobyla]") {
    CHECK_THROWS_AS(minimize_cobyla(sphere, {}, {}), Error);
    CHECK_THROWS_AS(minimize_cobyla(sphere, {1.0}, {0, 1.0, 1e-4}), Error);
    CHECK_THROWS_AS(minimize_cobyla(sphere, {1.0}, {10, 1e-5, 1e-4}), Error);
}

TEST_CASE("l-bfgs-b solves rosenbrock", "[lbfgsb]") {
    LbfgsbOptions opt;
    opt.max_iter = 200;
    const auto r = minimize_lbfgsb(rosenbrock, rosenbrock_grad, {-1.2, 1.0}, opt);
    CHECK(r.best_loss < 1e-6);
    CHECK(r.n_iterations <= 200);
    CHECK_THAT(r.best_params[0], WithinAbs(1.0, 1e-3));
}

TEST_CASE("l-bfgs-b respects box bounds", "[lbfgsb]") {
    const Objective f = [](std::span<const double> x) {
        return std::pow(x[0] - 3, 2) + std::pow(x[1] + 2, 2);
    };
    const GradientFn g = [](std::span<const double> x) {
        return std::vector<double>{2 * (x[0] - 3), 2 * (x[1] + 2)};
    };
    LbfgsbOptions opt;
    opt.bounds = std::vector<Bound>{{0, 1}, {-1, 1}};
    const auto r = minimize_lbfgsb(f, g, {0.5, 0.5}, opt);
    CHECK_THAT(r.best_params[0], WithinAbs(1.0, 1e-12));
    CHECK_THAT(r.best_params[1], WithinAbs(-1.0, 1e-12));
    for (const auto &h : r.history) {
        CHECK(h.params[0] >= 0);
        CHECK(h.params[0] <= 1);
    }
    CHECK(r.stop_reason == StopReason::GradientConverged);
}

TEST_CASE("l-bfgs-b history has one entry per accepted step", "[lbfgsb]") {
    LbfgsbOptions opt;
    opt.max_iter = 5;
    const auto r = minimize_lbfgsb(rosenbrock, rosenbrock_grad, {-1.2, 1.0}, opt);
    CHECK(r.history.size() == 5);
    CHECK(r.stop_reason == StopReason::MaxIterations);
    for (std::size_t i = 1; i < r.history.size(); ++i) {
        CHECK(r.history[i].loss <= r.history[i - 1].loss);
    }
}

TEST_CASE("l-bfgs-b at a stationary start keeps one history entry", "[lbfgsb]") {
    const GradientFn g = [](std::span<const double> x) {
        return std::vector<double>{2 * x[0], 2 * x[1]};
    };
    const auto r = minimize_lbfgsb(sphere, g, {0.0, 0.0}, {});
    CHECK(r.stop_reason == StopReason::GradientConverged);
    REQUIRE(r.history.size() == 1);
    CHECK(r.history[0].loss == 0.0);
}

TEST_CASE("l-bfgs-b reports non-finite gradients", "[lbfgsb]") {
    const GradientFn g = [](std::span<const double>) {
        return std::vector<double>{std::numeric_limits<double>::infinity()};
    };
    const auto r = minimize_lbfgsb(sphere, g, {1.0}, {});
    CHECK(r.failed());
}

TEST_CASE("central differences match analytic gradients", "[optimize]") {
    const std::vector<double> x = {-0.7, 0.4};
    const auto fd = finite_difference_gradient(rosenbrock, x, 1e-6);
    const auto an = rosenbrock_grad(x);
    CHECK_THAT(fd[0], WithinAbs(an[0], 1e-5));
    CHECK_THAT(fd[1], WithinAbs(an[1], 1e-5));
}

TEST_CASE("history csv layout", "[optimize]") {
    std::ostringstream out;
    write_history_csv(out, {{1, 0.5, {0.1, 0.2}}, {2, 0.25, {1.0 / 3, -2}}});
    CHECK(out.str() == "iteration,loss,theta_0,theta_1\n1,0.5,0.1,0.2\n2,0.25,0.3333333333,-2\n");
}
