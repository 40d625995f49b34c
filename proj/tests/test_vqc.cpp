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
#include "qenc/pipeline.hpp"
#include "qenc/simulator.hpp"
#include "qenc/vqc.hpp"

#include <catch_amalgamated.hpp>

#include <bit>
#include <cmath>
#include <numbers>
#include <random>

using namespace qenc;
using Catch::Matchers::WithinAbs;

namespace {

Dataset small_dataset(std::size_t n, std::uint64_t seed) {
    GeneratorConfig c;
    c.n_samples = n;
    c.seed = seed;
    auto d = generate_classification(c);
    const auto p = fit_scaler(d, ScalerKind::MinMax, 0, std::numbers::pi);
    return apply_scaler(p, d);
}

/// Odd-parity probability via the full bound circuit, bit by bit.
double oracle_p1(const VqcModel &m, const std::vector<double> &x) {
    Bindings b;
    for (std::size_t i = 0; i < x.size(); ++i) {
        b["x[" + std::to_string(i) + "]"] = x[i];
    }
    for (std::size_t j = 0; j < m.n_weights(); ++j) {
        b["theta[" + std::to_string(j) + "]"] = m.theta()[j];
    }
    const auto s = run(m.full_circuit().decompose(), b);
    double p1 = 0;
    for (std::size_t i = 0; i < s.dim(); ++i) {
        int parity = 0;
        for (std::size_t q = 0; q < s.n_qubits(); ++q) {
            parity ^= static_cast<int>((i >> q) & 1U);
        }
        if (parity == 1) {
            p1 += std::norm(s[i]);
        }
    }
    return p1;
}

VqcModel random_model(FeatureMapKind kind, std::mt19937_64 &rng) {
    VqcConfig c;
    c.feature_map = kind;
    auto m = VqcModel::build(6, c);
    std::uniform_real_distribution<double> u(0, 2 * std::numbers::pi);
    std::vector<double> theta(m.n_weights());
    for (auto &t : theta) {
        t = u(rng);
    }
    return m.with_theta(theta);
}

} // namespace

TEST_CASE("model shapes", "[vqc]") {
    const auto hybrid = VqcModel::build(6);
    CHECK(hybrid.n_qubits() == 6);
    CHECK(hybrid.n_weights() == 18);
    VqcConfig zz;
    zz.feature_map = FeatureMapKind::ZZ;
    const auto standard = VqcModel::build(6, zz);
    CHECK(standard.n_weights() == 18);
    CHECK(standard.full_circuit().stats().num_parameters == 24);
    const auto hs = hybrid.full_circuit().stats();
    CHECK(hs.depth == 2);
    CHECK(hs.op_counts ==
          std::map<std::string, std::size_t>{{"hybrid_feature_map", 1}, {"real_amplitudes", 1}});
    // Power-of-two feature count takes the amplitude path.
    const auto amp = VqcModel::build(4);
    CHECK(amp.n_qubits() == 2);
    CHECK(amp.n_weights() == 6);
    CHECK_THROWS_AS(hybrid.with_theta({1.0}), Error);
}

TEST_CASE("forward matches the full-circuit parity oracle", "[vqc]") {
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> u(0, std::numbers::pi);
    for (auto kind : {FeatureMapKind::Hybrid, FeatureMapKind::ZZ}) {
        for (int t = 0; t < 5; ++t) {
            const auto m = random_model(kind, rng);
            std::vector<double> x(6);
            for (auto &v : x) {
                v = u(rng);
            }
            const auto p = forward(m, FeatureVector(x));
            CHECK_THAT(p.p0 + p.p1, WithinAbs(1.0, 1e-12));
            CHECK_THAT(p.p1, WithinAbs(oracle_p1(m, x), 1e-12));
        }
    }
}

TEST_CASE("loss is mean binary cross-entropy", "[vqc]") {
    std::mt19937_64 rng(22);
    const auto m = random_model(FeatureMapKind::Hybrid, rng);
    const auto d = small_dataset(20, 3);
    double want = 0;
    for (std::size_t r = 0; r < d.n_samples(); ++r) {
        const auto p = forward(m, FeatureVector(d.features[r]));
        want -= std::log(d.labels[r] == 1 ? p.p1 : p.p0) / 20.0;
    }
    CHECK_THAT(loss(m, d), WithinAbs(want, 1e-12));
    const LossEvaluator ev(m, d);
    CHECK(ev.loss(m.theta()) == loss(m, d));
}

TEST_CASE("parameter-shift gradient matches central differences", "[vqc][property]") {
    std::mt19937_64 rng(23);
    for (auto kind : {FeatureMapKind::Hybrid, FeatureMapKind::ZZ}) {
        for (int t = 0; t < 3; ++t) {
            const auto m = random_model(kind, rng);
            const auto d = small_dataset(4, static_cast<std::uint64_t>(t + 10));
            const LossEvaluator ev(m, d);
            const auto ps = ev.gradient(m.theta());
            const auto fd = finite_difference_gradient(
                [&](std::span<const double> th) { return ev.loss(th); }, m.theta(), 1e-5);
            for (std::size_t k = 0; k < ps.size(); ++k) {
                CHECK_THAT(ps[k], WithinAbs(fd[k], 1e-6));
            }
        }
    }
}

TEST_CASE("initial theta is seeded and in [0, 2 pi)", "[vqc]") {
    const auto a = initial_theta(18, 42);
    CHECK(a == initial_theta(18, 42));
    CHECK(a != initial_theta(18, 43));
    for (double t : a) {
        CHECK((t >= 0 && t < 2 * std::numbers::pi));
    }
}

TEST_CASE("fit records a bounded, well-formed history", "[vqc]") {
    const auto d = small_dataset(40, 5);
    const auto m = VqcModel::build(6);
    for (auto opt : {OptimizerKind::Cobyla, OptimizerKind::Lbfgsb}) {
        FitOptions fo;
        fo.optimizer = opt;
        fo.max_iter = 5;
        const auto r = fit(m, d, fo);
        CHECK(r.optimizer == optimizer_name(opt));
        CHECK(r.feature_map == "hybrid");
        CHECK(!r.loss_history.empty());
        CHECK(r.loss_history.size() <= 5);
        CHECK(r.param_history.size() == r.loss_history.size());
        for (const auto &p : r.param_history) {
            CHECK(p.size() == 18);
        }
        CHECK(r.final_theta.size() == 18);
        CHECK(r.initial_theta == initial_theta(18, 42));
        std::size_t total = 0;
        for (const auto &row : r.confusion) {
            total += row[0] + row[1];
        }
        CHECK(total == 40);
        CHECK_THAT(r.train_accuracy,
                   WithinAbs(static_cast<double>(r.confusion[0][0] + r.confusion[1][1]) / 40, 1e-15));
        // Same inputs, same record.
        const auto again = fit(m, d, fo);
        CHECK(again.loss_history == r.loss_history);
        CHECK(again.final_theta == r.final_theta);
    }
}

TEST_CASE("single-iteration fit keeps one history entry", "[vqc]") {
    const auto d = small_dataset(10, 6);
    FitOptions fo;
    fo.max_iter = 1;
    const auto r = fit(VqcModel::build(6), d, fo);
    CHECK(r.loss_history.size() == 1);
}

TEST_CASE("predictions agree with forward probabilities", "[vqc]") {
    std::mt19937_64 rng(24);
    const auto m = random_model(FeatureMapKind::ZZ, rng);
    const auto d = small_dataset(30, 8);
    const auto c = confusion_matrix(m, d);
    for (std::size_t r = 0; r < d.n_samples(); ++r) {
        const auto p = forward(m, FeatureVector(d.features[r]));
        CHECK(predict(m, FeatureVector(d.features[r])) == (p.p1 > p.p0 ? 1 : 0));
    }
    CHECK_THAT(score(m, d), WithinAbs(static_cast<double>(c[0][0] + c[1][1]) / 30.0, 1e-15));
}

TEST_CASE("model input width is enforced", "[vqc]") {
    const auto m = VqcModel::build(6);
    CHECK_THROWS_AS(forward(m, FeatureVector({1.0, 2.0})), Error);
    CHECK_THROWS_AS(fit(m, Dataset{}, FitOptions{}), Error);
}

TEST_CASE("pipeline splits, scales on train and trains", "[pipeline]") {
    GeneratorConfig gc;
    gc.n_samples = 60;
    const auto d = generate_classification(gc);
    PipelineConfig pc;
    pc.max_iter = 3;
    const auto res = run_pipeline(d, pc);
    CHECK(res.split.train.n_samples() == 48);
    CHECK(res.split.test.n_samples() == 12);
    for (std::size_t f = 0; f < 6; ++f) {
        double lo = 1e9, hi = -1e9;
        for (const auto &r : res.split.train.features) {
            lo = std::min(lo, r[f]);
            hi = std::max(hi, r[f]);
        }
        CHECK_THAT(lo, WithinAbs(0.0, 1e-12));
        CHECK_THAT(hi, WithinAbs(std::numbers::pi, 1e-12));
    }
    REQUIRE(res.model.scaler.has_value());
    CHECK(res.record.loss_history.size() <= 3);
    CHECK(std::vector<double>(res.model.theta().begin(), res.model.theta().end()) ==
          res.record.final_theta);
    PipelineConfig bad;
    bad.max_iter = 0;
    CHECK_THROWS_AS(run_pipeline(d, bad), Error);
}

TEST_CASE("iterations_to_within uses the running best", "[pipeline]") {
    CHECK(iterations_to_within({}, 0.05) == 0);
    CHECK(iterations_to_within({1.0, 0.5, 0.104, 0.1, 0.2}, 0.05) == 3);
    CHECK(iterations_to_within({1.0}, 0.05) == 1);
}
