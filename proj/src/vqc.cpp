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

#include "qenc/vqc.hpp"
#include "qenc/error.hpp"
#include "qenc/simulator.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>

namespace qenc {

namespace {

FeatureVector row_vector(const Dataset &data, std::size_t r) {
    return FeatureVector(data.features[r]);
}

/// The ansatz with theta substituted and, optionally, one op's angle
/// shifted by `delta`.
Circuit bound_ansatz(const Circuit &ansatz, const Bindings &weights,
                     std::optional<std::size_t> shifted_op = std::nullopt, double delta = 0.0) {
    Circuit out(ansatz.n_qubits());
    const auto &ops = ansatz.ops();
    for (std::size_t k = 0; k < ops.size(); ++k) {
        const auto &op = ops[k];
        std::optional<ParamExpr> angle;
        if (op.angle) {
            double v = op.angle->evaluate(weights);
            if (shifted_op && *shifted_op == k) {
                v += delta;
            }
            angle = ParamExpr(v);
        }
        out.append(op.kind, op.targets, angle);
    }
    return out;
}

} // namespace

VqcModel VqcModel::build(std::size_t n_features, const VqcConfig &config) {
    QENC_REQUIRE(n_features >= 1, "model needs at least one feature");
    std::size_t n_qubits = n_features;
    Circuit fmap(1);
    if (config.feature_map == FeatureMapKind::ZZ) {
        fmap = build_zz_feature_map(n_features, config.feature_reps, config.feature_entanglement);
    } else {
        n_qubits = required_qubits(EncodingMethod::Hybrid, n_features);
        fmap = hybrid_uses_amplitude_path(n_features)
                   ? Circuit(n_qubits)
                   : build_hybrid_feature_map(n_qubits, config.phase_scale);
    }
    auto ansatz = build_real_amplitudes(n_qubits, config.ansatz_reps, config.ansatz_entanglement);
    std::vector<double> theta(ansatz.parameters().size(), 0.0);
    return VqcModel(config.feature_map, n_features, std::move(fmap), std::move(ansatz),
                    std::move(theta), config.phase_scale);
}

VqcModel::VqcModel(FeatureMapKind kind, std::size_t n_features, Circuit feature_map,
                   Circuit ansatz, std::vector<double> theta, double phase_scale)
    : kind_(kind), n_features_(n_features), feature_map_(std::move(feature_map)),
      ansatz_(std::move(ansatz)), theta_(std::move(theta)), phase_scale_(phase_scale) {
    QENC_REQUIRE(feature_map_.n_qubits() == ansatz_.n_qubits(),
                 "feature map and ansatz must have equal qubit counts");
    QENC_REQUIRE(theta_.size() == ansatz_.parameters().size(),
                 "theta length " + std::to_string(theta_.size()) + " does not match " +
                     std::to_string(ansatz_.parameters().size()) + " ansatz parameters");
}

VqcModel VqcModel::with_theta(std::vector<double> theta) const {
    VqcModel m(kind_, n_features_, feature_map_, ansatz_, std::move(theta), phase_scale_);
    m.scaler = scaler;
    return m;
}

Circuit VqcModel::full_circuit() const {
    return assemble_classifier_circuit(feature_map_, kind_, ansatz_);
}

StateVector VqcModel::encode(const FeatureVector &x) const {
    QENC_REQUIRE(x.size() == n_features_, "expected " + std::to_string(n_features_) +
                                              " features, got " + std::to_string(x.size()));
    if (kind_ == FeatureMapKind::Hybrid && hybrid_uses_amplitude_path(n_features_)) {
        return run(hybrid_encode(x, phase_scale_));
    }
    Bindings b;
    for (std::size_t i = 0; i < x.size(); ++i) {
        b[indexed_name(kFeatureSymbol, i)] = x[i];
    }
    return run(feature_map_, b);
}

Bindings VqcModel::weight_bindings(std::span<const double> theta) const {
    const auto &names = ansatz_.parameters();
    QENC_REQUIRE(theta.size() == names.size(), "theta length does not match the ansatz");
    Bindings b;
    for (std::size_t j = 0; j < names.size(); ++j) {
        b[names[j]] = theta[j];
    }
    return b;
}

double odd_parity_probability(const StateVector &state) {
    double p1 = 0.0;
    for (std::size_t i = 0; i < state.dim(); ++i) {
        if ((std::popcount(i) & 1) != 0) {
            p1 += std::norm(state[i]);
        }
    }
    return p1;
}

ClassProbabilities forward(const VqcModel &model, const FeatureVector &x) {
    const auto out = run(model.ansatz(), model.weight_bindings(model.theta()), model.encode(x));
    const double p1 = odd_parity_probability(out);
    return {1.0 - p1, p1};
}

LossEvaluator::LossEvaluator(const VqcModel &model, const Dataset &batch)
    : model_(model), labels_(batch.labels) {
    QENC_REQUIRE(batch.n_samples() > 0, "loss needs a nonempty batch");
    encoded_.reserve(batch.n_samples());
    for (std::size_t r = 0; r < batch.n_samples(); ++r) {
        encoded_.push_back(model.encode(row_vector(batch, r)));
    }
    const auto &names = model.ansatz().parameters();
    const auto &ops = model.ansatz().ops();
    for (std::size_t k = 0; k < ops.size(); ++k) {
        if (!ops[k].angle || ops[k].angle->is_constant()) {
            continue;
        }
        const auto &expr = *ops[k].angle;
        QENC_REQUIRE(gate_is_rotation(ops[k].kind) && expr.is_symbol(),
                     "parameter '" + expr.symbols().front() +
                         "' appears outside a plain rotation gate; parameter shift does not apply");
        const auto it = std::find(names.begin(), names.end(), expr.symbol_name());
        shifts_.emplace_back(k, static_cast<std::size_t>(it - names.begin()));
    }
}

std::vector<double> LossEvaluator::odd_probabilities(std::span<const double> theta) const {
    const auto circuit = bound_ansatz(model_.ansatz(), model_.weight_bindings(theta));
    std::vector<double> p1(encoded_.size());
    for (std::size_t s = 0; s < encoded_.size(); ++s) {
        p1[s] = odd_parity_probability(run(circuit, {}, encoded_[s]));
    }
    return p1;
}

double LossEvaluator::loss(std::span<const double> theta) const {
    const auto p1 = odd_probabilities(theta);
    double total = 0.0;
    for (std::size_t s = 0; s < p1.size(); ++s) {
        const double p = labels_[s] == 1 ? p1[s] : 1.0 - p1[s];
        total -= std::log(std::max(p, kProbabilityFloor));
    }
    return total / static_cast<double>(p1.size());
}

std::vector<double> LossEvaluator::gradient(std::span<const double> theta) const {
    const auto weights = model_.weight_bindings(theta);
    const auto p1 = odd_probabilities(theta);
    const auto m = static_cast<double>(encoded_.size());

    // dL/dp1 per sample; zero where the floor is active.
    std::vector<double> dloss_dp1(encoded_.size(), 0.0);
    for (std::size_t s = 0; s < encoded_.size(); ++s) {
        const double p = labels_[s] == 1 ? p1[s] : 1.0 - p1[s];
        if (p > kProbabilityFloor) {
            dloss_dp1[s] = (labels_[s] == 1 ? -1.0 : 1.0) / (p * m);
        }
    }

    std::vector<double> grad(theta.size(), 0.0);
    constexpr double shift = std::numbers::pi / 2;
    for (const auto &[op_index, weight] : shifts_) {
        const auto plus = bound_ansatz(model_.ansatz(), weights, op_index, shift);
        const auto minus = bound_ansatz(model_.ansatz(), weights, op_index, -shift);
        double acc = 0.0;
        for (std::size_t s = 0; s < encoded_.size(); ++s) {
            if (dloss_dp1[s] == 0.0) {
                continue;
            }
            const double dp1 = 0.5 * (odd_parity_probability(run(plus, {}, encoded_[s])) -
                                      odd_parity_probability(run(minus, {}, encoded_[s])));
            acc += dloss_dp1[s] * dp1;
        }
        grad[weight] += acc;
    }
    return grad;
}

double loss(const VqcModel &model, const Dataset &batch) {
    return LossEvaluator(model, batch).loss(model.theta());
}

std::vector<double> parameter_shift_gradient(const VqcModel &model, const Dataset &batch) {
    return LossEvaluator(model, batch).gradient(model.theta());
}

std::string_view optimizer_name(OptimizerKind k) {
    return k == OptimizerKind::Cobyla ? "cobyla" : "lbfgsb";
}

std::optional<OptimizerKind> optimizer_from_name(std::string_view name) {
    if (name == "cobyla") {
        return OptimizerKind::Cobyla;
    }
    if (name == "lbfgsb") {
        return OptimizerKind::Lbfgsb;
    }
    return std::nullopt;
}

std::vector<double> initial_theta(std::size_t n, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<double> theta(n);
    for (auto &t : theta) {
        t = 2.0 * std::numbers::pi * rng.uniform();
    }
    return theta;
}

TrainingRecord fit(const VqcModel &model, const Dataset &train, const FitOptions &options,
                   const Dataset *test) {
    QENC_REQUIRE(options.max_iter >= 1, "max_iter must be at least 1");
    train.validate();
    const LossEvaluator evaluator(model, train);
    const Objective objective = [&](std::span<const double> t) { return evaluator.loss(t); };

    TrainingRecord rec;
    rec.optimizer = std::string(optimizer_name(options.optimizer));
    rec.feature_map = std::string(feature_map_name(model.kind()));
    rec.initial_theta = initial_theta(model.n_weights(), options.seed);

    OptimizerResult res;
    if (options.optimizer == OptimizerKind::Cobyla) {
        auto opt = options.cobyla;
        opt.max_iter = options.max_iter;
        res = minimize_cobyla(objective, rec.initial_theta, opt);
    } else {
        auto opt = options.lbfgsb;
        opt.max_iter = options.max_iter;
        const GradientFn gradient = [&](std::span<const double> t) {
            return evaluator.gradient(t);
        };
        res = minimize_lbfgsb(objective, gradient, rec.initial_theta, opt);
    }

    for (const auto &h : res.history) {
        rec.loss_history.push_back(h.loss);
        rec.param_history.push_back(h.params);
    }
    rec.final_theta = res.best_params;
    rec.final_loss = res.best_loss;
    rec.n_evaluations = res.n_evaluations;
    rec.stop_reason = std::string(stop_reason_name(res.stop_reason));
    rec.failed = res.failed();
    rec.message = res.message;

    const auto trained = model.with_theta(rec.final_theta);
    rec.train_accuracy = score(trained, train);
    if (test != nullptr) {
        rec.test_accuracy = score(trained, *test);
        rec.confusion = confusion_matrix(trained, *test);
    } else {
        rec.confusion = confusion_matrix(trained, train);
    }
    return rec;
}

int predict(const VqcModel &model, const FeatureVector &x) {
    const auto p = forward(model, x);
    return p.p1 > p.p0 ? 1 : 0;
}

Confusion confusion_matrix(const VqcModel &model, const Dataset &data) {
    Confusion c{};
    if (data.n_samples() == 0) {
        return c;
    }
    const LossEvaluator evaluator(model, data);
    const auto p1 = evaluator.odd_probabilities(model.theta());
    for (std::size_t s = 0; s < p1.size(); ++s) {
        const int predicted = p1[s] > 1.0 - p1[s] ? 1 : 0;
        ++c[static_cast<std::size_t>(data.labels[s])][static_cast<std::size_t>(predicted)];
    }
    return c;
}

double score(const VqcModel &model, const Dataset &data) {
    if (data.n_samples() == 0) {
        return 0.0;
    }
    const auto c = confusion_matrix(model, data);
    return static_cast<double>(c[0][0] + c[1][1]) / static_cast<double>(data.n_samples());
}

} // namespace qenc
