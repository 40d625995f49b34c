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

#include "qenc/serialize.hpp"
#include "qenc/error.hpp"
#include "qenc/numfmt.hpp"

#include <fstream>
#include <sstream>

namespace qenc {

namespace {

template <typename T> T field(const Json &doc, const char *key) {
    QENC_REQUIRE(doc.is_object() && doc.contains(key),
                 std::string("missing field '") + key + "'");
    try {
        return doc.at(key).get<T>();
    } catch (const nlohmann::json::exception &e) {
        throw Error(std::string("field '") + key + "': " + e.what());
    }
}

Json confusion_to_json(const Confusion &c) {
    return Json::array({Json::array({c[0][0], c[0][1]}), Json::array({c[1][0], c[1][1]})});
}

} // namespace

Json number(double v) { return round10(v); }

Json numbers(std::span<const double> values) {
    Json out = Json::array();
    for (double v : values) {
        out.push_back(round10(v));
    }
    return out;
}

Json circuit_to_json(const Circuit &circuit) {
    Json doc;
    doc["n_qubits"] = circuit.n_qubits();
    Json ops = Json::array();
    for (const auto &op : circuit.ops()) {
        Json o;
        o["kind"] = std::string(gate_name(op.kind));
        o["targets"] = op.targets;
        if (op.angle) {
            if (op.angle->is_constant()) {
                o["angle"] = round10(op.angle->constant_value());
            } else {
                o["param"] = op.angle->to_string();
            }
        }
        ops.push_back(std::move(o));
    }
    doc["ops"] = std::move(ops);
    doc["params"] = circuit.parameters();
    if (!circuit.blocks().empty()) {
        Json blocks = Json::array();
        for (const auto &b : circuit.blocks()) {
            blocks.push_back({{"name", b.name}, {"begin", b.begin}, {"end", b.end}});
        }
        doc["blocks"] = std::move(blocks);
    }
    return doc;
}

Circuit circuit_from_json(const Json &doc) {
    Circuit c(field<std::size_t>(doc, "n_qubits"));
    const auto &ops = doc.at("ops");
    QENC_REQUIRE(ops.is_array(), "field 'ops' must be an array");
    for (const auto &o : ops) {
        const auto name = field<std::string>(o, "kind");
        const auto kind = gate_from_name(name);
        QENC_REQUIRE(kind.has_value(), "unknown gate kind '" + name + "'");
        std::optional<ParamExpr> angle;
        if (o.contains("angle")) {
            angle = ParamExpr(field<double>(o, "angle"));
        } else if (o.contains("param")) {
            angle = ParamExpr::parse(field<std::string>(o, "param"));
        }
        c.append(*kind, field<std::vector<std::size_t>>(o, "targets"), angle);
    }
    if (doc.contains("blocks")) {
        for (const auto &b : doc.at("blocks")) {
            c.label_block(field<std::string>(b, "name"), field<std::size_t>(b, "begin"),
                          field<std::size_t>(b, "end"));
        }
    }
    if (doc.contains("params")) {
        QENC_REQUIRE(field<std::vector<std::string>>(doc, "params") == c.parameters(),
                     "field 'params' does not match the parameters referenced by 'ops'");
    }
    return c;
}

Json state_to_json(const StateVector &state) {
    Json out = Json::array();
    for (const auto &a : state.amplitudes()) {
        out.push_back(Json::array({round10(a.real()), round10(a.imag())}));
    }
    return out;
}

StateVector state_from_json(const Json &doc) {
    QENC_REQUIRE(doc.is_array(), "state must be an array of [re, im] pairs");
    std::vector<Complex> amps;
    amps.reserve(doc.size());
    for (const auto &pair : doc) {
        QENC_REQUIRE(pair.is_array() && pair.size() == 2 && pair[0].is_number() &&
                         pair[1].is_number(),
                     "state entries must be [re, im] number pairs");
        amps.emplace_back(pair[0].get<double>(), pair[1].get<double>());
    }
    return StateVector(std::move(amps));
}

Json stats_to_json(const CircuitStats &stats) {
    Json doc;
    doc["depth"] = stats.depth;
    doc["width"] = stats.width;
    doc["num_parameters"] = stats.num_parameters;
    Json counts = Json::object();
    for (const auto &[k, v] : stats.op_counts) {
        counts[k] = v;
    }
    doc["op_counts"] = std::move(counts);
    return doc;
}

Json record_to_json(const TrainingRecord &r) {
    Json doc;
    doc["optimizer"] = r.optimizer;
    doc["feature_map"] = r.feature_map;
    doc["loss_history"] = numbers(r.loss_history);
    Json params = Json::array();
    for (const auto &p : r.param_history) {
        params.push_back(numbers(p));
    }
    doc["param_history"] = std::move(params);
    doc["initial_theta"] = numbers(r.initial_theta);
    doc["final_theta"] = numbers(r.final_theta);
    doc["final_loss"] = number(r.final_loss);
    doc["train_accuracy"] = number(r.train_accuracy);
    doc["test_accuracy"] = number(r.test_accuracy);
    doc["confusion"] = confusion_to_json(r.confusion);
    doc["n_evaluations"] = r.n_evaluations;
    doc["stop_reason"] = r.stop_reason;
    doc["failed"] = r.failed;
    doc["message"] = r.message;
    return doc;
}

TrainingRecord record_from_json(const Json &doc) {
    TrainingRecord r;
    r.optimizer = field<std::string>(doc, "optimizer");
    r.loss_history = field<std::vector<double>>(doc, "loss_history");
    r.param_history = field<std::vector<std::vector<double>>>(doc, "param_history");
    r.final_theta = field<std::vector<double>>(doc, "final_theta");
    r.train_accuracy = field<double>(doc, "train_accuracy");
    r.test_accuracy = field<double>(doc, "test_accuracy");
    const auto conf = field<std::vector<std::vector<std::size_t>>>(doc, "confusion");
    QENC_REQUIRE(conf.size() == 2 && conf[0].size() == 2 && conf[1].size() == 2,
                 "field 'confusion' must be 2x2");
    r.confusion = {{{conf[0][0], conf[0][1]}, {conf[1][0], conf[1][1]}}};
    QENC_REQUIRE(r.loss_history.size() == r.param_history.size(),
                 "loss_history and param_history differ in length");
    // Optional extras.
    if (doc.contains("feature_map")) {
        r.feature_map = field<std::string>(doc, "feature_map");
    }
    if (doc.contains("initial_theta")) {
        r.initial_theta = field<std::vector<double>>(doc, "initial_theta");
    }
    if (doc.contains("final_loss")) {
        r.final_loss = field<double>(doc, "final_loss");
    }
    if (doc.contains("n_evaluations")) {
        r.n_evaluations = field<std::size_t>(doc, "n_evaluations");
    }
    if (doc.contains("stop_reason")) {
        r.stop_reason = field<std::string>(doc, "stop_reason");
    }
    if (doc.contains("failed")) {
        r.failed = field<bool>(doc, "failed");
    }
    if (doc.contains("message")) {
        r.message = field<std::string>(doc, "message");
    }
    return r;
}

std::string dump(const Json &doc) { return doc.dump(2) + "\n"; }

void write_text(const std::filesystem::path &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary);
    QENC_REQUIRE(out.good(), "cannot open '" + path.string() + "' for writing");
    out << text;
    out.close();
    QENC_REQUIRE(!out.fail(), "write to '" + path.string() + "' failed");
}

std::string read_text(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    QENC_REQUIRE(in.good(), "cannot open '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace qenc
