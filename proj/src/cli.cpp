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

#include "qenc/cli.hpp"
#include "qenc/data.hpp"
#include "qenc/diagnostics.hpp"
#include "qenc/encoders.hpp"
#include "qenc/error.hpp"
#include "qenc/numfmt.hpp"
#include "qenc/optimize.hpp"
#include "qenc/pipeline.hpp"
#include "qenc/simulator.hpp"
#include "qenc/svg_plot.hpp"

#include <CLI11.hpp>
#include <openssl/evp.h>

#include <array>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <future>
#include <iomanip>
#include <ostream>
#include <set>
#include <sstream>

namespace qenc::cli {

namespace fs = std::filesystem;

namespace {

/// Flag-level problems; mapped to exit code 1.
class UsageError : public Error {
  public:
    using Error::Error;
};

template <typename F> auto as_usage(F &&f) -> decltype(f()) {
    try {
        return f();
    } catch (const UsageError &) {
        throw;
    } catch (const Error &e) {
        throw UsageError(e.what());
    }
}

std::vector<double> parse_values(const std::string &text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto b = item.find_first_not_of(" \t");
        const auto e = item.find_last_not_of(" \t");
        if (b == std::string::npos) {
            throw UsageError("empty entry in --values");
        }
        const auto trimmed = item.substr(b, e - b + 1);
        double v = 0.0;
        const auto res = std::from_chars(trimmed.data(), trimmed.data() + trimmed.size(), v);
        if (res.ec != std::errc() || res.ptr != trimmed.data() + trimmed.size()) {
            throw UsageError("--values entry '" + trimmed + "' is not a number");
        }
        out.push_back(v);
    }
    if (out.empty()) {
        throw UsageError("--values is empty");
    }
    return out;
}

std::set<std::size_t> parse_qubits(const std::string &text) {
    std::set<std::size_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t q = 0;
        const auto res = std::from_chars(item.data(), item.data() + item.size(), q);
        if (res.ec != std::errc() || res.ptr != item.data() + item.size()) {
            throw UsageError("--keep entry '" + item + "' is not a qubit index");
        }
        out.insert(q);
    }
    return out;
}

std::string sig4(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", std::abs(v) < 5e-5 ? 0.0 : v);
    return buf;
}

fs::path resolve(const fs::path &dir, const fs::path &p) { return p.is_absolute() ? p : dir / p; }

/// Collects what a command read and wrote for the manifest.
struct Manifest {
    std::string command;
    Json config = Json::object();
    Json seeds = Json::object();
    std::vector<fs::path> inputs;
    std::vector<fs::path> outputs;

    void write_output(const fs::path &path, const std::string &text) {
        write_text(path, text);
        outputs.push_back(path);
    }

    fs::path finish(const fs::path &out_dir, double seconds) const {
        Json doc;
        doc["command"] = command;
        doc["config"] = config;
        doc["seeds"] = seeds;
        auto list = [](const std::vector<fs::path> &paths) {
            Json arr = Json::array();
            for (const auto &p : paths) {
                arr.push_back({{"path", p.generic_string()}, {"sha256", sha256_file(p)}});
            }
            return arr;
        };
        doc["inputs"] = list(inputs);
        doc["outputs"] = list(outputs);
        doc["duration_seconds"] = round10(seconds);
        const auto path = out_dir / (command + ".manifest.json");
        write_text(path, dump(doc));
        return path;
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void ensure_dir(const fs::path &dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    QENC_REQUIRE(!ec, "cannot create output directory '" + dir.string() + "': " + ec.message());
}

// ---------------------------------------------------------------- gen-data

struct GenDataFlags {
    GeneratorConfig config;
    std::string out_dir = ".";
    std::string output = "classification.csv";
};

void cmd_gen_data(const GenDataFlags &f, std::ostream &out) {
    const auto t0 = std::chrono::steady_clock::now();
    as_usage([&] { f.config.validate(); });
    const fs::path dir(f.out_dir);
    ensure_dir(dir);
    const auto data = generate_classification(f.config);

    Manifest m;
    m.command = "gen-data";
    m.config = {{"n_samples", f.config.n_samples},
                {"n_features", f.config.n_features},
                {"n_informative", f.config.n_informative},
                {"n_redundant", f.config.n_redundant},
                {"n_clusters_per_class", f.config.n_clusters_per_class},
                {"class_sep", round10(f.config.class_sep)},
                {"shuffle", f.config.shuffle},
                {"out_dir", f.out_dir},
                {"output", f.output}};
    m.seeds = {{"generator", f.config.seed}};
    std::ostringstream csv;
    write_csv(data, csv);
    const auto path = resolve(dir, f.output);
    m.write_output(path, csv.str());
    out << "wrote " << path.generic_string() << " (" << data.n_samples() << " rows, "
        << data.n_features() << " features)\n";
    m.finish(dir, seconds_since(t0));
}

// ---------------------------------------------------------------- encode / diagnose

struct InputFlags {
    std::string values;
    std::string data;
    std::size_t row = 0;
};

FeatureVector load_input(const InputFlags &f, Manifest &m) {
    if (!f.values.empty()) {
        return as_usage([&] { return FeatureVector(parse_values(f.values)); });
    }
    if (f.data.empty()) {
        throw UsageError("one of --values or --data is required");
    }
    const auto data = read_csv(fs::path(f.data));
    m.inputs.emplace_back(f.data);
    QENC_REQUIRE(f.row < data.n_samples(), "--row " + std::to_string(f.row) + " out of range (" +
                                               std::to_string(data.n_samples()) + " rows)");
    return FeatureVector(data.features[f.row]);
}

Json bloch_json(const StateVector &state) {
    Json arr = Json::array();
    for (std::size_t q = 0; q < state.n_qubits(); ++q) {
        const auto b = bloch_vector(state, q);
        arr.push_back(numbers(b));
    }
    return arr;
}

Json bipartition_json(const StateVector &state, const std::set<std::size_t> &keep) {
    const auto rho = partial_trace(state, keep);
    const auto schmidt = schmidt_decompose(state, keep);
    Json doc;
    doc["subsystem"] = std::vector<std::size_t>(keep.begin(), keep.end());
    doc["purity"] = number(purity(rho));
    doc["entropy_bits"] = number(von_neumann_entropy(rho));
    doc["eigenvalues"] = numbers(rho.eigenvalues());
    doc["schmidt_coefficients"] = numbers(schmidt.coefficients);
    return doc;
}

/// One bipartition per single qubit, or only `keep` when given.
Json diagnostics_json(const StateVector &state, const std::optional<std::set<std::size_t>> &keep) {
    Json doc;
    doc["n_qubits"] = state.n_qubits();
    Json parts = Json::array();
    if (keep) {
        parts.push_back(bipartition_json(state, *keep));
    } else if (state.n_qubits() > 1) {
        for (std::size_t q = 0; q < state.n_qubits(); ++q) {
            parts.push_back(bipartition_json(state, {q}));
        }
    }
    doc["bipartitions"] = std::move(parts);
    doc["bloch_vectors"] = bloch_json(state);
    return doc;
}

void print_state(const StateVector &state, std::ostream &out) {
    out << "state (nonzero amplitudes):\n";
    for (std::size_t i = 0; i < state.dim(); ++i) {
        const auto a = state[i];
        if (std::abs(a) < 1e-12) {
            continue;
        }
        out << "  " << state.ket(i) << "  " << sig4(a.real()) << (a.imag() < 0 ? " - " : " + ")
            << sig4(std::abs(a.imag())) << "i   p=" << sig4(std::norm(a)) << '\n';
    }
}

void print_diagnostics(const Json &doc, std::ostream &out) {
    for (const auto &p : doc["bipartitions"]) {
        out << "subsystem " << p["subsystem"].dump() << ": purity=" << sig4(p["purity"].get<double>())
            << " entropy=" << sig4(p["entropy_bits"].get<double>()) << " bits schmidt=";
        const auto &s = p["schmidt_coefficients"];
        for (std::size_t k = 0; k < s.size(); ++k) {
            out << (k ? "," : "") << sig4(s[k].get<double>());
        }
        out << '\n';
    }
}

struct EncodeFlags {
    InputFlags input;
    std::string method = "hybrid";
    double phase_scale = kHybridPhaseScale;
    double threshold = 0.0;
    bool diagnostics = false;
    std::string out_dir = "out";
};

Circuit encode_circuit(EncodingMethod method, const FeatureVector &x, double phase_scale,
                       double threshold) {
    switch (method) {
    case EncodingMethod::Basis:
        return basis_encode(x, threshold);
    case EncodingMethod::Hybrid:
        return hybrid_encode(x, phase_scale);
    default:
        return encode(method, x);
    }
}

void cmd_encode(const EncodeFlags &f, std::ostream &out) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto method = encoding_from_name(f.method);
    if (!method) {
        throw UsageError("unknown method '" + f.method + "'");
    }
    const fs::path dir(f.out_dir);
    Manifest m;
    m.command = "encode";
    m.config = {{"method", f.method},       {"values", f.input.values},
                {"data", f.input.data},     {"row", f.input.row},
                {"phase_scale", round10(f.phase_scale)}, {"threshold", round10(f.threshold)},
                {"diagnostics", f.diagnostics}, {"out_dir", f.out_dir}};
    const auto x = load_input(f.input, m);
    const auto circuit = encode_circuit(*method, x, f.phase_scale, f.threshold);
    const auto state = run(circuit);
    const auto stats = circuit.stats();

    Json doc;
    doc["method"] = f.method;
    doc["features"] = numbers(x.values());
    doc["n_qubits"] = state.n_qubits();
    doc["stats"] = stats_to_json(stats);
    doc["circuit"] = circuit_to_json(circuit);
    doc["state"] = state_to_json(state);
    doc["probabilities"] = numbers(probabilities(state));
    doc["bloch_vectors"] = bloch_json(state);
    if (f.diagnostics) {
        doc["diagnostics"] = diagnostics_json(state, std::nullopt);
    }

    out << "method: " << f.method << "\nqubits: " << state.n_qubits() << "\ndepth: " << stats.depth
        << "\nop counts:";
    for (const auto &[k, v] : stats.op_counts) {
        out << ' ' << k << ':' << v;
    }
    out << '\n';
    print_state(state, out);
    out << "bloch vectors (x, y, z):\n";
    for (std::size_t q = 0; q < state.n_qubits(); ++q) {
        const auto b = bloch_vector(state, q);
        out << "  q" << q << ": " << sig4(b[0]) << ", " << sig4(b[1]) << ", " << sig4(b[2]) << '\n';
    }
    if (f.diagnostics) {
        print_diagnostics(doc["diagnostics"], out);
    }

    ensure_dir(dir);
    m.write_output(dir / "encode.json", dump(doc));
    m.finish(dir, seconds_since(t0));
}

struct DiagnoseFlags {
    InputFlags input;
    std::string method = "amplitude";
    std::string state;
    std::string keep;
    double phase_scale = kHybridPhaseScale;
    std::string out_dir = "out";
};

void cmd_diagnose(const DiagnoseFlags &f, std::ostream &out) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto method = encoding_from_name(f.method);
    if (!method) {
        throw UsageError("unknown method '" + f.method + "'");
    }
    std::optional<std::set<std::size_t>> keep;
    if (!f.keep.empty()) {
        keep = parse_qubits(f.keep);
    }
    const fs::path dir(f.out_dir);
    Manifest m;
    m.command = "diagnose";
    m.config = {{"method", f.method},  {"values", f.input.values}, {"data", f.input.data},
                {"row", f.input.row},  {"state", f.state},         {"keep", f.keep},
                {"phase_scale", round10(f.phase_scale)}, {"out_dir", f.out_dir}};

    std::optional<StateVector> state;
    if (!f.state.empty()) {
        state = state_from_json(Json::parse(read_text(f.state)));
        m.inputs.emplace_back(f.state);
    } else {
        const auto x = load_input(f.input, m);
        state = run(encode_circuit(*method, x, f.phase_scale, 0.0));
    }
    if (keep) {
        for (auto q : *keep) {
            if (q >= state->n_qubits()) {
                throw UsageError("--keep qubit " + std::to_string(q) + " out of range");
            }
        }
        if (keep->empty() || keep->size() == state->n_qubits()) {
            throw UsageError("--keep must name a nonempty proper subset of the qubits");
        }
    }
    const auto doc = diagnostics_json(*state, keep);
    print_diagnostics(doc, out);
    ensure_dir(dir);
    m.write_output(dir / "diagnose.json", dump(doc));
    m.finish(dir, seconds_since(t0));
}

// ---------------------------------------------------------------- train / compare

struct TrainFlags {
    std::string data;
    std::string feature_map = "hybrid";
    std::string optimizer = "cobyla";
    std::size_t max_iter = 100;
    std::uint64_t seed = 42;
    std::uint64_t split_seed = 42;
    double test_fraction = 0.2;
    std::size_t reps = 2;
    std::string entanglement = "linear";
    double phase_scale = kHybridPhaseScale;
    double rho_begin = 1.0;
    double rho_end = 1e-4;
    std::string out_dir = "out";
    std::size_t jobs = 4; ///< compare only
};

PipelineConfig pipeline_config(const TrainFlags &f) {
    PipelineConfig c;
    c.feature_map = *feature_map_from_name(f.feature_map);
    c.optimizer = *optimizer_from_name(f.optimizer);
    c.max_iter = f.max_iter;
    c.seed = f.seed;
    c.split_seed = f.split_seed;
    c.test_fraction = f.test_fraction;
    c.reps = f.reps;
    c.entanglement = *entanglement_from_name(f.entanglement);
    c.phase_scale = f.phase_scale;
    c.cobyla.rho_begin = f.rho_begin;
    c.cobyla.rho_end = f.rho_end;
    as_usage([&] { c.validate(); });
    return c;
}

Json train_config_json(const TrainFlags &f, bool compare) {
    Json c;
    c["data"] = f.data;
    if (!compare) {
        c["feature_map"] = f.feature_map;
        c["optimizer"] = f.optimizer;
    }
    c["max_iter"] = f.max_iter;
    c["test_fraction"] = round10(f.test_fraction);
    c["reps"] = f.reps;
    c["entanglement"] = f.entanglement;
    c["phase_scale"] = round10(f.phase_scale);
    c["rho_begin"] = round10(f.rho_begin);
    c["rho_end"] = round10(f.rho_end);
    c["scaling"] = "minmax [0, pi] fitted on the training split";
    c["out_dir"] = f.out_dir;
    if (compare) {
        c["jobs"] = f.jobs;
    }
    return c;
}

std::string run_stem(const TrainingRecord &r) { return "train_" + r.feature_map + "_" + r.optimizer; }

/// Record JSON, circuit JSON, history CSV and both plots for one run.
void write_run_artifacts(const PipelineResult &res, const fs::path &dir, Manifest &m) {
    const auto &r = res.record;
    const auto stem = run_stem(r);
    m.write_output(dir / (stem + ".json"), dump(record_to_json(r)));

    const auto circuit = res.model.full_circuit();
    Json cdoc;
    cdoc["stats"] = stats_to_json(circuit.stats());
    cdoc["decomposed_stats"] = stats_to_json(circuit.decompose().stats());
    cdoc["circuit"] = circuit_to_json(circuit);
    m.write_output(dir / (stem + "_circuit.json"), dump(cdoc));

    std::ostringstream csv;
    write_history_csv(csv, record_history(r));
    m.write_output(dir / (stem + "_history.csv"), csv.str());

    std::vector<double> iters(r.loss_history.size());
    for (std::size_t i = 0; i < iters.size(); ++i) {
        iters[i] = static_cast<double>(i + 1);
    }
    const std::string title = r.feature_map + " / " + r.optimizer;
    PlotSpec loss_spec{title + ": loss", "iteration", "cross-entropy loss"};
    loss_spec.legend = false;
    m.write_output(dir / (stem + "_loss.svg"),
                   render_line_plot(loss_spec, {{"loss", iters, r.loss_history}}));

    std::vector<PlotSeries> params;
    const std::size_t d = r.param_history.empty() ? 0 : r.param_history.front().size();
    for (std::size_t k = 0; k < d; ++k) {
        PlotSeries s{"theta[" + std::to_string(k) + "]", iters, {}};
        for (const auto &p : r.param_history) {
            s.y.push_back(p[k]);
        }
        params.push_back(std::move(s));
    }
    PlotSpec param_spec{title + ": parameters", "iteration", "value (rad)"};
    param_spec.height = std::max(440, 60 + 16 * static_cast<int>(d));
    m.write_output(dir / (stem + "_params.svg"), render_line_plot(param_spec, params));
}

void print_theta(const std::vector<double> &theta, std::ostream &out) {
    for (std::size_t k = 0; k < theta.size(); ++k) {
        out << "  theta[" << k << "] = " << sig4(theta[k]) << '\n';
    }
}

void cmd_train(const TrainFlags &f, std::ostream &out) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto config = pipeline_config(f);
    const fs::path dir(f.out_dir);
    Manifest m;
    m.command = "train";
    m.config = train_config_json(f, false);
    m.seeds = {{"theta_init", f.seed}, {"split", f.split_seed}};
    const auto data = read_csv(fs::path(f.data));
    m.inputs.emplace_back(f.data);

    const auto res = run_pipeline(data, config);
    const auto &r = res.record;
    ensure_dir(dir);
    write_run_artifacts(res, dir, m);

    out << "feature map: " << r.feature_map << "\noptimizer: " << r.optimizer
        << "\nhistory entries: " << r.loss_history.size() << "\nevaluations: " << r.n_evaluations
        << "\nstop: " << r.stop_reason << "\nfinal loss: " << sig4(r.final_loss)
        << "\ntrain accuracy: " << sig4(r.train_accuracy)
        << "\ntest accuracy: " << sig4(r.test_accuracy) << "\nconfusion (rows true): ["
        << r.confusion[0][0] << ", " << r.confusion[0][1] << "; " << r.confusion[1][0] << ", "
        << r.confusion[1][1] << "]\nfinal parameters:\n";
    print_theta(r.final_theta, out);
    if (r.failed) {
        out << "warning: " << r.message << '\n';
    }
    m.finish(dir, seconds_since(t0));
}

void cmd_compare(const TrainFlags &f, std::ostream &out) {
    const auto t0 = std::chrono::steady_clock::now();
    auto base = f;
    base.feature_map = "hybrid";
    base.optimizer = "cobyla";
    (void)pipeline_config(base);
    if (f.jobs < 1) {
        throw UsageError("--jobs must be at least 1");
    }
    const fs::path dir(f.out_dir);
    Manifest m;
    m.command = "compare";
    m.config = train_config_json(f, true);
    m.seeds = {{"theta_init", f.seed}, {"split", f.split_seed}};
    const auto data = read_csv(fs::path(f.data));
    m.inputs.emplace_back(f.data);

    std::vector<PipelineConfig> cells;
    for (const char *fm : {"hybrid", "zz"}) {
        for (const char *opt : {"cobyla", "lbfgsb"}) {
            auto cf = f;
            cf.feature_map = fm;
            cf.optimizer = opt;
            cells.push_back(pipeline_config(cf));
        }
    }
    // Cells are independent pure computations, so running them concurrently
    // does not change any result.
    std::vector<PipelineResult> results;
    for (std::size_t start = 0; start < cells.size(); start += f.jobs) {
        std::vector<std::future<PipelineResult>> batch;
        for (std::size_t i = start; i < std::min(cells.size(), start + f.jobs); ++i) {
            batch.push_back(std::async(std::launch::async,
                                       [&data, &cells, i] { return run_pipeline(data, cells[i]); }));
        }
        for (auto &fut : batch) {
            results.push_back(fut.get());
        }
    }

    ensure_dir(dir);
    std::vector<ComparisonRow> rows;
    std::vector<PlotSeries> curves;
    for (const auto &res : results) {
        write_run_artifacts(res, dir, m);
        const auto &r = res.record;
        rows.push_back({r.feature_map, r.optimizer, r.train_accuracy, r.test_accuracy, r.final_loss,
                        r.n_evaluations, r.final_theta,
                        reference_accuracy(r.feature_map, r.optimizer)});
        PlotSeries s{r.feature_map + " / " + r.optimizer, {}, best_so_far(record_history(r))};
        for (std::size_t i = 0; i < s.y.size(); ++i) {
            s.x.push_back(static_cast<double>(i + 1));
        }
        curves.push_back(std::move(s));
    }
    const auto table = comparison_table(rows);
    m.write_output(dir / "compare.json", dump(comparison_to_json(rows)));
    m.write_output(dir / "compare.txt", table);
    PlotSpec spec{"best loss so far", "iteration", "cross-entropy loss"};
    spec.width = 820;
    m.write_output(dir / "compare_loss.svg", render_line_plot(spec, curves));
    out << table;
    m.finish(dir, seconds_since(t0));
}

void add_input_flags(CLI::App *cmd, InputFlags &f) {
    auto *values = cmd->add_option("--values", f.values, "comma-separated feature values");
    auto *data = cmd->add_option("--data", f.data, "CSV file to take one row from");
    values->excludes(data);
    cmd->add_option("--row", f.row, "row index into --data")->capture_default_str();
}

} // namespace

std::string sha256_file(const fs::path &path) {
    const auto bytes = read_text(path);
    std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
    unsigned int len = 0;
    QENC_REQUIRE(EVP_Digest(bytes.data(), bytes.size(), md.data(), &len, EVP_sha256(), nullptr) == 1,
                 "SHA-256 computation failed");
    std::ostringstream hex;
    for (unsigned int i = 0; i < len; ++i) {
        hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
    }
    return hex.str();
}

double reference_accuracy(const std::string &feature_map, const std::string &optimizer) {
    if (feature_map == "hybrid") {
        return optimizer == "cobyla" ? 0.95 : 0.90;
    }
    return optimizer == "cobyla" ? 0.61 : 0.62;
}

Json comparison_to_json(const std::vector<ComparisonRow> &rows) {
    Json doc;
    doc["columns"] = {"feature_map", "optimizer", "train_acc", "test_acc"};
    Json arr = Json::array();
    for (const auto &r : rows) {
        arr.push_back({{"feature_map", r.feature_map},
                       {"optimizer", r.optimizer},
                       {"train_acc", number(r.train_acc)},
                       {"test_acc", number(r.test_acc)},
                       {"final_loss", number(r.final_loss)},
                       {"n_evaluations", r.n_evaluations},
                       {"final_theta", numbers(r.final_theta)},
                       {"reference_test_acc", number(r.reference_test_acc)}});
    }
    doc["rows"] = std::move(arr);
    return doc;
}

std::vector<ComparisonRow> comparison_from_json(const Json &doc) {
    QENC_REQUIRE(doc.is_object() && doc.contains("rows") && doc["rows"].is_array(),
                 "comparison document needs a 'rows' array");
    std::vector<ComparisonRow> rows;
    try {
        for (const auto &j : doc["rows"]) {
            ComparisonRow r;
            r.feature_map = j.at("feature_map").get<std::string>();
            r.optimizer = j.at("optimizer").get<std::string>();
            r.train_acc = j.at("train_acc").get<double>();
            r.test_acc = j.at("test_acc").get<double>();
            r.final_loss = j.at("final_loss").get<double>();
            r.n_evaluations = j.at("n_evaluations").get<std::size_t>();
            r.final_theta = j.at("final_theta").get<std::vector<double>>();
            r.reference_test_acc = j.at("reference_test_acc").get<double>();
            rows.push_back(std::move(r));
        }
    } catch (const nlohmann::json::exception &e) {
        throw Error(std::string("malformed comparison row: ") + e.what());
    }
    return rows;
}

std::string comparison_table(const std::vector<ComparisonRow> &rows) {
    std::ostringstream o;
    o << std::left << std::setw(13) << "feature_map" << std::setw(11) << "optimizer"
      << std::setw(11) << "train_acc" << std::setw(10) << "test_acc" << "reference_test_acc\n";
    for (const auto &r : rows) {
        o << std::left << std::setw(13) << r.feature_map << std::setw(11) << r.optimizer
          << std::setw(11) << sig4(r.train_acc) << std::setw(10) << sig4(r.test_acc)
          << sig4(r.reference_test_acc) << '\n';
    }
    for (const auto &r : rows) {
        o << '\n' << r.feature_map << " / " << r.optimizer << " final parameters:\n";
        print_theta(r.final_theta, o);
    }
    return o.str();
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Quantum data encoding and variational classifier toolkit"};
    app.name(args.empty() ? "qenc" : args.front());
    app.require_subcommand(1);

    GenDataFlags gen;
    auto *gen_cmd = app.add_subcommand("gen-data", "generate the synthetic classification CSV");
    gen_cmd->add_option("--n-samples", gen.config.n_samples)->capture_default_str();
    gen_cmd->add_option("--n-features", gen.config.n_features)->capture_default_str();
    gen_cmd->add_option("--n-informative", gen.config.n_informative)->capture_default_str();
    gen_cmd->add_option("--n-redundant", gen.config.n_redundant)->capture_default_str();
    gen_cmd->add_option("--n-clusters-per-class", gen.config.n_clusters_per_class)
        ->capture_default_str();
    gen_cmd->add_option("--class-sep", gen.config.class_sep)->capture_default_str();
    gen_cmd->add_option("--seed", gen.config.seed)->capture_default_str();
    gen_cmd->add_flag("--shuffle", gen.config.shuffle, "shuffle rows (default keeps class order)");
    gen_cmd->add_option("--out-dir", gen.out_dir)->capture_default_str();
    gen_cmd->add_option("--output", gen.output, "file name, relative to --out-dir")
        ->capture_default_str();

    const std::vector<std::string> methods = {"basis", "amplitude", "angle", "phase", "hybrid"};

    EncodeFlags enc;
    auto *enc_cmd = app.add_subcommand("encode", "encode one sample and report the state");
    add_input_flags(enc_cmd, enc.input);
    enc_cmd->add_option("--method", enc.method)
        ->check(CLI::IsMember(methods))
        ->capture_default_str();
    enc_cmd->add_option("--phase-scale", enc.phase_scale, "hybrid RZ angle per unit feature")
        ->capture_default_str();
    enc_cmd->add_option("--threshold", enc.threshold, "basis encoding: bit is 1 when x > threshold")
        ->capture_default_str();
    enc_cmd->add_flag("--diagnostics", enc.diagnostics, "include entanglement diagnostics");
    enc_cmd->add_option("--out-dir", enc.out_dir)->capture_default_str();

    DiagnoseFlags diag;
    auto *diag_cmd = app.add_subcommand("diagnose", "entanglement diagnostics of an encoded state");
    add_input_flags(diag_cmd, diag.input);
    diag_cmd->add_option("--method", diag.method)
        ->check(CLI::IsMember(methods))
        ->capture_default_str();
    diag_cmd->add_option("--state", diag.state, "statevector JSON ([re, im] pairs) instead of input");
    diag_cmd->add_option("--keep", diag.keep, "comma-separated qubits of subsystem A");
    diag_cmd->add_option("--phase-scale", diag.phase_scale)->capture_default_str();
    diag_cmd->add_option("--out-dir", diag.out_dir)->capture_default_str();

    TrainFlags train;
    auto add_train_flags = [&](CLI::App *cmd, bool with_choice) {
        cmd->add_option("--data", train.data, "dataset CSV")->required();
        if (with_choice) {
            cmd->add_option("--feature-map", train.feature_map)
                ->check(CLI::IsMember({"hybrid", "zz"}))
                ->capture_default_str();
            cmd->add_option("--optimizer", train.optimizer)
                ->check(CLI::IsMember({"cobyla", "lbfgsb"}))
                ->capture_default_str();
        }
        cmd->add_option("--max-iter", train.max_iter)->capture_default_str();
        cmd->add_option("--seed", train.seed, "theta initialization seed")->capture_default_str();
        cmd->add_option("--split-seed", train.split_seed)->capture_default_str();
        cmd->add_option("--test-fraction", train.test_fraction)->capture_default_str();
        cmd->add_option("--reps", train.reps)->capture_default_str();
        cmd->add_option("--entanglement", train.entanglement)
            ->check(CLI::IsMember({"linear", "full"}))
            ->capture_default_str();
        cmd->add_option("--phase-scale", train.phase_scale)->capture_default_str();
        cmd->add_option("--rho-begin", train.rho_begin)->capture_default_str();
        cmd->add_option("--rho-end", train.rho_end)->capture_default_str();
        cmd->add_option("--out-dir", train.out_dir)->capture_default_str();
    };
    auto *train_cmd = app.add_subcommand("train", "train one classifier");
    add_train_flags(train_cmd, true);
    auto *cmp_cmd = app.add_subcommand("compare", "train the hybrid/zz x cobyla/lbfgsb grid");
    add_train_flags(cmp_cmd, false);
    cmp_cmd->add_option("--jobs", train.jobs, "cells trained concurrently")->capture_default_str();

    std::vector<std::string> rev(args.rbegin(), args.rend());
    if (!rev.empty()) {
        rev.pop_back();
    }
    try {
        app.parse(rev);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*gen_cmd) {
            cmd_gen_data(gen, out);
        } else if (*enc_cmd) {
            cmd_encode(enc, out);
        } else if (*diag_cmd) {
            cmd_diagnose(diag, out);
        } else if (*train_cmd) {
            cmd_train(train, out);
        } else if (*cmp_cmd) {
            cmd_compare(train, out);
        }
    } catch (const UsageError &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kExitRuntime;
    }
    return kExitOk;
}

} // namespace qenc::cli
