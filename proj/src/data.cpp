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

#include "qenc/data.hpp"
#include "qenc/error.hpp"
#include "qenc/numfmt.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

namespace qenc {

double Rng::uniform() { return static_cast<double>(engine_() >> 11U) * 0x1.0p-53; }

std::size_t Rng::index(std::size_t n) {
    QENC_REQUIRE(n > 0, "index range must be nonempty");
    return std::min(n - 1, static_cast<std::size_t>(uniform() * static_cast<double>(n)));
}

double Rng::normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    double u1 = 0.0;
    do {
        u1 = uniform();
    } while (u1 <= 0.0);
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    spare_ = r * std::sin(2.0 * std::numbers::pi * u2);
    has_spare_ = true;
    return r * std::cos(2.0 * std::numbers::pi * u2);
}

void Dataset::validate() const {
    QENC_REQUIRE(features.size() == labels.size(), "feature rows and labels differ in count");
    for (std::size_t r = 0; r < features.size(); ++r) {
        QENC_REQUIRE(features[r].size() == feature_names.size(),
                     "row " + std::to_string(r) + " has the wrong number of features");
        for (double v : features[r]) {
            QENC_REQUIRE(std::isfinite(v), "row " + std::to_string(r) + " has a non-finite value");
        }
        QENC_REQUIRE(labels[r] == 0 || labels[r] == 1,
                     "row " + std::to_string(r) + " has a label other than 0/1");
    }
}

Dataset Dataset::subset(const std::vector<std::size_t> &rows) const {
    Dataset out;
    out.feature_names = feature_names;
    out.provenance = provenance;
    for (auto r : rows) {
        QENC_REQUIRE(r < n_samples(), "subset row out of range");
        out.features.push_back(features[r]);
        out.labels.push_back(labels[r]);
    }
    return out;
}

void GeneratorConfig::validate() const {
    QENC_REQUIRE(n_samples >= 2, "n_samples must be at least 2");
    QENC_REQUIRE(n_features >= 1, "n_features must be at least 1");
    QENC_REQUIRE(n_informative >= 1, "n_informative must be at least 1");
    QENC_REQUIRE(n_clusters_per_class >= 1, "n_clusters_per_class must be at least 1");
    QENC_REQUIRE(n_informative + n_redundant <= n_features,
                 "n_informative + n_redundant must not exceed n_features");
    QENC_REQUIRE(n_informative <= 30, "n_informative must be at most 30");
    QENC_REQUIRE((std::size_t{1} << n_informative) >= 2 * n_clusters_per_class,
                 "n_informative must be >= log2(2 * n_clusters_per_class)");
    QENC_REQUIRE(std::isfinite(class_sep) && class_sep > 0, "class_sep must be positive");
}

std::string GeneratorConfig::describe() const {
    std::ostringstream s;
    s << "generate_classification(n_samples=" << n_samples << ", n_features=" << n_features
      << ", n_informative=" << n_informative << ", n_redundant=" << n_redundant
      << ", n_clusters_per_class=" << n_clusters_per_class << ", class_sep=" << sig10(class_sep)
      << ", seed=" << seed << ", shuffle=" << (shuffle ? "true" : "false") << ")";
    return s.str();
}

Dataset generate_classification(const GeneratorConfig &config) {
    config.validate();
    Rng rng(config.seed);
    const std::size_t n_inf = config.n_informative;
    const std::size_t n_clusters = 2 * config.n_clusters_per_class;

    // Distinct hypercube vertices by a partial Fisher-Yates over vertex ids.
    std::vector<std::size_t> vertex_ids(std::size_t{1} << n_inf);
    for (std::size_t i = 0; i < vertex_ids.size(); ++i) {
        vertex_ids[i] = i;
    }
    std::vector<std::vector<double>> centroids;
    for (std::size_t k = 0; k < n_clusters; ++k) {
        std::swap(vertex_ids[k], vertex_ids[k + rng.index(vertex_ids.size() - k)]);
        std::vector<double> c(n_inf);
        for (std::size_t b = 0; b < n_inf; ++b) {
            c[b] = ((vertex_ids[k] >> b) & 1U) != 0 ? config.class_sep : -config.class_sep;
        }
        centroids.push_back(std::move(c));
    }

    // Cluster k belongs to class k / n_clusters_per_class, so class 0 comes first.
    const std::size_t per_class[2] = {(config.n_samples + 1) / 2, config.n_samples / 2};
    std::vector<std::size_t> cluster_sizes(n_clusters);
    for (std::size_t cls = 0; cls < 2; ++cls) {
        for (std::size_t j = 0; j < config.n_clusters_per_class; ++j) {
            const std::size_t k = cls * config.n_clusters_per_class + j;
            cluster_sizes[k] = per_class[cls] / config.n_clusters_per_class +
                               (j < per_class[cls] % config.n_clusters_per_class ? 1 : 0);
        }
    }

    Dataset data;
    data.features.assign(config.n_samples, std::vector<double>(config.n_features, 0.0));
    data.labels.assign(config.n_samples, 0);
    for (std::size_t r = 0; r < config.n_samples; ++r) {
        for (std::size_t f = 0; f < n_inf; ++f) {
            data.features[r][f] = rng.normal();
        }
    }

    std::size_t row = 0;
    for (std::size_t k = 0; k < n_clusters; ++k) {
        std::vector<double> transform(n_inf * n_inf);
        for (auto &a : transform) {
            a = 2.0 * rng.uniform() - 1.0;
        }
        for (std::size_t i = 0; i < cluster_sizes[k]; ++i, ++row) {
            auto &x = data.features[row];
            std::vector<double> z(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(n_inf));
            for (std::size_t c = 0; c < n_inf; ++c) {
                double acc = 0.0;
                for (std::size_t r = 0; r < n_inf; ++r) {
                    acc += z[r] * transform[r * n_inf + c];
                }
                x[c] = acc + centroids[k][c];
            }
            data.labels[row] = static_cast<int>(k / config.n_clusters_per_class);
        }
    }

    if (config.n_redundant > 0) {
        std::vector<double> mix(n_inf * config.n_redundant);
        for (auto &b : mix) {
            b = 2.0 * rng.uniform() - 1.0;
        }
        for (auto &x : data.features) {
            for (std::size_t c = 0; c < config.n_redundant; ++c) {
                double acc = 0.0;
                for (std::size_t r = 0; r < n_inf; ++r) {
                    acc += x[r] * mix[r * config.n_redundant + c];
                }
                x[n_inf + c] = acc;
            }
        }
    }
    for (auto &x : data.features) {
        for (std::size_t f = n_inf + config.n_redundant; f < config.n_features; ++f) {
            x[f] = rng.normal();
        }
    }

    if (config.shuffle) {
        for (std::size_t i = config.n_samples; i-- > 1;) {
            const std::size_t j = rng.index(i + 1);
            std::swap(data.features[i], data.features[j]);
            std::swap(data.labels[i], data.labels[j]);
        }
    }

    for (std::size_t f = 0; f < config.n_features; ++f) {
        data.feature_names.push_back("f" + std::to_string(f));
    }
    data.provenance = config.describe();
    return data;
}

ScalerParams fit_scaler(const Dataset &data, ScalerKind kind, double lo, double hi) {
    QENC_REQUIRE(data.n_samples() > 0, "cannot fit a scaler on an empty dataset");
    if (kind == ScalerKind::MinMax) {
        QENC_REQUIRE(hi > lo, "minmax range must have hi > lo");
    }
    const std::size_t n = data.n_features();
    ScalerParams p;
    p.kind = kind;
    p.lo = lo;
    p.hi = hi;
    p.center.assign(n, 0.0);
    p.spread.assign(n, 0.0);
    const auto m = static_cast<double>(data.n_samples());
    for (std::size_t f = 0; f < n; ++f) {
        if (kind == ScalerKind::Standard) {
            double mean = 0.0;
            for (const auto &row : data.features) {
                mean += row[f];
            }
            mean /= m;
            double var = 0.0;
            for (const auto &row : data.features) {
                var += (row[f] - mean) * (row[f] - mean);
            }
            p.center[f] = mean;
            p.spread[f] = std::sqrt(var / m);
            QENC_REQUIRE(p.spread[f] > 0, "feature " + data.feature_names[f] +
                                              " is constant (zero standard deviation)");
        } else {
            double mn = data.features.front()[f];
            double mx = mn;
            for (const auto &row : data.features) {
                mn = std::min(mn, row[f]);
                mx = std::max(mx, row[f]);
            }
            p.center[f] = mn;
            p.spread[f] = mx;
            QENC_REQUIRE(mx > mn, "feature " + data.feature_names[f] + " is constant (max == min)");
        }
    }
    return p;
}

std::vector<std::vector<double>> apply_scaler(const ScalerParams &params,
                                              const std::vector<std::vector<double>> &features) {
    std::vector<std::vector<double>> out = features;
    for (auto &row : out) {
        QENC_REQUIRE(row.size() == params.center.size(), "scaler feature count mismatch");
        for (std::size_t f = 0; f < row.size(); ++f) {
            if (params.kind == ScalerKind::Standard) {
                row[f] = (row[f] - params.center[f]) / params.spread[f];
            } else {
                const double span = params.spread[f] - params.center[f];
                row[f] = params.lo + (row[f] - params.center[f]) * (params.hi - params.lo) / span;
            }
        }
    }
    return out;
}

Dataset apply_scaler(const ScalerParams &params, const Dataset &data) {
    Dataset out = data;
    out.features = apply_scaler(params, data.features);
    return out;
}

Split train_test_split(const Dataset &data, double test_fraction, std::uint64_t seed) {
    QENC_REQUIRE(test_fraction > 0 && test_fraction < 1, "test fraction must be in (0, 1)");
    const std::size_t m = data.n_samples();
    const auto n_train = static_cast<std::size_t>(
        std::ceil(static_cast<double>(m) * (1.0 - test_fraction) - 1e-9));
    QENC_REQUIRE(n_train >= 1 && n_train < m, "split leaves an empty partition");

    std::vector<std::size_t> perm(m);
    for (std::size_t i = 0; i < m; ++i) {
        perm[i] = i;
    }
    Rng rng(seed);
    for (std::size_t i = m; i-- > 1;) {
        std::swap(perm[i], perm[rng.index(i + 1)]);
    }
    Split s;
    s.train_rows.assign(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(n_train));
    s.test_rows.assign(perm.begin() + static_cast<std::ptrdiff_t>(n_train), perm.end());
    s.train = data.subset(s.train_rows);
    s.test = data.subset(s.test_rows);
    return s;
}

void write_csv(const Dataset &data, std::ostream &out) {
    data.validate();
    for (const auto &name : data.feature_names) {
        out << name << ',';
    }
    out << "label\n";
    for (std::size_t r = 0; r < data.n_samples(); ++r) {
        for (double v : data.features[r]) {
            out << shortest(v) << ',';
        }
        out << data.labels[r] << '\n';
    }
}

void write_csv(const Dataset &data, const std::filesystem::path &path) {
    std::ofstream out(path, std::ios::binary);
    QENC_REQUIRE(out.good(), "cannot open " + path.string() + " for writing");
    write_csv(data, out);
    QENC_REQUIRE(out.good(), "failed writing " + path.string());
}

namespace {

std::vector<std::string> split_fields(const std::string &line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur += c;
        }
    }
    fields.push_back(cur);
    return fields;
}

double parse_number(const std::string &cell, const std::string &where) {
    double v = 0.0;
    const char *first = cell.data();
    const char *last = cell.data() + cell.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last || cell.empty() || !std::isfinite(v)) {
        throw Error(where + ": non-numeric cell '" + cell + "'");
    }
    return v;
}

} // namespace

Dataset read_csv(std::istream &in, const std::string &source) {
    std::string line;
    QENC_REQUIRE(static_cast<bool>(std::getline(in, line)), source + ": missing header row");
    const auto header = split_fields(line);
    std::size_t label_col = header.size();
    for (std::size_t c = 0; c < header.size(); ++c) {
        if (header[c] == "label") {
            label_col = c;
        }
    }
    QENC_REQUIRE(label_col < header.size(), source + ": header has no 'label' column");

    Dataset data;
    for (std::size_t c = 0; c < header.size(); ++c) {
        if (c != label_col) {
            data.feature_names.push_back(header[c]);
        }
    }
    QENC_REQUIRE(!data.feature_names.empty(), source + ": no feature columns");
    data.provenance = "csv:" + source;

    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line == "\r") {
            continue;
        }
        const std::string where = source + " line " + std::to_string(line_no);
        const auto fields = split_fields(line);
        QENC_REQUIRE(fields.size() == header.size(),
                     where + ": expected " + std::to_string(header.size()) + " fields, got " +
                         std::to_string(fields.size()));
        std::vector<double> row;
        for (std::size_t c = 0; c < fields.size(); ++c) {
            if (c == label_col) {
                continue;
            }
            row.push_back(parse_number(fields[c], where));
        }
        const double label = parse_number(fields[label_col], where);
        QENC_REQUIRE(label == 0.0 || label == 1.0, where + ": label must be 0 or 1");
        data.features.push_back(std::move(row));
        data.labels.push_back(static_cast<int>(label));
    }
    return data;
}

Dataset read_csv(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    QENC_REQUIRE(in.good(), "cannot open " + path.string());
    return read_csv(in, path.string());
}

} // namespace qenc
