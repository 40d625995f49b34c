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

#include <Eigen/Dense>

#include <cmath>
#include <limits>

namespace qenc {

namespace {

// Simplex shape thresholds, as fractions of the trust radius: every vertex
// must lie within kMaxDistance * rho of the pivot and at least
// kMinSigma * rho away from the face spanned by the others.
constexpr double kMinSigma = 0.25;
constexpr double kMaxDistance = 2.1;
constexpr double kGeometryStep = 0.5;
constexpr double kPoorRatio = 0.1;

struct Budget {};
struct NonFinite {
    std::string what;
};

class CobylaRun {
  public:
    CobylaRun(const Objective &f, const CobylaOptions &opt, std::size_t dim)
        : f_(f), opt_(opt), dim_(dim) {
        result_.best_loss = std::numeric_limits<double>::infinity();
    }

    double evaluate(const Eigen::VectorXd &x) {
        if (result_.n_evaluations >= opt_.max_iter) {
            throw Budget{};
        }
        std::span<const double> view(x.data(), static_cast<std::size_t>(x.size()));
        const double v = f_(view);
        if (!std::isfinite(v)) {
            throw NonFinite{"objective returned a non-finite value at evaluation " +
                            std::to_string(result_.n_evaluations + 1)};
        }
        ++result_.n_evaluations;
        std::vector<double> params(view.begin(), view.end());
        result_.history.push_back(HistoryEntry{result_.n_evaluations, v, params});
        if (v < result_.best_loss) {
            result_.best_loss = v;
            result_.best_params = std::move(params);
        }
        return v;
    }

    void optimize(const Eigen::VectorXd &x0) {
        const auto n = static_cast<Eigen::Index>(dim_);
        std::vector<Eigen::VectorXd> pts;
        std::vector<double> vals;
        pts.push_back(x0);
        vals.push_back(evaluate(x0));
        for (Eigen::Index j = 0; j < n; ++j) {
            Eigen::VectorXd x = x0;
            x(j) += opt_.rho_begin;
            pts.push_back(x);
            vals.push_back(evaluate(x));
        }

        double rho = opt_.rho_begin;
        bool need_geometry = false;
        for (;;) {
            std::size_t pivot = 0;
            for (std::size_t j = 1; j < pts.size(); ++j) {
                if (vals[j] < vals[pivot]) {
                    pivot = j;
                }
            }
            // Rows of `edges` are vertex - pivot for every non-pivot vertex;
            // `slots[r]` maps row r back to its vertex.
            Eigen::MatrixXd edges(n, n);
            Eigen::VectorXd dvals(n);
            std::vector<std::size_t> slots;
            for (std::size_t j = 0, r = 0; j < pts.size(); ++j) {
                if (j == pivot) {
                    continue;
                }
                edges.row(static_cast<Eigen::Index>(r)) = (pts[j] - pts[pivot]).transpose();
                dvals(static_cast<Eigen::Index>(r)) = vals[j] - vals[pivot];
                slots.push_back(j);
                ++r;
            }
            Eigen::FullPivLU<Eigen::MatrixXd> lu(edges);
            const bool singular = !lu.isInvertible();
            Eigen::MatrixXd inv = Eigen::MatrixXd::Zero(n, n);
            if (!singular) {
                inv = lu.inverse();
            }

            // Shape of the simplex relative to rho.
            Eigen::Index far = 0;
            double far_dist = 0.0;
            Eigen::Index thin = 0;
            double thin_sigma = std::numeric_limits<double>::infinity();
            for (Eigen::Index r = 0; r < n; ++r) {
                const double dist = edges.row(r).norm();
                if (dist > far_dist) {
                    far_dist = dist;
                    far = r;
                }
                const double col = inv.col(r).norm();
                const double sigma = col > 0 ? 1.0 / col : 0.0;
                if (sigma < thin_sigma) {
                    thin_sigma = sigma;
                    thin = r;
                }
            }
            const bool acceptable =
                !singular && far_dist <= kMaxDistance * rho && thin_sigma >= kMinSigma * rho;

            if (need_geometry && !acceptable) {
                need_geometry = false;
                const Eigen::Index r = far_dist > kMaxDistance * rho ? far : thin;
                Eigen::VectorXd dir = singular ? Eigen::VectorXd::Unit(n, r)
                                               : Eigen::VectorXd(inv.col(r));
                dir *= kGeometryStep * rho / dir.norm();
                if (!singular) {
                    const Eigen::VectorXd g = lu.solve(dvals);
                    if (g.dot(dir) > 0) {
                        dir = -dir;
                    }
                }
                const Eigen::VectorXd x = pts[pivot] + dir;
                const std::size_t slot = slots[static_cast<std::size_t>(r)];
                pts[slot] = x;
                vals[slot] = evaluate(x);
                continue;
            }

            Eigen::VectorXd g = Eigen::VectorXd::Zero(n);
            if (!singular) {
                g = lu.solve(dvals);
            }
            const double gnorm = g.norm();
            if (gnorm == 0.0 || singular) {
                if (!acceptable) {
                    need_geometry = true;
                    continue;
                }
                if (!shrink(rho)) {
                    return;
                }
                continue;
            }

            const Eigen::VectorXd step = -rho / gnorm * g;
            const Eigen::VectorXd trial = pts[pivot] + step;
            const double ftrial = evaluate(trial);
            const double predicted = rho * gnorm;
            const double ratio = (vals[pivot] - ftrial) / predicted;

            // Replacing row r by `step` scales the simplex volume by |c_r|.
            const Eigen::VectorXd c = inv.transpose() * step;
            Eigen::Index drop = -1;
            double best_score = ftrial < vals[pivot] ? 0.0 : 1.0;
            for (Eigen::Index r = 0; r < n; ++r) {
                const double dist = edges.row(r).norm() / rho;
                const double score = std::abs(c(r)) * std::max(1.0, dist * dist);
                if (score > best_score) {
                    best_score = score;
                    drop = r;
                }
            }
            if (drop >= 0) {
                const std::size_t slot = slots[static_cast<std::size_t>(drop)];
                pts[slot] = trial;
                vals[slot] = ftrial;
            }

            if (ratio < kPoorRatio) {
                if (acceptable) {
                    if (!shrink(rho)) {
                        return;
                    }
                } else {
                    need_geometry = true;
                }
            }
        }
    }

    OptimizerResult take() { return std::move(result_); }
    OptimizerResult &result() { return result_; }

  private:
    bool shrink(double &rho) {
        if (rho <= opt_.rho_end) {
            result_.stop_reason = StopReason::TrustRegionConverged;
            return false;
        }
        rho *= 0.5;
        if (rho <= 1.5 * opt_.rho_end) {
            rho = opt_.rho_end;
        }
        return true;
    }

    const Objective &f_;
    const CobylaOptions &opt_;
    std::size_t dim_;
    OptimizerResult result_;
};

} // namespace

OptimizerResult minimize_cobyla(const Objective &f, std::vector<double> x0,
                                const CobylaOptions &options) {
    QENC_REQUIRE(!x0.empty(), "cobyla needs at least one parameter");
    QENC_REQUIRE(options.max_iter >= 1, "max_iter must be at least 1");
    QENC_REQUIRE(options.rho_end > 0 && options.rho_begin > options.rho_end,
                 "cobyla requires rho_begin > rho_end > 0");

    CobylaRun run(f, options, x0.size());
    const Eigen::VectorXd start =
        Eigen::Map<const Eigen::VectorXd>(x0.data(), static_cast<Eigen::Index>(x0.size()));
    try {
        run.optimize(start);
    } catch (const Budget &) {
        run.result().stop_reason = StopReason::MaxIterations;
    } catch (const NonFinite &e) {
        run.result().stop_reason = StopReason::NonFiniteValue;
        run.result().message = e.what;
    }
    auto result = run.take();
    result.n_iterations = result.n_evaluations;
    if (result.best_params.empty()) {
        result.best_params = std::move(x0);
    }
    return result;
}

} // namespace qenc
