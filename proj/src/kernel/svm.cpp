// Copyright 2026 The mbqml Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mbqml/kernel/svm.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace mbqml::kernel {

namespace {

constexpr double kTau = 1e-12;
constexpr double kInf = std::numeric_limits<double>::infinity();

double dual_value(const Eigen::VectorXd &alpha, const Eigen::VectorXd &grad) {
    // With G = Q a - e: a^T Q a / 2 - e^T a = a^T (G - e) / 2.
    return -0.5 * alpha.dot(grad - Eigen::VectorXd::Ones(alpha.size()));
}

}  // namespace

int SvmModel::num_support() const {
    int n = 0;
    for (double a : alpha) {
        n += a > 0.0;
    }
    return n;
}

double SvmModel::decision(const Eigen::VectorXd &k_row) const {
    if (k_row.size() != static_cast<long>(alpha.size())) {
        throw std::invalid_argument("decision: kernel row size mismatch");
    }
    double s = bias;
    for (size_t i = 0; i < alpha.size(); ++i) {
        s += alpha[i] * labels[i] * k_row(i);
    }
    return s;
}

SvmModel train_svm(const Eigen::MatrixXd &k, const std::vector<int> &labels, const SvmConfig &cfg) {
    const long n = static_cast<long>(labels.size());
    if (k.rows() != k.cols() || k.rows() != n) {
        throw std::invalid_argument("train_svm: kernel must be square and match the labels");
    }
    if (!k.allFinite()) {
        throw std::invalid_argument("train_svm: non-finite kernel entries");
    }
    if (n == 0) {
        throw std::invalid_argument("train_svm: empty training set");
    }
    if (!(cfg.c > 0.0) || !(cfg.tolerance > 0.0)) {
        throw std::invalid_argument("train_svm: c and tolerance must be positive");
    }
    Eigen::VectorXd y(n);
    for (long i = 0; i < n; ++i) {
        if (labels[i] != 1 && labels[i] != -1) {
            throw std::invalid_argument("train_svm: labels must be +-1");
        }
        y(i) = labels[i];
    }
    const double c = cfg.c;
    const Eigen::MatrixXd q = (y * y.transpose()).cwiseProduct(k);
    Eigen::VectorXd alpha = Eigen::VectorXd::Zero(n);
    Eigen::VectorXd grad = -Eigen::VectorXd::Ones(n);

    auto in_up = [&](long t) { return (y(t) > 0 && alpha(t) < c) || (y(t) < 0 && alpha(t) > 0); };
    auto in_low = [&](long t) { return (y(t) > 0 && alpha(t) > 0) || (y(t) < 0 && alpha(t) < c); };

    SvmModel m;
    m.labels = labels;
    m.dual_objective.push_back(0.0);
    while (m.iterations < cfg.max_iterations) {
        long i = -1;
        double gmax = -kInf;
        for (long t = 0; t < n; ++t) {
            if (in_up(t) && -y(t) * grad(t) >= gmax) {
                gmax = -y(t) * grad(t);
                i = t;
            }
        }
        long j = -1;
        double gmin = kInf;
        double best = kInf;
        for (long t = 0; t < n; ++t) {
            if (!in_low(t)) {
                continue;
            }
            const double v = -y(t) * grad(t);
            gmin = std::min(gmin, v);
            const double b = gmax - v;
            if (i >= 0 && b > 0) {
                double a = q(i, i) + q(t, t) - 2.0 * y(i) * y(t) * q(i, t);
                if (a <= 0) {
                    a = kTau;
                }
                if (-(b * b) / a <= best) {
                    best = -(b * b) / a;
                    j = t;
                }
            }
        }
        if (i < 0 || j < 0 || gmax - gmin < cfg.tolerance) {
            m.converged = true;
            break;
        }
        ++m.iterations;

        const double ai = alpha(i), aj = alpha(j);
        if (y(i) != y(j)) {
            double quad = q(i, i) + q(j, j) + 2.0 * q(i, j);
            if (quad <= 0) {
                quad = kTau;
            }
            const double delta = (-grad(i) - grad(j)) / quad;
            const double diff = alpha(i) - alpha(j);
            alpha(i) += delta;
            alpha(j) += delta;
            if (diff > 0) {
                if (alpha(j) < 0) {
                    alpha(j) = 0;
                    alpha(i) = diff;
                }
            } else if (alpha(i) < 0) {
                alpha(i) = 0;
                alpha(j) = -diff;
            }
            if (diff > 0) {
                if (alpha(i) > c) {
                    alpha(i) = c;
                    alpha(j) = c - diff;
                }
            } else if (alpha(j) > c) {
                alpha(j) = c;
                alpha(i) = c + diff;
            }
        } else {
            double quad = q(i, i) + q(j, j) - 2.0 * q(i, j);
            if (quad <= 0) {
                quad = kTau;
            }
            const double delta = (grad(i) - grad(j)) / quad;
            const double sum = alpha(i) + alpha(j);
            alpha(i) -= delta;
            alpha(j) += delta;
            if (sum > c) {
                if (alpha(i) > c) {
                    alpha(i) = c;
                    alpha(j) = sum - c;
                }
                if (alpha(j) > c) {
                    alpha(j) = c;
                    alpha(i) = sum - c;
                }
            } else {
                if (alpha(j) < 0) {
                    alpha(j) = 0;
                    alpha(i) = sum;
                }
                if (alpha(i) < 0) {
                    alpha(i) = 0;
                    alpha(j) = sum;
                }
            }
        }
        grad += q.col(i) * (alpha(i) - ai) + q.col(j) * (alpha(j) - aj);
        m.dual_objective.push_back(dual_value(alpha, grad));
    }

    // Offset: average over free vectors, else the middle of the feasible range.
    double ub = kInf, lb = -kInf, sum_free = 0.0;
    int n_free = 0;
    for (long t = 0; t < n; ++t) {
        const double yg = y(t) * grad(t);
        if (alpha(t) >= c) {
            (y(t) < 0 ? ub : lb) = y(t) < 0 ? std::min(ub, yg) : std::max(lb, yg);
        } else if (alpha(t) <= 0) {
            (y(t) > 0 ? ub : lb) = y(t) > 0 ? std::min(ub, yg) : std::max(lb, yg);
        } else {
            ++n_free;
            sum_free += yg;
        }
    }
    double rho;
    if (n_free > 0) {
        rho = sum_free / n_free;
    } else if (std::isfinite(ub) && std::isfinite(lb)) {
        rho = 0.5 * (ub + lb);
    } else {
        rho = std::isfinite(ub) ? ub : lb;
    }
    m.bias = -rho;
    m.alpha.assign(alpha.data(), alpha.data() + n);
    return m;
}

std::vector<int> predict(const SvmModel &m, const Eigen::MatrixXd &k_test) {
    std::vector<int> out;
    for (long j = 0; j < k_test.cols(); ++j) {
        out.push_back(m.decision(k_test.col(j)) >= 0.0 ? 1 : -1);
    }
    return out;
}

double accuracy(const std::vector<int> &predicted, const std::vector<int> &truth) {
    if (predicted.size() != truth.size() || truth.empty()) {
        throw std::invalid_argument("accuracy: size mismatch or empty input");
    }
    int hits = 0;
    for (size_t i = 0; i < truth.size(); ++i) {
        hits += predicted[i] == truth[i];
    }
    return static_cast<double>(hits) / truth.size();
}

nlohmann::json to_json(const SvmConfig &c) {
    return {{"c", c.c}, {"tolerance", c.tolerance}, {"max_iterations", c.max_iterations}};
}

SvmConfig svm_config_from_json(const nlohmann::json &j) {
    SvmConfig c;
    c.c = j.value("c", c.c);
    c.tolerance = j.value("tolerance", c.tolerance);
    c.max_iterations = j.value("max_iterations", c.max_iterations);
    return c;
}

}  // namespace mbqml::kernel
