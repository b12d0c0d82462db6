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

#ifndef MBQML_KERNEL_SVM_HPP_
#define MBQML_KERNEL_SVM_HPP_

#include <vector>

#include <Eigen/Dense>

#include "json.hpp"

namespace mbqml::kernel {

struct SvmConfig {
    double c = 1.0;
    // Stop once the maximal KKT violation m(a) - M(a) drops to this value.
    double tolerance = 1e-3;
    long max_iterations = 10000000;
};

// Binary soft-margin SVM over a precomputed kernel, labels +-1.
struct SvmModel {
    std::vector<double> alpha;
    std::vector<int> labels;
    double bias = 0.0;
    long iterations = 0;
    bool converged = false;
    // Dual objective sum(a) - a^T Q a / 2 after every SMO step (entry 0: a = 0).
    std::vector<double> dual_objective;

    int num_support() const;
    // sum_i a_i y_i k_row(i) + bias, for k_row holding K(x_i, x) over training i.
    double decision(const Eigen::VectorXd &k_row) const;
};

// SMO with second-order working-set selection.  Throws std::invalid_argument
// on a non-square or non-finite kernel, a size mismatch, labels outside {-1, +1} or c <= 0.
SvmModel train_svm(const Eigen::MatrixXd &k, const std::vector<int> &labels, const SvmConfig &cfg = {});

// Signs of the decision function; k_test(i, j) = K(x_train_i, x_test_j).
std::vector<int> predict(const SvmModel &m, const Eigen::MatrixXd &k_test);

double accuracy(const std::vector<int> &predicted, const std::vector<int> &truth);

nlohmann::json to_json(const SvmConfig &c);
SvmConfig svm_config_from_json(const nlohmann::json &j);

}  // namespace mbqml::kernel

#endif  // MBQML_KERNEL_SVM_HPP_
