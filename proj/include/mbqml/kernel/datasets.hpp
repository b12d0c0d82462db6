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

#ifndef MBQML_KERNEL_DATASETS_HPP_
#define MBQML_KERNEL_DATASETS_HPP_

#include <string>
#include <vector>

#include "json.hpp"
#include "mbqml/kernel/embedding.hpp"
#include "mbqml/kernel/svm.hpp"
#include "mbqml/sim/haar.hpp"

namespace mbqml::kernel {

enum class DatasetKind { circles, moons, blobs };

DatasetKind dataset_kind_from_string(const std::string &s);
std::string to_string(DatasetKind k);

struct LabeledPoints {
    std::vector<Point> x;
    std::vector<int> y;

    size_t size() const { return x.size(); }
};

// Label-balanced (ceil(n/2) points labelled +1), shuffled, with independent
// N(0, noise^2) jitter per coordinate:
//   circles: +1 on radius 0.6, -1 on radius 1.0, uniform angles;
//   moons: +1 on the upper half circle, -1 on the shifted lower one;
//   blobs: +1 around (1, 1), -1 around (-1, -1).
// Throws std::invalid_argument for n < 4 or noise < 0.
LabeledPoints make_points(DatasetKind kind, int n, double noise, sim::Rng &rng);

struct KernelSvmReport {
    DatasetKind kind = DatasetKind::circles;
    uint64_t seed = 0;
    int n_train = 0;
    int n_test = 0;
    double train_accuracy = 0.0;
    double test_accuracy = 0.0;
    int num_support = 0;
    long iterations = 0;
    bool converged = false;
    std::vector<Point> test_points;
    std::vector<int> test_labels;
    // Decision value per test point; its sign is the prediction.
    std::vector<double> test_decision;
};

// Draws n_train + n_test points, trains on the leading n_train and scores the
// rest with the embedding kernel.
KernelSvmReport run_kernel_svm(DatasetKind kind, int n_train, int n_test, double noise, const SvmConfig &cfg,
                               uint64_t seed);

nlohmann::json to_json(const KernelSvmReport &r);

}  // namespace mbqml::kernel

#endif  // MBQML_KERNEL_DATASETS_HPP_
