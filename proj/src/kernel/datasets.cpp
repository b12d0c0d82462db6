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

#include "mbqml/kernel/datasets.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <stdexcept>

namespace mbqml::kernel {

DatasetKind dataset_kind_from_string(const std::string &s) {
    if (s == "circles") {
        return DatasetKind::circles;
    }
    if (s == "moons") {
        return DatasetKind::moons;
    }
    if (s == "blobs") {
        return DatasetKind::blobs;
    }
    throw std::invalid_argument("unknown dataset kind: " + s);
}

std::string to_string(DatasetKind k) {
    switch (k) {
        case DatasetKind::circles:
            return "circles";
        case DatasetKind::moons:
            return "moons";
        case DatasetKind::blobs:
            return "blobs";
    }
    return "?";
}

LabeledPoints make_points(DatasetKind kind, int n, double noise, sim::Rng &rng) {
    if (n < 4 || !(noise >= 0.0)) {
        throw std::invalid_argument("make_points: need n >= 4 and noise >= 0");
    }
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    std::uniform_real_distribution<double> half(0.0, std::numbers::pi);
    std::normal_distribution<double> jitter(0.0, 1.0);
    LabeledPoints raw;
    const int n_pos = (n + 1) / 2;
    for (int i = 0; i < n; ++i) {
        const int label = i < n_pos ? 1 : -1;
        Point p{};
        switch (kind) {
            case DatasetKind::circles: {
                const double r = label > 0 ? 0.6 : 1.0;
                const double t = angle(rng);
                p = {r * std::cos(t), r * std::sin(t)};
                break;
            }
            case DatasetKind::moons: {
                const double t = half(rng);
                p = label > 0 ? Point{std::cos(t), std::sin(t)} : Point{1.0 - std::cos(t), 0.5 - std::sin(t)};
                break;
            }
            case DatasetKind::blobs:
                p = label > 0 ? Point{1.0, 1.0} : Point{-1.0, -1.0};
                break;
        }
        p[0] += noise * jitter(rng);
        p[1] += noise * jitter(rng);
        raw.x.push_back(p);
        raw.y.push_back(label);
    }
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    LabeledPoints out;
    for (int i : order) {
        out.x.push_back(raw.x[i]);
        out.y.push_back(raw.y[i]);
    }
    return out;
}

KernelSvmReport run_kernel_svm(DatasetKind kind, int n_train, int n_test, double noise, const SvmConfig &cfg,
                               uint64_t seed) {
    if (n_train < 1 || n_test < 1) {
        throw std::invalid_argument("run_kernel_svm: both splits must be non-empty");
    }
    sim::Rng rng(seed);
    const auto pts = make_points(kind, n_train + n_test, noise, rng);
    const std::vector<Point> xtr(pts.x.begin(), pts.x.begin() + n_train), xte(pts.x.begin() + n_train, pts.x.end());
    const std::vector<int> ytr(pts.y.begin(), pts.y.begin() + n_train), yte(pts.y.begin() + n_train, pts.y.end());
    const auto model = train_svm(gram(xtr, xtr), ytr, cfg);

    KernelSvmReport r;
    r.kind = kind;
    r.seed = seed;
    r.n_train = n_train;
    r.n_test = n_test;
    r.train_accuracy = accuracy(predict(model, gram(xtr, xtr)), ytr);
    const auto k_test = gram(xtr, xte);
    r.test_accuracy = accuracy(predict(model, k_test), yte);
    for (long j = 0; j < k_test.cols(); ++j) {
        r.test_points.push_back(xte[j]);
        r.test_labels.push_back(yte[j]);
        r.test_decision.push_back(model.decision(k_test.col(j)));
    }
    r.num_support = model.num_support();
    r.iterations = model.iterations;
    r.converged = model.converged;
    return r;
}

nlohmann::json to_json(const KernelSvmReport &r) {
    return {{"dataset", to_string(r.kind)},     {"seed", r.seed},
            {"n_train", r.n_train},             {"n_test", r.n_test},
            {"train_accuracy", r.train_accuracy}, {"test_accuracy", r.test_accuracy},
            {"num_support", r.num_support},     {"iterations", r.iterations},
            {"converged", r.converged},         {"test_points", r.test_points},
            {"test_labels", r.test_labels},     {"test_decision", r.test_decision}};
}

}  // namespace mbqml::kernel
