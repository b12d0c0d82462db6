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

#include <cmath>
#include <random>

#include <Eigen/Eigenvalues>
#include <gtest/gtest.h>

#include "mbqml/kernel/datasets.hpp"
#include "mbqml/kernel/embedding.hpp"
#include "mbqml/kernel/svm.hpp"
#include "test_util.hpp"

namespace mbqml::kernel {
namespace {

using fixtures::kPi;

Point random_point(sim::Rng &rng) { return {fixtures::uniform_angle(rng), fixtures::uniform_angle(rng)}; }

// Overlap up to a global phase.
double phase_free_distance(const sim::StateVector &a, const sim::StateVector &b) {
    const sim::cplx ov = a.amps.dot(b.amps);
    return (a.amps * (ov / std::abs(ov)) - b.amps).norm();
}

TEST(Embedding, OriginIsXxExponential) {
    const auto s = embed({0.0, 0.0});
    EXPECT_NEAR(std::abs(s.amps(0) - std::cos(0.5)), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(s.amps(3) - sim::cplx(0.0, std::sin(0.5))), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(s.amps(1)) + std::abs(s.amps(2)), 0.0, 1e-12);
}

TEST(Embedding, MatchesExplicitMatrixProduct) {
    sim::Rng rng(3);
    for (int t = 0; t < 20; ++t) {
        const auto x = random_point(rng);
        const sim::Mat rz = sim::embed(sim::rz(-x[1]), {1}, 2) * sim::embed(sim::rz(-x[0]), {0}, 2);
        const sim::Mat xx = sim::embed(sim::pauli_x(), {0}, 2) * sim::embed(sim::pauli_x(), {1}, 2);
        const double th = std::cos(x[0]) * std::cos(x[1]);
        const sim::Mat ex = std::cos(th / 2) * sim::Mat::Identity(4, 4) + sim::cplx(0, std::sin(th / 2)) * xx;
        const sim::Vec ref = rz * ex * rz * sim::StateVector::basis(2, 0).amps;
        EXPECT_LT((embed(x).amps - ref).norm(), 1e-10);
    }
}

TEST(Embedding, MbqcPatternAgreesWithClosedForm) {
    sim::Rng rng(11);
    for (int t = 0; t < 100; ++t) {
        const auto x = random_point(rng);
        const auto a = embed(x);
        const auto b = embed_mbqc(x);
        EXPECT_NEAR(sim::fidelity(a, b), 1.0, 1e-10);
        EXPECT_LT(phase_free_distance(a, b), 1e-8);
    }
}

TEST(Embedding, PatternAnglesFollowLayout) {
    const auto p = embedding_pattern({0.3, -0.8});
    ASSERT_EQ(p.angles.size(), 10u);
    EXPECT_DOUBLE_EQ(p.angles[0], 0.3);
    EXPECT_DOUBLE_EQ(p.angles[2], 0.3);
    EXPECT_DOUBLE_EQ(p.angles[5], -0.8);
    EXPECT_DOUBLE_EQ(p.angles[7], -0.8);
    EXPECT_DOUBLE_EQ(p.angles[6], std::cos(0.3) * std::cos(-0.8));
    for (int v : {1, 3, 4, 8, 9}) {
        EXPECT_EQ(p.angles[v], 0.0);
    }
}

TEST(Kernel, VanishingCouplingGivesUnitKernel) {
    sim::Rng rng(5);
    for (int t = 0; t < 10; ++t) {
        const auto a = random_point(rng), b = random_point(rng);
        EXPECT_NEAR(kernel({kPi / 2, a[1]}, {kPi / 2, b[1]}), 1.0, 1e-12);
    }
}

TEST(Kernel, BoundsSymmetryAndDiagonal) {
    sim::Rng rng(7);
    for (int t = 0; t < 200; ++t) {
        const auto a = random_point(rng), b = random_point(rng);
        const double k = kernel(a, b);
        EXPECT_GE(k, -1e-15);
        EXPECT_LE(k, 1.0 + 1e-12);
        EXPECT_NEAR(k, kernel(b, a), 1e-12);
        EXPECT_NEAR(kernel(a, a), 1.0, 1e-12);
    }
}

TEST(Kernel, GramIsPositiveSemidefinite) {
    sim::Rng rng(9);
    std::vector<Point> pts;
    for (int t = 0; t < 50; ++t) {
        pts.push_back(random_point(rng));
    }
    const auto k = gram(pts, pts);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(k);
    EXPECT_GE(es.eigenvalues().minCoeff(), -1e-9);
    EXPECT_NEAR(k(3, 17), kernel(pts[3], pts[17]), 1e-15);
}

TEST(Svm, SeparatesDistantClusters) {
    sim::Rng rng(1);
    std::normal_distribution<double> jit(0.0, 0.05);
    std::vector<Point> x;
    std::vector<int> y;
    for (int i = 0; i < 40; ++i) {
        const int label = i % 2 ? 1 : -1;
        x.push_back({label * 0.8 + jit(rng), label * 0.8 + jit(rng)});
        y.push_back(label);
    }
    const auto k = gram(x, x);
    const auto m = train_svm(k, y);
    EXPECT_TRUE(m.converged);
    EXPECT_DOUBLE_EQ(accuracy(predict(m, k), y), 1.0);
}

TEST(Svm, ConstantLabelsPredictThatLabel) {
    sim::Rng rng(2);
    std::vector<Point> x, probe;
    for (int i = 0; i < 10; ++i) {
        x.push_back(random_point(rng));
        probe.push_back(random_point(rng));
    }
    for (int label : {1, -1}) {
        const auto m = train_svm(gram(x, x), std::vector<int>(10, label));
        for (int p : predict(m, gram(x, probe))) {
            EXPECT_EQ(p, label);
        }
    }
}

TEST(Svm, KktAndBoxConstraintsAtConvergence) {
    sim::Rng rng(4);
    const auto pts = make_points(DatasetKind::moons, 60, 0.1, rng);
    const auto k = gram(pts.x, pts.x);
    SvmConfig cfg;
    const auto m = train_svm(k, pts.y, cfg);
    ASSERT_TRUE(m.converged);
    double eq = 0.0;
    for (size_t i = 0; i < m.alpha.size(); ++i) {
        EXPECT_GE(m.alpha[i], 0.0);
        EXPECT_LE(m.alpha[i], cfg.c);
        eq += m.alpha[i] * m.labels[i];
    }
    EXPECT_NEAR(eq, 0.0, 1e-10);
    // Max violation m(a) - M(a) over y_i * gradient.
    double up = -1e300, low = 1e300;
    for (size_t i = 0; i < m.alpha.size(); ++i) {
        double g = -1.0;
        for (size_t j = 0; j < m.alpha.size(); ++j) {
            g += m.labels[i] * m.labels[j] * k(i, j) * m.alpha[j];
        }
        const double v = -m.labels[i] * g;
        const bool is_up = (m.labels[i] > 0 && m.alpha[i] < cfg.c) || (m.labels[i] < 0 && m.alpha[i] > 0);
        const bool is_low = (m.labels[i] > 0 && m.alpha[i] > 0) || (m.labels[i] < 0 && m.alpha[i] < cfg.c);
        if (is_up) {
            up = std::max(up, v);
        }
        if (is_low) {
            low = std::min(low, v);
        }
    }
    EXPECT_LT(up - low, cfg.tolerance + 1e-12);
}

TEST(Svm, DualObjectiveNonDecreasing) {
    for (auto kind : {DatasetKind::circles, DatasetKind::moons, DatasetKind::blobs}) {
        sim::Rng rng(6);
        const auto pts = make_points(kind, 80, 0.1, rng);
        const auto m = train_svm(gram(pts.x, pts.x), pts.y);
        ASSERT_GE(m.dual_objective.size(), 2u);
        for (size_t t = 1; t < m.dual_objective.size(); ++t) {
            EXPECT_GE(m.dual_objective[t], m.dual_objective[t - 1] - 1e-12) << to_string(kind) << " step " << t;
        }
    }
}

TEST(Svm, RejectsBadInput) {
    Eigen::MatrixXd k = Eigen::MatrixXd::Identity(3, 3);
    EXPECT_THROW(train_svm(k, {1, -1}), std::invalid_argument);
    EXPECT_THROW(train_svm(k, {1, -1, 2}), std::invalid_argument);
    SvmConfig bad;
    bad.c = 0.0;
    EXPECT_THROW(train_svm(k, {1, -1, 1}, bad), std::invalid_argument);
    k(0, 1) = std::nan("");
    EXPECT_THROW(train_svm(k, {1, -1, 1}), std::invalid_argument);
}

TEST(Datasets, LabelBalancedAndReproducible) {
    for (auto kind : {DatasetKind::circles, DatasetKind::moons, DatasetKind::blobs}) {
        sim::Rng a(42), b(42);
        const auto p = make_points(kind, 51, 0.1, a);
        const auto q = make_points(kind, 51, 0.1, b);
        ASSERT_EQ(p.size(), 51u);
        int pos = 0;
        for (int y : p.y) {
            pos += y > 0;
        }
        EXPECT_EQ(pos, 26);
        EXPECT_EQ(p.x, q.x);
        EXPECT_EQ(p.y, q.y);
        EXPECT_EQ(dataset_kind_from_string(to_string(kind)), kind);
    }
    sim::Rng rng(0);
    EXPECT_THROW(make_points(DatasetKind::circles, 3, 0.1, rng), std::invalid_argument);
    EXPECT_THROW(dataset_kind_from_string("spirals"), std::invalid_argument);
}

TEST(Datasets, ZeroSpreadBlobsAreTwoPoints) {
    sim::Rng rng(1);
    const auto p = make_points(DatasetKind::blobs, 20, 0.0, rng);
    for (size_t i = 0; i < p.size(); ++i) {
        const double c = p.y[i] > 0 ? 1.0 : -1.0;
        EXPECT_EQ(p.x[i], (Point{c, c}));
    }
}

TEST(Datasets, NoiselessCirclesAreRadiallySeparable) {
    sim::Rng rng(1);
    const auto p = make_points(DatasetKind::circles, 40, 0.0, rng);
    for (size_t i = 0; i < p.size(); ++i) {
        EXPECT_NEAR(std::hypot(p.x[i][0], p.x[i][1]), p.y[i] > 0 ? 0.6 : 1.0, 1e-12);
    }
}

TEST(Pipeline, BlobsClassifiedAndReportConsistent) {
    const auto r = run_kernel_svm(DatasetKind::blobs, 160, 40, 0.1, {}, 0);
    EXPECT_GE(r.test_accuracy, 0.9);
    ASSERT_EQ(r.test_decision.size(), 40u);
    int hits = 0;
    for (size_t i = 0; i < 40; ++i) {
        hits += (r.test_decision[i] >= 0 ? 1 : -1) == r.test_labels[i];
    }
    EXPECT_DOUBLE_EQ(hits / 40.0, r.test_accuracy);
    const auto j = to_json(r);
    EXPECT_EQ(j["dataset"], "blobs");
    EXPECT_EQ(j["test_decision"].size(), 40u);
}

}  // namespace
}  // namespace mbqml::kernel
