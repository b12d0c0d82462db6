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

#include "mbqml/sim/haar.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

namespace mbqml::sim {

namespace {

cplx complex_normal(Rng &rng) {
    std::normal_distribution<double> nd(0.0, 1.0);
    double re = nd(rng);
    double im = nd(rng);
    return {re, im};
}

}  // namespace

StateVector sample_haar_state(int n, Rng &rng) {
    if (n < 1) {
        throw std::invalid_argument("need at least one qubit");
    }
    Vec v(Eigen::Index{1} << n);
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        v(i) = complex_normal(rng);
    }
    v.normalize();
    return StateVector(std::move(v));
}

Mat sample_haar_unitary(int n, Rng &rng) {
    if (n < 1) {
        throw std::invalid_argument("need at least one qubit");
    }
    const Eigen::Index d = Eigen::Index{1} << n;
    Mat z(d, d);
    for (Eigen::Index c = 0; c < d; ++c) {
        for (Eigen::Index r = 0; r < d; ++r) {
            z(r, c) = complex_normal(rng) / std::sqrt(2.0);
        }
    }
    Eigen::HouseholderQR<Mat> qr(z);
    Mat q = qr.householderQ() * Mat::Identity(d, d);
    Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index k = 0; k < d; ++k) {
        cplx diag = r(k, k);
        q.col(k) *= diag / std::abs(diag);
    }
    return q;
}

Mat sample_gue(int n, Rng &rng) {
    const Eigen::Index d = Eigen::Index{1} << n;
    std::normal_distribution<double> nd(0.0, 1.0);
    Mat h(d, d);
    for (Eigen::Index c = 0; c < d; ++c) {
        h(c, c) = nd(rng);
        for (Eigen::Index r = c + 1; r < d; ++r) {
            cplx z = complex_normal(rng) / std::sqrt(2.0);
            h(r, c) = z;
            h(c, r) = std::conj(z);
        }
    }
    return h;
}

Mat expi_hermitian(const Mat &h, double t) {
    Eigen::SelfAdjointEigenSolver<Mat> es(h);
    Vec phases = (es.eigenvalues().cast<cplx>() * cplx(0.0, t)).array().exp();
    return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace mbqml::sim
