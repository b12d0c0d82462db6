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

#ifndef MBQML_KERNEL_EMBEDDING_HPP_
#define MBQML_KERNEL_EMBEDDING_HPP_

#include <array>
#include <vector>

#include "mbqml/sim/state.hpp"
#include "mbqml/translate/translate.hpp"

namespace mbqml::kernel {

using Point = std::array<double, 2>;

// theta = cos(x0) cos(x1).
double coupling_angle(const Point &x);

// Rz1(-x1) Rz0(-x0) exp(i theta X0 X1 / 2) Rz1(-x1) Rz0(-x0) |00>.
sim::StateVector embed(const Point &x);

// Angles on the connected (2,0) layer realizing `embed` with input |00>:
// nodes 0, 2 carry x0; nodes 5, 7 carry x1; node 6 carries theta.
translate::MeasurementPattern embedding_pattern(const Point &x);

// The same state obtained by simulating the measurement pattern.
sim::StateVector embed_mbqc(const Point &x);

// |<phi(x)|phi(x')>|^2.
double kernel(const Point &a, const Point &b);

// K[i][j] = kernel(a[i], b[j]).
Eigen::MatrixXd gram(const std::vector<Point> &a, const std::vector<Point> &b);

}  // namespace mbqml::kernel

#endif  // MBQML_KERNEL_EMBEDDING_HPP_
