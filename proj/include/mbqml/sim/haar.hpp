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

#ifndef MBQML_SIM_HAAR_HPP_
#define MBQML_SIM_HAAR_HPP_

#include <random>

#include "mbqml/sim/state.hpp"

namespace mbqml::sim {

// Every stochastic routine in the library draws from this engine, seeded
// with the 64-bit seed of the run configuration.
using Rng = std::mt19937_64;

// Normalized complex Gaussian vector.
StateVector sample_haar_state(int n, Rng &rng);
// QR of a complex Ginibre matrix with the phases of R's diagonal moved into Q.
Mat sample_haar_unitary(int n, Rng &rng);
// GUE matrix: real N(0,1) diagonal, complex off-diagonal with E|H_ij|^2 = 1.
Mat sample_gue(int n, Rng &rng);
// exp(i t H) for Hermitian H.
Mat expi_hermitian(const Mat &h, double t);

}  // namespace mbqml::sim

#endif  // MBQML_SIM_HAAR_HPP_
