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

#ifndef MBQML_SIM_NOISE_HPP_
#define MBQML_SIM_NOISE_HPP_

#include <vector>

#include "mbqml/sim/haar.hpp"
#include "mbqml/sim/state.hpp"

namespace mbqml::sim {

struct NoiseChannel {
    enum class Kind { none, depolarizing, bitflip, brownian };
    Kind kind = Kind::none;
    double p = 0.0;
    double dt = 0.0;
    int r = 1;

    static NoiseChannel depolarizing(double p) { return {Kind::depolarizing, p, 0.0, 1}; }
    static NoiseChannel bitflip(double p) { return {Kind::bitflip, p, 0.0, 1}; }
    static NoiseChannel brownian(double dt, int r) { return {Kind::brownian, 0.0, dt, r}; }

    // Throws std::invalid_argument on out-of-range parameters.
    void validate() const;
};

// (1-p) rho + p/3 (X rho X + Y rho Y + Z rho Z) on qubit q.
void depolarize(DensityMatrix &rho, int q, double p);
// (1-p) rho + p X rho X on qubit q.
void bit_flip(DensityMatrix &rho, int q, double p);
// Applies a single-qubit channel to every qubit.
void apply_channel(DensityMatrix &rho, const NoiseChannel &ch);

// (dt / 2 pi) sqrt(2^n r).
double brownian_strength(double dt, int r, int n);

// Per-label random unitary V_i:
//   bitflip:  X on each qubit independently with probability p;
//   brownian: prod_{j=0}^{r} exp(i H_j dt), H_j drawn from the GUE.
std::vector<StateVector> apply_data_noise(const std::vector<StateVector> &labels, const NoiseChannel &ch, Rng &rng);

}  // namespace mbqml::sim

#endif  // MBQML_SIM_NOISE_HPP_
