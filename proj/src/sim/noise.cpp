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

#include "mbqml/sim/noise.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mbqml::sim {

void NoiseChannel::validate() const {
    switch (kind) {
        case Kind::none:
            return;
        case Kind::depolarizing:
        case Kind::bitflip:
            if (!(p >= 0.0 && p <= 1.0)) {
                throw std::invalid_argument("noise probability must lie in [0, 1]");
            }
            return;
        case Kind::brownian:
            if (!(dt > 0.0) || r < 1) {
                throw std::invalid_argument("brownian noise needs dt > 0 and r >= 1");
            }
            return;
    }
}

void depolarize(DensityMatrix &rho, int q, double p) {
    DensityMatrix x = rho, y = rho, z = rho;
    apply_1q(x.rho.data(), 2 * rho.n, q, pauli_x());
    apply_1q(x.rho.data(), 2 * rho.n, q + rho.n, pauli_x().conjugate());
    apply_1q(y.rho.data(), 2 * rho.n, q, pauli_y());
    apply_1q(y.rho.data(), 2 * rho.n, q + rho.n, pauli_y().conjugate());
    apply_1q(z.rho.data(), 2 * rho.n, q, pauli_z());
    apply_1q(z.rho.data(), 2 * rho.n, q + rho.n, pauli_z().conjugate());
    rho.rho = (1.0 - p) * rho.rho + (p / 3.0) * (x.rho + y.rho + z.rho);
}

void bit_flip(DensityMatrix &rho, int q, double p) {
    DensityMatrix x = rho;
    apply_1q(x.rho.data(), 2 * rho.n, q, pauli_x());
    apply_1q(x.rho.data(), 2 * rho.n, q + rho.n, pauli_x());
    rho.rho = (1.0 - p) * rho.rho + p * x.rho;
}

void apply_channel(DensityMatrix &rho, const NoiseChannel &ch) {
    ch.validate();
    for (int q = 0; q < rho.n; ++q) {
        if (ch.kind == NoiseChannel::Kind::depolarizing) {
            depolarize(rho, q, ch.p);
        } else if (ch.kind == NoiseChannel::Kind::bitflip) {
            bit_flip(rho, q, ch.p);
        } else if (ch.kind == NoiseChannel::Kind::brownian) {
            throw std::invalid_argument("brownian noise acts on data, not as a fixed channel");
        }
    }
}

double brownian_strength(double dt, int r, int n) {
    return dt / (2.0 * std::numbers::pi) * std::sqrt(std::ldexp(1.0, n) * r);
}

std::vector<StateVector> apply_data_noise(const std::vector<StateVector> &labels, const NoiseChannel &ch, Rng &rng) {
    ch.validate();
    std::vector<StateVector> out;
    out.reserve(labels.size());
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (const auto &label : labels) {
        StateVector s = label;
        if (ch.kind == NoiseChannel::Kind::bitflip) {
            for (int q = 0; q < s.n; ++q) {
                double f = unif(rng);
                if (std::ceil(ch.p - f) >= 1.0) {
                    apply_1q(s.amps.data(), s.n, q, pauli_x());
                }
            }
        } else if (ch.kind == NoiseChannel::Kind::brownian) {
            for (int j = 0; j <= ch.r; ++j) {
                s.amps = expi_hermitian(sample_gue(s.n, rng), ch.dt) * s.amps;
            }
        } else if (ch.kind == NoiseChannel::Kind::depolarizing) {
            throw std::invalid_argument("depolarizing noise is a resource channel, not a data unitary");
        }
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace mbqml::sim
