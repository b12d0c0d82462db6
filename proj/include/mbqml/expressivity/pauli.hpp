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

#ifndef MBQML_EXPRESSIVITY_PAULI_HPP_
#define MBQML_EXPRESSIVITY_PAULI_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "mbqml/sim/state.hpp"
#include "mbqml/translate/circuit.hpp"

namespace mbqml::expressivity {

// i^phase * prod_q s(x_q, z_q) with s(0,0)=I, s(1,0)=X, s(1,1)=Y, s(0,1)=Z.
struct PauliString {
    int n = 0;
    uint64_t x = 0;
    uint64_t z = 0;
    int phase = 0;

    // Letters listed qubit 0 first, optional leading sign: "XZ", "-iYI".
    static PauliString parse(const std::string &s);
    static PauliString single(int n, int q, char letter);

    char letter(int q) const;
    int weight() const;
    bool is_identity() const { return x == 0 && z == 0; }
    // Letters only, qubit 0 first.
    std::string letters() const;
    // Sign-prefixed form.
    std::string to_string() const;
    // Drops the phase.
    PauliString unsigned_part() const { return {n, x, z, 0}; }
    // x | z << n, unique among unsigned strings on n qubits.
    uint64_t key() const { return x | (z << n); }

    bool commutes(const PauliString &o) const;
    PauliString operator*(const PauliString &o) const;
    bool operator==(const PauliString &) const = default;
    bool operator<(const PauliString &o) const { return key() < o.key() || (key() == o.key() && phase < o.phase); }

    sim::Mat matrix() const;
};

// G^dag P G for a Clifford gate (H, CZ, CNOT).
PauliString conjugate(const PauliString &p, const translate::Gate &clifford);

// exp(-i angle P / 2) with angle = coeff * slots[param] + offset (param < 0:
// fixed angle `offset`).
struct PauliRotation {
    PauliString pauli;
    int param = -1;
    double coeff = 0.0;
    double offset = 0.0;
};

// U = C * R_k ... R_1: rotations with all Cliffords pushed to the end.
struct RotationForm {
    int num_wires = 0;
    std::vector<PauliRotation> rotations;
    // Trailing Clifford gates, in application order.
    std::vector<translate::Gate> cliffords;
};

// Each rotation's Pauli is conjugated through the Cliffords preceding it, and
// its sign is folded into coeff/offset so every Pauli has phase 0.
RotationForm rotation_form(const translate::GateCircuit &c);

// Rotations reordered by commuting disjoint-support neighbours: a Kahn sweep
// over "overlapping support, earlier first" with priority (lowest wire,
// original position), emitted as Rz (Z_k), Rx (X_k) or IsingXX (X_a X_b).
// Throws std::domain_error for any other Pauli.
std::vector<translate::Gate> normalized_gates(const RotationForm &form);

}  // namespace mbqml::expressivity

#endif  // MBQML_EXPRESSIVITY_PAULI_HPP_
