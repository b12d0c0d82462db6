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

#ifndef MBQML_TRANSLATE_CIRCUIT_HPP_
#define MBQML_TRANSLATE_CIRCUIT_HPP_

#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "json.hpp"

namespace mbqml::translate {

// Rz(t) = exp(-i t Z/2), Rx(t) = exp(-i t X/2), IsingXX(t) = exp(-i t XX/2).
enum class GateKind { rz, rx, h, cz, cnot, ising_xx };

struct Gate {
    GateKind kind = GateKind::h;
    int q0 = 0;
    // Second wire of two-qubit gates (CNOT: q0 control, q1 target).
    int q1 = -1;
    double angle = 0.0;
    // Symbolic angle: angle = coeff * slots[param] + offset when param >= 0.
    int param = -1;
    double coeff = 0.0;
    double offset = 0.0;

    bool is_rotation() const { return kind == GateKind::rz || kind == GateKind::rx || kind == GateKind::ising_xx; }
    bool is_two_qubit() const { return kind == GateKind::cz || kind == GateKind::cnot || kind == GateKind::ising_xx; }
    bool operator==(const Gate &) const = default;
};

const char *gate_name(GateKind k);

struct GateCircuit {
    int num_wires = 0;
    std::vector<Gate> gates;
    // input_nodes[w] is the MBQC input carried by wire w.
    std::vector<int> input_nodes;
    // output_wires[k] is the wire holding the k-th MBQC output.
    std::vector<int> output_wires;

    // Re-evaluates every symbolic angle from `slots` (indexed by param).
    void bind(std::span<const double> slots);
    // Number of slots referenced (max param + 1).
    int num_slots() const;
};

// Dense unitary of the circuit, qubit w = bit w of the basis index.
// Throws std::length_error for more than 12 wires.
Eigen::MatrixXcd circuit_unitary(const GateCircuit &c);

// |Tr(U^dag V)| / dim: 1 iff equal up to global phase.
double trace_overlap(const Eigen::MatrixXcd &u, const Eigen::MatrixXcd &v);

nlohmann::json to_json(const GateCircuit &c);
GateCircuit circuit_from_json(const nlohmann::json &j);
// One gate per line, e.g. "rz 0 -0.5 @3", "cz 0 1".
std::string to_text(const GateCircuit &c);

}  // namespace mbqml::translate

#endif  // MBQML_TRANSLATE_CIRCUIT_HPP_
