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

#ifndef MBQML_SIM_STATE_HPP_
#define MBQML_SIM_STATE_HPP_

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "json.hpp"
#include "mbqml/translate/circuit.hpp"

namespace mbqml::sim {

using cplx = std::complex<double>;
using Vec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXcd;
using Mat2 = Eigen::Matrix2cd;
using Mat4 = Eigen::Matrix4cd;

// All kernels use little-endian indexing: qubit q is bit q of the index.
// Two-qubit matrices are indexed by b(q0) + 2 b(q1).
void apply_1q(cplx *amps, int n, int q, const Mat2 &u);
void apply_2q(cplx *amps, int n, int q0, int q1, const Mat4 &u);
void apply_cz(cplx *amps, int n, int a, int b);

Mat2 pauli_x();
Mat2 pauli_y();
Mat2 pauli_z();
Mat2 hadamard();
Mat2 rz(double t);
Mat2 rx(double t);
Mat4 ising_xx(double t);
Mat4 cnot_matrix();
Mat4 cz_matrix();

// Matrix of a single gate acting on its own wires (1q: 2x2, 2q: 4x4 in
// the b(q0) + 2 b(q1) basis).
Mat gate_matrix(const translate::Gate &g);

// `op` acting on `qubits` (op index bit k <-> qubits[k]) embedded in n qubits.
Mat embed(const Mat &op, const std::vector<int> &qubits, int n);

struct StateVector {
    int n = 0;
    Vec amps;

    StateVector() = default;
    explicit StateVector(Vec v);
    static StateVector basis(int n, size_t index = 0);
    // Tensor product of single-qubit states, qubits[0] = bit 0.
    static StateVector product(const std::vector<Vec> &qubits);

    double norm() const { return amps.norm(); }
    void normalize() { amps /= amps.norm(); }
};

struct DensityMatrix {
    int n = 0;
    Mat rho;

    DensityMatrix() = default;
    explicit DensityMatrix(Mat m);
    static DensityMatrix from_pure(const StateVector &s);

    double trace() const { return rho.trace().real(); }
    double purity() const;
    // Hermitian, unit trace, PSD within tolerance.
    bool is_valid(double tol = 1e-9) const;
};

void apply_gate(StateVector &s, const translate::Gate &g);
void apply_gate(DensityMatrix &s, const translate::Gate &g);
void apply_circuit(StateVector &s, const translate::GateCircuit &c);
void apply_circuit(DensityMatrix &s, const translate::GateCircuit &c);
// rho -> U rho U^dag for a full-register unitary.
void apply_unitary(DensityMatrix &s, const Mat &u);

// |<a|b>|^2.
double fidelity(const StateVector &a, const StateVector &b);
// <phi|rho|phi>.
double fidelity(const StateVector &phi, const DensityMatrix &rho);

// Reduced state on `keep` (keep[k] becomes qubit k).
DensityMatrix partial_trace(const DensityMatrix &rho, const std::vector<int> &keep);

// out qubit k = in qubit perm[k].
StateVector permute_qubits(const StateVector &s, const std::vector<int> &perm);

nlohmann::json to_json(const StateVector &s);
StateVector state_from_json(const nlohmann::json &j);

}  // namespace mbqml::sim

#endif  // MBQML_SIM_STATE_HPP_
