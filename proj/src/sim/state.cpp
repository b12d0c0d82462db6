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

#include "mbqml/sim/state.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include <Eigen/Eigenvalues>

namespace mbqml::sim {

using translate::Gate;
using translate::GateKind;

namespace {

constexpr cplx kI(0.0, 1.0);

void check_wire(int q, int n) {
    if (q < 0 || q >= n) {
        throw std::out_of_range("wire " + std::to_string(q) + " out of range for " + std::to_string(n) + " qubits");
    }
}

}  // namespace

void apply_1q(cplx *amps, int n, int q, const Mat2 &u) {
    const size_t dim = size_t{1} << n;
    const size_t bit = size_t{1} << q;
    const cplx u00 = u(0, 0), u01 = u(0, 1), u10 = u(1, 0), u11 = u(1, 1);
    for (size_t i = 0; i < dim; ++i) {
        if (i & bit) {
            continue;
        }
        cplx a = amps[i], b = amps[i | bit];
        amps[i] = u00 * a + u01 * b;
        amps[i | bit] = u10 * a + u11 * b;
    }
}

void apply_2q(cplx *amps, int n, int q0, int q1, const Mat4 &u) {
    const size_t dim = size_t{1} << n;
    const size_t b0 = size_t{1} << q0, b1 = size_t{1} << q1;
    for (size_t i = 0; i < dim; ++i) {
        if (i & (b0 | b1)) {
            continue;
        }
        const size_t idx[4] = {i, i | b0, i | b1, i | b0 | b1};
        cplx in[4] = {amps[idx[0]], amps[idx[1]], amps[idx[2]], amps[idx[3]]};
        for (int r = 0; r < 4; ++r) {
            amps[idx[r]] = u(r, 0) * in[0] + u(r, 1) * in[1] + u(r, 2) * in[2] + u(r, 3) * in[3];
        }
    }
}

void apply_cz(cplx *amps, int n, int a, int b) {
    const size_t dim = size_t{1} << n;
    const size_t mask = (size_t{1} << a) | (size_t{1} << b);
    for (size_t i = 0; i < dim; ++i) {
        if ((i & mask) == mask) {
            amps[i] = -amps[i];
        }
    }
}

Mat2 pauli_x() { return (Mat2() << 0, 1, 1, 0).finished(); }
Mat2 pauli_y() { return (Mat2() << 0, -kI, kI, 0).finished(); }
Mat2 pauli_z() { return (Mat2() << 1, 0, 0, -1).finished(); }
Mat2 hadamard() { return (Mat2() << 1, 1, 1, -1).finished() / std::numbers::sqrt2; }

Mat2 rz(double t) { return (Mat2() << std::polar(1.0, -t / 2), 0, 0, std::polar(1.0, t / 2)).finished(); }

Mat2 rx(double t) {
    const double c = std::cos(t / 2), s = std::sin(t / 2);
    return (Mat2() << c, -kI * s, -kI * s, c).finished();
}

Mat4 ising_xx(double t) {
    const double c = std::cos(t / 2), s = std::sin(t / 2);
    Mat4 m = Mat4::Zero();
    for (int k = 0; k < 4; ++k) {
        m(k, k) = c;
        m(k, 3 - k) = -kI * s;
    }
    return m;
}

Mat4 cnot_matrix() {
    Mat4 m = Mat4::Zero();
    m(0, 0) = m(2, 2) = 1;
    m(1, 3) = m(3, 1) = 1;
    return m;
}

Mat4 cz_matrix() {
    Mat4 m = Mat4::Identity();
    m(3, 3) = -1;
    return m;
}

Mat gate_matrix(const Gate &g) {
    switch (g.kind) {
        case GateKind::rz:
            return rz(g.angle);
        case GateKind::rx:
            return rx(g.angle);
        case GateKind::h:
            return hadamard();
        case GateKind::cz:
            return cz_matrix();
        case GateKind::cnot:
            return cnot_matrix();
        case GateKind::ising_xx:
            return ising_xx(g.angle);
    }
    throw std::logic_error("unknown gate kind");
}

Mat embed(const Mat &op, const std::vector<int> &qubits, int n) {
    const size_t dim = size_t{1} << n;
    const int k = static_cast<int>(qubits.size());
    if (op.rows() != (1 << k) || op.cols() != (1 << k)) {
        throw std::invalid_argument("operator size does not match qubit list");
    }
    size_t mask = 0;
    for (int q : qubits) {
        check_wire(q, n);
        mask |= size_t{1} << q;
    }
    auto local = [&](size_t i) {
        size_t l = 0;
        for (int b = 0; b < k; ++b) {
            l |= ((i >> qubits[b]) & 1) << b;
        }
        return l;
    };
    Mat out = Mat::Zero(dim, dim);
    for (size_t r = 0; r < dim; ++r) {
        for (size_t c = 0; c < dim; ++c) {
            if ((r & ~mask) == (c & ~mask)) {
                out(r, c) = op(local(r), local(c));
            }
        }
    }
    return out;
}

StateVector::StateVector(Vec v) : amps(std::move(v)) {
    const auto dim = amps.size();
    n = 0;
    while ((Eigen::Index{1} << n) < dim) {
        ++n;
    }
    if ((Eigen::Index{1} << n) != dim) {
        throw std::invalid_argument("state dimension is not a power of two");
    }
}

StateVector StateVector::basis(int n, size_t index) {
    Vec v = Vec::Zero(Eigen::Index{1} << n);
    v(index) = 1;
    return StateVector(std::move(v));
}

StateVector StateVector::product(const std::vector<Vec> &qubits) {
    Vec v = Vec::Ones(1);
    for (const auto &q : qubits) {
        Vec next(v.size() * 2);
        next.head(v.size()) = q(0) * v;
        next.tail(v.size()) = q(1) * v;
        v = std::move(next);
    }
    return StateVector(std::move(v));
}

DensityMatrix::DensityMatrix(Mat m) : rho(std::move(m)) {
    if (rho.rows() != rho.cols()) {
        throw std::invalid_argument("density matrix must be square");
    }
    n = 0;
    while ((Eigen::Index{1} << n) < rho.rows()) {
        ++n;
    }
    if ((Eigen::Index{1} << n) != rho.rows()) {
        throw std::invalid_argument("density matrix dimension is not a power of two");
    }
}

DensityMatrix DensityMatrix::from_pure(const StateVector &s) { return DensityMatrix(s.amps * s.amps.adjoint()); }

double DensityMatrix::purity() const { return (rho * rho).trace().real(); }

bool DensityMatrix::is_valid(double tol) const {
    if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > tol || std::abs(trace() - 1.0) > tol) {
        return false;
    }
    Eigen::SelfAdjointEigenSolver<Mat> es(rho, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff() >= -tol;
}

void apply_gate(StateVector &s, const Gate &g) {
    check_wire(g.q0, s.n);
    if (g.is_two_qubit()) {
        check_wire(g.q1, s.n);
        if (g.q0 == g.q1) {
            throw std::invalid_argument("two-qubit gate on a single wire");
        }
    }
    switch (g.kind) {
        case GateKind::cz:
            apply_cz(s.amps.data(), s.n, g.q0, g.q1);
            return;
        case GateKind::cnot:
        case GateKind::ising_xx:
            apply_2q(s.amps.data(), s.n, g.q0, g.q1, gate_matrix(g));
            return;
        default:
            apply_1q(s.amps.data(), s.n, g.q0, gate_matrix(g));
    }
}

void apply_gate(DensityMatrix &s, const Gate &g) {
    // Column-major rho viewed as a 2n-qubit vector: row bits 0..n-1, column
    // bits n..2n-1.  U rho U^dag = (U on row bits)(conj U on column bits).
    check_wire(g.q0, s.n);
    const int n2 = 2 * s.n;
    cplx *data = s.rho.data();
    if (g.is_two_qubit()) {
        check_wire(g.q1, s.n);
        if (g.kind == GateKind::cz) {
            apply_cz(data, n2, g.q0, g.q1);
            apply_cz(data, n2, g.q0 + s.n, g.q1 + s.n);
            return;
        }
        Mat4 u = gate_matrix(g);
        apply_2q(data, n2, g.q0, g.q1, u);
        apply_2q(data, n2, g.q0 + s.n, g.q1 + s.n, u.conjugate());
        return;
    }
    Mat2 u = gate_matrix(g);
    apply_1q(data, n2, g.q0, u);
    apply_1q(data, n2, g.q0 + s.n, u.conjugate());
}

void apply_circuit(StateVector &s, const translate::GateCircuit &c) {
    if (c.num_wires != s.n) {
        throw std::invalid_argument("circuit width does not match the state");
    }
    for (const auto &g : c.gates) {
        apply_gate(s, g);
    }
}

void apply_circuit(DensityMatrix &s, const translate::GateCircuit &c) {
    if (c.num_wires != s.n) {
        throw std::invalid_argument("circuit width does not match the state");
    }
    for (const auto &g : c.gates) {
        apply_gate(s, g);
    }
}

void apply_unitary(DensityMatrix &s, const Mat &u) { s.rho = u * s.rho * u.adjoint(); }

double fidelity(const StateVector &a, const StateVector &b) { return std::norm(a.amps.dot(b.amps)); }

double fidelity(const StateVector &phi, const DensityMatrix &rho) {
    return phi.amps.dot(rho.rho * phi.amps).real();
}

DensityMatrix partial_trace(const DensityMatrix &rho, const std::vector<int> &keep) {
    const int n = rho.n;
    const int k = static_cast<int>(keep.size());
    size_t keep_mask = 0;
    for (int q : keep) {
        check_wire(q, n);
        keep_mask |= size_t{1} << q;
    }
    std::vector<int> traced;
    for (int q = 0; q < n; ++q) {
        if (!(keep_mask >> q & 1)) {
            traced.push_back(q);
        }
    }
    auto compose = [&](size_t kept, size_t env) {
        size_t i = 0;
        for (int b = 0; b < k; ++b) {
            i |= ((kept >> b) & 1) << keep[b];
        }
        for (size_t b = 0; b < traced.size(); ++b) {
            i |= ((env >> b) & 1) << traced[b];
        }
        return i;
    };
    const size_t dk = size_t{1} << k, de = size_t{1} << traced.size();
    Mat out = Mat::Zero(dk, dk);
    for (size_t r = 0; r < dk; ++r) {
        for (size_t c = 0; c < dk; ++c) {
            cplx acc = 0;
            for (size_t e = 0; e < de; ++e) {
                acc += rho.rho(compose(r, e), compose(c, e));
            }
            out(r, c) = acc;
        }
    }
    return DensityMatrix(std::move(out));
}

StateVector permute_qubits(const StateVector &s, const std::vector<int> &perm) {
    if (static_cast<int>(perm.size()) != s.n) {
        throw std::invalid_argument("permutation size mismatch");
    }
    const size_t dim = size_t{1} << s.n;
    Vec out(dim);
    for (size_t i = 0; i < dim; ++i) {
        size_t src = 0;
        for (int k = 0; k < s.n; ++k) {
            src |= ((i >> k) & 1) << perm[k];
        }
        out(i) = s.amps(src);
    }
    return StateVector(std::move(out));
}

nlohmann::json to_json(const StateVector &s) {
    auto j = nlohmann::json::array();
    for (Eigen::Index i = 0; i < s.amps.size(); ++i) {
        j.push_back({s.amps(i).real(), s.amps(i).imag()});
    }
    return j;
}

StateVector state_from_json(const nlohmann::json &j) {
    Vec v(j.size());
    for (size_t i = 0; i < j.size(); ++i) {
        v(i) = cplx(j[i].at(0).get<double>(), j[i].at(1).get<double>());
    }
    return StateVector(std::move(v));
}

}  // namespace mbqml::sim
