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

#include "mbqml/learn/gate_model.hpp"

#include <numbers>
#include <stdexcept>

#include "mbqml/sim/mbqc.hpp"

namespace mbqml::learn {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2;

}  // namespace

std::vector<double> Parameterization::expand(std::span<const double> params) const {
    if (static_cast<int>(params.size()) != num_params()) {
        throw std::invalid_argument("parameterization: expected " + std::to_string(num_params()) + " parameters");
    }
    std::vector<double> slots = base;
    for (size_t k = 0; k < tie.size(); ++k) {
        for (int s : tie[k]) {
            slots[s] = params[k];
        }
    }
    return slots;
}

std::vector<double> Parameterization::contract(std::span<const double> slots) const {
    std::vector<double> params;
    for (const auto &t : tie) {
        params.push_back(slots[t.front()]);
    }
    return params;
}

Parameterization Parameterization::per_slot(const std::vector<int> &slots, int num_slots) {
    Parameterization p;
    p.base.assign(num_slots, 0.0);
    for (int s : slots) {
        if (s < 0 || s >= num_slots) {
            throw std::invalid_argument("parameterization: slot out of range");
        }
        p.tie.push_back({s});
    }
    return p;
}

Parameterization Parameterization::from_roles(const muta::RoleMap &roles) {
    Parameterization p;
    for (const auto &r : roles) {
        p.base.push_back(r.angle);
    }
    for (int v : muta::learnable_nodes(roles)) {
        p.tie.push_back({v});
    }
    return p;
}

std::vector<double> parameter_shift(const SlotFunction &f, const Parameterization &par,
                                    std::span<const double> params) {
    auto jac = parameter_shift_jacobian([&](const std::vector<double> &s) { return std::vector<double>{f(s)}; },
                                        par, params);
    std::vector<double> g;
    for (const auto &row : jac) {
        g.push_back(row[0]);
    }
    return g;
}

std::vector<std::vector<double>> parameter_shift_jacobian(const SlotVectorFunction &f, const Parameterization &par,
                                                          std::span<const double> params) {
    const auto slots = par.expand(params);
    std::vector<std::vector<double>> jac(par.num_params());
    for (int k = 0; k < par.num_params(); ++k) {
        for (int s : par.tie[k]) {
            auto plus = slots, minus = slots;
            plus[s] += kHalfPi;
            minus[s] -= kHalfPi;
            auto fp = f(plus), fm = f(minus);
            if (jac[k].empty()) {
                jac[k].assign(fp.size(), 0.0);
            }
            for (size_t j = 0; j < fp.size(); ++j) {
                jac[k][j] += (fp[j] - fm[j]) / 2;
            }
        }
    }
    return jac;
}

std::vector<double> central_difference(const std::function<double(const std::vector<double> &)> &f,
                                       std::span<const double> x, double h) {
    std::vector<double> g(x.size());
    std::vector<double> y(x.begin(), x.end());
    for (size_t k = 0; k < x.size(); ++k) {
        y[k] = x[k] + h;
        double fp = f(y);
        y[k] = x[k] - h;
        double fm = f(y);
        y[k] = x[k];
        g[k] = (fp - fm) / (2 * h);
    }
    return g;
}

GateModel GateModel::all_trainable(const graph::OpenGraph &g) {
    auto fl = graph::find_flow(g);
    if (!fl) {
        throw std::invalid_argument("gate model: graph has no flow");
    }
    GateModel m{g, *fl, translate::translate_symbolic(g, *fl), {}};
    std::vector<int> measured;
    for (int v = 0; v < g.num_nodes(); ++v) {
        if (!g.is_output(v)) {
            measured.push_back(v);
        }
    }
    m.par = Parameterization::per_slot(measured, g.num_nodes());
    return m;
}

GateModel GateModel::from_spec(const muta::NetworkSpec &spec) { return all_trainable(muta::concatenate(spec).graph); }

GateModel GateModel::from_roles(const graph::OpenGraph &g, const muta::RoleMap &roles) {
    for (const auto &r : roles) {
        if (r.z_basis || !r.controllers.empty() || r.kind == muta::RoleKind::controlled) {
            throw std::invalid_argument("gate model: Z readouts and classical control need the instrument model");
        }
    }
    auto fl = graph::find_flow(g);
    if (!fl) {
        throw std::invalid_argument("gate model: graph has no flow");
    }
    muta::validate_roles(g, *fl, roles);
    return {g, *fl, translate::translate_symbolic(g, *fl), Parameterization::from_roles(roles)};
}

translate::MeasurementPattern GateModel::pattern_from_slots(std::span<const double> slots) const {
    return {std::vector<double>(slots.begin(), slots.end())};
}

sim::Mat GateModel::unitary_from_slots(std::span<const double> slots) const {
    auto c = symbolic;
    c.bind(slots);
    sim::Mat u = translate::circuit_unitary(c);
    bool identity = true;
    for (size_t k = 0; k < c.output_wires.size(); ++k) {
        identity = identity && c.output_wires[k] == static_cast<int>(k);
    }
    if (identity) {
        return u;
    }
    // Reorder so that qubit k is the k-th MBQC output.
    sim::Mat out(u.rows(), u.cols());
    for (Eigen::Index j = 0; j < u.cols(); ++j) {
        out.col(j) = sim::permute_qubits(sim::StateVector(sim::Vec(u.col(j))), c.output_wires).amps;
    }
    return out;
}

double infidelity(const sim::Mat &u, const PairDataset &ds, const std::vector<int> &idx) {
    if (idx.empty()) {
        throw std::invalid_argument("infidelity: empty dataset");
    }
    double f = 0.0;
    for (int i : idx) {
        f += std::norm(ds.targets[i].amps.dot(u * ds.inputs[i].amps));
    }
    return 1.0 - f / idx.size();
}

double noisy_resource_infidelity(const GateModel &m, std::span<const double> slots, const PairDataset &ds,
                                 const std::vector<int> &idx, double p) {
    if (idx.empty()) {
        throw std::invalid_argument("infidelity: empty dataset");
    }
    const auto pattern = m.pattern_from_slots(slots);
    double f = 0.0;
    for (int i : idx) {
        auto rho = sim::run_noisy_mbqc(m.graph, m.flow, pattern, sim::DensityMatrix::from_pure(ds.inputs[i]), p);
        f += sim::fidelity(ds.targets[i], rho);
    }
    return 1.0 - f / idx.size();
}

}  // namespace mbqml::learn
