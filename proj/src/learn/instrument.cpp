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

#include "mbqml/learn/instrument.hpp"

#include <numbers>
#include <stdexcept>

namespace mbqml::learn {

using sim::InstrumentNode;

InstrumentModel InstrumentModel::from_teleport(const muta::TeleportAnsatz &t) {
    InstrumentModel m;
    m.graph = t.net.network.graph;
    m.flow = t.flow;
    m.roles = t.net.roles;
    m.par = Parameterization::from_roles(m.roles);
    m.output_node = t.output_node;
    return m;
}

std::vector<InstrumentNode> InstrumentModel::program(std::span<const double> slots) const {
    std::vector<InstrumentNode> prog(graph.num_nodes());
    for (int v = 0; v < graph.num_nodes(); ++v) {
        const auto &r = roles[v];
        auto &node = prog[v];
        node.angle = slots[v];
        if (r.z_basis) {
            node.kind = InstrumentNode::Kind::z_readout;
        } else if (r.kind == muta::RoleKind::output) {
            node.kind = InstrumentNode::Kind::unmeasured;
        } else if (r.kind == muta::RoleKind::controlled) {
            node.kind = InstrumentNode::Kind::controlled;
            node.controllers = r.controllers;
            node.otherwise_angle = r.otherwise_angle;
        } else {
            node.kind = InstrumentNode::Kind::xy;
        }
    }
    return prog;
}

double teleport_infidelity(const InstrumentModel &m, std::span<const double> slots,
                           const std::vector<sim::StateVector> &inputs) {
    if (inputs.empty()) {
        throw std::invalid_argument("teleport_infidelity: empty dataset");
    }
    const auto prog = m.program(slots);
    double loss = 0.0;
    for (const auto &psi : inputs) {
        for (const auto &b : sim::run_instrument(m.graph, m.flow, prog, psi)) {
            loss += b.probability * (1.0 - sim::fidelity(psi, b.state));
        }
    }
    return loss / inputs.size();
}

std::vector<double> textbook_teleport_slots(const InstrumentModel &m) {
    if (m.graph.num_nodes() != 23 || m.output_node != 22) {
        throw std::invalid_argument("textbook angles are defined for the standard teleportation ansatz");
    }
    constexpr double kPi = std::numbers::pi, kHalf = kPi / 2;
    std::vector<double> s(m.graph.num_nodes(), 0.0);
    // Layer 0 on |00>: IsingXX(pi/2) then Rz_B(pi/2) gives (|00> + |11>)/sqrt2.
    s[5] = -kHalf;
    s[6] = -kHalf;
    // Layer 1: Rz_C(pi/2), IsingXX_CA(pi/2), Rx_A(pi/2); the Z readouts of
    // 12 and 17 then measure C, A in a maximally entangled basis.
    s[8] = -kHalf;
    s[14] = -kHalf;
    s[16] = -kHalf;
    // Layer 2: Z correction iff 12 reads 1, X correction iff 17 reads 1,
    // then a fixed Rx(-pi/2).
    s[18] = kPi;
    s[19] = kPi;
    s[21] = kHalf;
    return s;
}

nlohmann::json to_json(const TeleportTask &t) {
    return {{"n_train", t.n_train}, {"n_test", t.n_test}, {"train", to_json(t.train)}};
}

TrainRun train_teleport(const InstrumentModel &m, const TeleportTask &task, sim::Rng &rng) {
    std::vector<sim::StateVector> train_in, test_in;
    for (int i = 0; i < task.n_train + task.n_test; ++i) {
        (i < task.n_train ? train_in : test_in).push_back(sim::sample_haar_state(1, rng));
    }
    Objective obj;
    obj.num_params = m.par.num_params();
    auto loss_on = [&m](const std::vector<sim::StateVector> &in) {
        return [&m, &in](const std::vector<double> &slots) { return teleport_infidelity(m, slots, in); };
    };
    SlotFunction train_slots = loss_on(train_in);
    obj.train_loss = [&](const std::vector<double> &p) { return train_slots(m.par.expand(p)); };
    if (!test_in.empty()) {
        obj.test_loss = [&, test_slots = loss_on(test_in)](const std::vector<double> &p) {
            return test_slots(m.par.expand(p));
        };
    }
    obj.gradient = [&](const std::vector<double> &p) { return parameter_shift(train_slots, m.par, p); };
    auto run = train(obj, task.train, rng);
    run.config = to_json(task);
    return run;
}

}  // namespace mbqml::learn
