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

#include "mbqml/muta/teleport.hpp"

#include <stdexcept>

namespace mbqml::muta {

NetworkFile teleport_ansatz_file() {
    NetworkFile file;
    file.spec.layers = {LayerSpec{2, 0, {1}, 5}, LayerSpec{2, 0, {1}, 5}, LayerSpec{1, std::nullopt, {}, 5}};
    // Wire A continues into layer 1 row 1; wire B skips layer 1.
    file.spec.links = {Link{0, 0, 1, 1}, Link{0, 1, 2, 0}};
    file.init = {{0, graph::QubitState::zero()}, {4, graph::QubitState::zero()}};

    NodeRole readout;
    readout.kind = RoleKind::fixed;
    readout.z_basis = true;
    file.roles[12] = readout;
    file.roles[17] = readout;

    NodeRole ctrl;
    ctrl.kind = RoleKind::controlled;
    ctrl.controllers = {12};
    file.roles[18] = ctrl;
    ctrl.controllers = {17};
    file.roles[19] = ctrl;
    return file;
}

TeleportAnsatz make_teleport_ansatz() { return make_teleport_ansatz(teleport_ansatz_file()); }

TeleportAnsatz make_teleport_ansatz(const NetworkFile &file) {
    auto net = realize(file);
    auto fl = graph::find_flow(net.network.graph, role_precedence(net.roles));
    if (!fl) {
        throw std::logic_error("teleportation ansatz has no flow compatible with its controls");
    }
    validate_roles(net.network.graph, *fl, net.roles);
    TeleportAnsatz t{std::move(net), std::move(*fl), 8, 22};
    t.input_node = t.net.network.node(1, 0, 0);
    t.output_node = t.net.network.node(2, 0, 4);
    return t;
}

}  // namespace mbqml::muta
