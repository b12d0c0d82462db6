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

#ifndef MBQML_LEARN_INSTRUMENT_HPP_
#define MBQML_LEARN_INSTRUMENT_HPP_

#include <span>
#include <vector>

#include "mbqml/learn/gate_model.hpp"
#include "mbqml/learn/train.hpp"
#include "mbqml/muta/teleport.hpp"
#include "mbqml/sim/haar.hpp"
#include "mbqml/sim/mbqc.hpp"

namespace mbqml::learn {

// A resource graph whose roles may include Z readouts and classically
// controlled nodes; learnable nodes are the parameters.
struct InstrumentModel {
    graph::OpenGraph graph;
    graph::Flow flow;
    muta::RoleMap roles;
    Parameterization par;
    // The single unmeasured output compared against the input.
    int output_node = -1;

    static InstrumentModel from_teleport(const muta::TeleportAnsatz &t);

    // Measurement program with slot values as angles (angle of controlled
    // nodes; their otherwise-angle comes from the roles).
    std::vector<sim::InstrumentNode> program(std::span<const double> slots) const;
};

// Mean over inputs of sum_b P(b) (1 - |<psi|out_b>|^2); branches enumerate
// the Z readouts.
double teleport_infidelity(const InstrumentModel &m, std::span<const double> slots,
                           const std::vector<sim::StateVector> &inputs);

// Hand-derived slot values implementing teleportation: a Bell pair on wires
// A, B; a Bell-type measurement of C, A; Pauli corrections on B.
std::vector<double> textbook_teleport_slots(const InstrumentModel &m);

struct TeleportTask {
    int n_train = 10;
    int n_test = 15;
    TrainConfig train;
};

nlohmann::json to_json(const TeleportTask &t);

// Haar-random inputs (train then test) drawn from `rng`, then the angles.
TrainRun train_teleport(const InstrumentModel &m, const TeleportTask &task, sim::Rng &rng);

}  // namespace mbqml::learn

#endif  // MBQML_LEARN_INSTRUMENT_HPP_
