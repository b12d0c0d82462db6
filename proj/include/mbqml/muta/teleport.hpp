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

#ifndef MBQML_MUTA_TELEPORT_HPP_
#define MBQML_MUTA_TELEPORT_HPP_

#include "mbqml/graph/flow.hpp"
#include "mbqml/muta/network_io.hpp"

namespace mbqml::muta {

// Three-stage teleportation instrument:
//   layer 0  (2, tip 0, J={1}) on wires A (nodes 0-3) and B (4-7), both
//            prepared in |0>, entangles A and B;
//   layer 1  (2, tip 0, J={1}) on wires C (8-12, carries the input state)
//            and A (13-17) rotates C,A so that the Z readouts of 12 and 17
//            form a Bell-type measurement;
//   layer 2  single wire B (18-22) with 18 controlled by 12 and 19
//            controlled by 17 applying the outcome-dependent correction.
// Node 22 is the only unmeasured output.
struct TeleportAnsatz {
    RealizedNetwork net;
    graph::Flow flow;
    int input_node = 8;
    int output_node = 22;
};

NetworkFile teleport_ansatz_file();
TeleportAnsatz make_teleport_ansatz();
TeleportAnsatz make_teleport_ansatz(const NetworkFile &file);

}  // namespace mbqml::muta

#endif  // MBQML_MUTA_TELEPORT_HPP_
