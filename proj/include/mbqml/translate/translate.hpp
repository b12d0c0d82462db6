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

#ifndef MBQML_TRANSLATE_TRANSLATE_HPP_
#define MBQML_TRANSLATE_TRANSLATE_HPP_

#include <vector>

#include "mbqml/graph/flow.hpp"
#include "mbqml/graph/open_graph.hpp"
#include "mbqml/translate/circuit.hpp"

namespace mbqml::translate {

// XY-plane angles indexed by node; entries of output nodes are ignored.
// M_a = cos(a) X + sin(a) Y.
struct MeasurementPattern {
    std::vector<double> angles;

    static MeasurementPattern zeros(int num_nodes) { return {std::vector<double>(num_nodes, 0.0)}; }
};

// Paths traced by iterating f from every input.
struct FPaths {
    // paths[w] starts at inputs[w] and ends at an output.
    std::vector<std::vector<int>> paths;
    // wire_of[v]: index of the path containing v.
    std::vector<int> wire_of;
};

// Throws std::invalid_argument unless the paths partition the graph into
// vertex-disjoint induced paths, each ending in an output.
FPaths f_paths(const graph::OpenGraph &g, const graph::Flow &fl);

// Circuit with symbolic angles: every measured node v contributes
// Rz(-a_v + phi_v) then H on its wire, with param = v, where phi_v is the
// phase of v's preparation state (0 for |+>).  Outputs prepared in a phase
// state get a trailing Rz(phi).  Throws on |I| != |O|, an invalid flow, a
// junction neighbour that is not at the head of its path, or a measured
// non-input node prepared in a state outside the XY equator.
GateCircuit translate_symbolic(const graph::OpenGraph &g, const graph::Flow &fl);

GateCircuit translate(const graph::OpenGraph &g, const graph::Flow &fl, const MeasurementPattern &p);

}  // namespace mbqml::translate

#endif  // MBQML_TRANSLATE_TRANSLATE_HPP_
