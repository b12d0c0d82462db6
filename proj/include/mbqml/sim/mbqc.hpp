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

#ifndef MBQML_SIM_MBQC_HPP_
#define MBQML_SIM_MBQC_HPP_

#include <vector>

#include "mbqml/graph/flow.hpp"
#include "mbqml/graph/open_graph.hpp"
#include "mbqml/sim/state.hpp"
#include "mbqml/translate/translate.hpp"

namespace mbqml::sim {

// Direct execution of a measurement pattern.
//
// Qubits are created lazily (prepared state, then CZ to every live
// neighbour) so only a narrow window of the resource state is ever held in
// memory.  Input nodes start live, carrying `input` (bit k <-> inputs()[k]).
// Nodes prepared in a phase state (|0> + e^{i phi}|1>)/sqrt2 are simulated as
// |+> measured at angle - phi, which is the same projector.  Outcome 0 is
// the "+" eigenvector (|0> + e^{i a}|1>)/sqrt2 of M_a = cos a X + sin a Y.
// Returned output states list the unmeasured outputs in outputs() order.

enum class MbqcMode {
    // Post-select outcome 0 everywhere and renormalize.
    ideal,
    // Enumerate all outcome strings; angles adapted from the tracked
    // byproduct frame, X^x Z^z applied to the outputs at the end.
    branch_all,
};

struct Branch {
    // outcomes[k] is the outcome of measured_nodes[k].
    std::vector<int> outcomes;
    double probability = 0.0;
    StateVector state;
};

struct MbqcResult {
    std::vector<int> measured_nodes;
    // A single branch in ideal mode (probability = post-selection weight).
    std::vector<Branch> branches;
};

MbqcResult run_mbqc(const graph::OpenGraph &g, const graph::Flow &fl, const translate::MeasurementPattern &p,
                    const StateVector &input, MbqcMode mode);

// Convenience: the ideal-mode output state.
StateVector run_mbqc_ideal(const graph::OpenGraph &g, const graph::Flow &fl, const translate::MeasurementPattern &p,
                           const StateVector &input);

// Depolarizing noise of strength p on every resource qubit, applied once
// after all of its CZs and before it is measured.  Each measurement is the
// exact channel sum over both outcomes with the flow correction applied
// physically, so no branching is needed.
DensityMatrix run_noisy_mbqc(const graph::OpenGraph &g, const graph::Flow &fl, const translate::MeasurementPattern &p,
                             const DensityMatrix &input, double depolarizing_p);

// Measurement program with classical control, for instruments.
struct InstrumentNode {
    enum class Kind { xy, z_readout, controlled, unmeasured };
    Kind kind = Kind::xy;
    double angle = 0.0;
    // Controlled nodes: `angle` applies iff every controller's outcome is 1,
    // otherwise `otherwise_angle`.
    std::vector<int> controllers;
    double otherwise_angle = 0.0;
};

struct InstrumentBranch {
    // Outcomes of the Z readouts (byproduct-corrected), in schedule order.
    std::vector<int> readout_nodes;
    std::vector<int> readouts;
    double probability = 0.0;
    // Normalized state of the unmeasured outputs.
    StateVector state;
};

// Branches over every Z readout.  XY measurements are deterministic under
// the flow, so by default outcome 0 is post-selected; `forced` (indexed by
// node) selects other XY outcomes, tracking the byproduct frame, which
// yields the same branches up to global phase.
std::vector<InstrumentBranch> run_instrument(const graph::OpenGraph &g, const graph::Flow &fl,
                                             const std::vector<InstrumentNode> &program, const StateVector &input,
                                             const std::vector<int> *forced = nullptr);

}  // namespace mbqml::sim

#endif  // MBQML_SIM_MBQC_HPP_
