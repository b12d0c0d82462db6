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

#ifndef MBQML_LEARN_GATE_MODEL_HPP_
#define MBQML_LEARN_GATE_MODEL_HPP_

#include <functional>
#include <span>
#include <vector>

#include "mbqml/graph/flow.hpp"
#include "mbqml/graph/open_graph.hpp"
#include "mbqml/learn/dataset.hpp"
#include "mbqml/muta/muta.hpp"
#include "mbqml/sim/state.hpp"
#include "mbqml/translate/circuit.hpp"
#include "mbqml/translate/translate.hpp"

namespace mbqml::learn {

// Maps a trainable parameter vector onto per-node angle slots.  Parameter k
// drives every slot in tie[k]; other slots keep their `base` value.
struct Parameterization {
    std::vector<double> base;
    std::vector<std::vector<int>> tie;

    int num_params() const { return static_cast<int>(tie.size()); }
    int num_slots() const { return static_cast<int>(base.size()); }
    std::vector<double> expand(std::span<const double> params) const;
    // Current parameter values read back from slots (first tied slot).
    std::vector<double> contract(std::span<const double> slots) const;

    // One parameter per listed slot.
    static Parameterization per_slot(const std::vector<int> &slots, int num_slots);
    // One parameter per learnable node; base angles from the roles.
    static Parameterization from_roles(const muta::RoleMap &roles);
};

using SlotFunction = std::function<double(const std::vector<double> &slots)>;
using SlotVectorFunction = std::function<std::vector<double>(const std::vector<double> &slots)>;

// Exact gradient for functions that are affine in expectation values where
// every slot enters a single rotation exp(-+i a P/2): for parameter k,
// sum over s in tie[k] of [f(slot_s + pi/2) - f(slot_s - pi/2)] / 2.
std::vector<double> parameter_shift(const SlotFunction &f, const Parameterization &par,
                                    std::span<const double> params);
// Same rule applied componentwise; jac[k][j] = d f_j / d param_k.
std::vector<std::vector<double>> parameter_shift_jacobian(const SlotVectorFunction &f, const Parameterization &par,
                                                          std::span<const double> params);

// Central differences with step h, for cross-checks.
std::vector<double> central_difference(const std::function<double(const std::vector<double> &)> &f,
                                       std::span<const double> x, double h = 1e-5);

// A resource graph with flow, its symbolic circuit (slot = node index) and
// the trainable parameterization.
struct GateModel {
    graph::OpenGraph graph;
    graph::Flow flow;
    translate::GateCircuit symbolic;
    Parameterization par;

    // Every measured node trainable, initial base angles 0.
    static GateModel all_trainable(const graph::OpenGraph &g);
    static GateModel from_spec(const muta::NetworkSpec &spec);
    // Trainable and controlled roles become parameters; throws if a role is
    // a Z readout or classically controlled (not a unitary model).
    static GateModel from_roles(const graph::OpenGraph &g, const muta::RoleMap &roles);

    translate::MeasurementPattern pattern_from_slots(std::span<const double> slots) const;
    sim::Mat unitary_from_slots(std::span<const double> slots) const;
    sim::Mat unitary(std::span<const double> params) const { return unitary_from_slots(par.expand(params)); }
};

// 1 - mean_i |<phi_i| U |psi_i>|^2 over `idx`; throws on an empty index set.
double infidelity(const sim::Mat &u, const PairDataset &ds, const std::vector<int> &idx);
// 1 - mean_i <phi_i| rho_i |phi_i>, rho_i the output of the depolarized
// resource (strength p) on input psi_i.
double noisy_resource_infidelity(const GateModel &m, std::span<const double> slots, const PairDataset &ds,
                                 const std::vector<int> &idx, double p);

}  // namespace mbqml::learn

#endif  // MBQML_LEARN_GATE_MODEL_HPP_
