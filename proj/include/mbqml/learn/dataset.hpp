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

#ifndef MBQML_LEARN_DATASET_HPP_
#define MBQML_LEARN_DATASET_HPP_

#include <vector>

#include "json.hpp"
#include "mbqml/sim/haar.hpp"
#include "mbqml/sim/noise.hpp"
#include "mbqml/sim/state.hpp"

namespace mbqml::learn {

// Input/target pairs with disjoint train and test index sets.
struct PairDataset {
    std::vector<sim::StateVector> inputs;
    std::vector<sim::StateVector> targets;
    std::vector<int> train;
    std::vector<int> test;

    int size() const { return static_cast<int>(inputs.size()); }
    int num_qubits() const { return inputs.empty() ? 0 : inputs.front().n; }
    // Throws std::invalid_argument on mismatched sizes or qubit counts,
    // out-of-range or overlapping splits.
    void validate() const;
};

// n_total Haar-random inputs |psi>, targets U|psi>; the first n_train pairs
// form the training split.
PairDataset make_unitary_dataset(const sim::Mat &u, int n_total, int n_train, sim::Rng &rng);

// Replaces the training targets by V_i |phi_i> with V_i drawn from `ch`
// (bit-flip or Brownian); test targets stay clean.
PairDataset with_noisy_training_targets(const PairDataset &ds, const sim::NoiseChannel &ch, sim::Rng &rng);

nlohmann::json to_json(const PairDataset &ds);
PairDataset dataset_from_json(const nlohmann::json &j);

}  // namespace mbqml::learn

#endif  // MBQML_LEARN_DATASET_HPP_
