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

#ifndef MBQML_LEARN_TRAIN_HPP_
#define MBQML_LEARN_TRAIN_HPP_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "json.hpp"
#include "mbqml/learn/adam.hpp"
#include "mbqml/learn/dataset.hpp"
#include "mbqml/learn/gate_model.hpp"
#include "mbqml/muta/muta.hpp"
#include "mbqml/sim/haar.hpp"
#include "mbqml/sim/noise.hpp"

namespace mbqml::learn {

// A differentiable training problem over a flat parameter vector.
struct Objective {
    int num_params = 0;
    std::function<double(const std::vector<double> &)> train_loss;
    // Optional; an empty test loss is recorded as NaN.
    std::function<double(const std::vector<double> &)> test_loss;
    std::function<std::vector<double>(const std::vector<double> &)> gradient;
};

struct TrainConfig {
    int steps = 500;
    AdamConfig adam;
    // Start from zeros instead of uniform (-pi, pi].
    bool zero_init = false;
};

nlohmann::json to_json(const TrainConfig &c);
TrainConfig train_config_from_json(const nlohmann::json &j);

struct TrainRun {
    uint64_t seed = 0;
    nlohmann::json config;
    std::vector<double> initial_params;
    std::vector<double> final_params;
    // Entry t is the loss after t optimizer steps (t = 0 .. steps).
    std::vector<double> train_loss;
    std::vector<double> test_loss;

    double final_train_loss() const { return train_loss.back(); }
    double final_test_loss() const { return test_loss.back(); }
};

nlohmann::json to_json(const TrainRun &r);
// "step,train_loss,test_loss" header plus one row per recorded step.
std::string curve_csv(const TrainRun &r);

// Uniform on (-pi, pi], or zeros.
std::vector<double> initial_params(int n, bool zero, sim::Rng &rng);

// Full-batch Adam; records both losses before the first and after every step.
TrainRun train(const Objective &obj, const TrainConfig &cfg, sim::Rng &rng, std::vector<double> init = {});

// Infidelity objective of a gate model on a dataset.  With resource_noise > 0
// the training loss runs on the depolarized resource while the test loss
// always uses the ideal resource.
Objective gate_objective(const GateModel &m, const PairDataset &ds, double resource_noise = 0.0);

// Gate-learning task: Haar-random pairs for `target`, trained on `spec`.
struct GateTask {
    int n_total = 10;
    int n_train = 7;
    TrainConfig train;
    // Data noise on training labels (none, bitflip, brownian).
    sim::NoiseChannel data_noise;
    // Depolarizing strength on the resource during training.
    double resource_noise = 0.0;
};

nlohmann::json to_json(const GateTask &t);

// Draws the dataset, then the initial angles, from `rng`.
TrainRun train_gate(const sim::Mat &target, const muta::NetworkSpec &spec, const GateTask &task, sim::Rng &rng);

}  // namespace mbqml::learn

#endif  // MBQML_LEARN_TRAIN_HPP_
