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

#include "mbqml/learn/dataset.hpp"

#include <stdexcept>

namespace mbqml::learn {

void PairDataset::validate() const {
    if (inputs.size() != targets.size()) {
        throw std::invalid_argument("dataset: input/target count mismatch");
    }
    const int n = num_qubits();
    for (size_t i = 0; i < inputs.size(); ++i) {
        if (inputs[i].n != n || targets[i].n != n) {
            throw std::invalid_argument("dataset: states on different qubit counts");
        }
    }
    std::vector<char> seen(inputs.size(), 0);
    for (const auto *split : {&train, &test}) {
        for (int i : *split) {
            if (i < 0 || i >= size()) {
                throw std::invalid_argument("dataset: split index out of range");
            }
            if (seen[i]++) {
                throw std::invalid_argument("dataset: splits overlap");
            }
        }
    }
}

PairDataset make_unitary_dataset(const sim::Mat &u, int n_total, int n_train, sim::Rng &rng) {
    if (n_train < 0 || n_train > n_total) {
        throw std::invalid_argument("dataset: bad train size");
    }
    int n = 0;
    while ((Eigen::Index{1} << n) < u.rows()) {
        ++n;
    }
    if ((Eigen::Index{1} << n) != u.rows() || u.rows() != u.cols()) {
        throw std::invalid_argument("dataset: target is not a square 2^n matrix");
    }
    PairDataset ds;
    for (int i = 0; i < n_total; ++i) {
        auto psi = sim::sample_haar_state(n, rng);
        ds.targets.emplace_back(sim::Vec(u * psi.amps));
        ds.inputs.push_back(std::move(psi));
        (i < n_train ? ds.train : ds.test).push_back(i);
    }
    return ds;
}

PairDataset with_noisy_training_targets(const PairDataset &ds, const sim::NoiseChannel &ch, sim::Rng &rng) {
    std::vector<sim::StateVector> labels;
    for (int i : ds.train) {
        labels.push_back(ds.targets[i]);
    }
    auto noisy = sim::apply_data_noise(labels, ch, rng);
    PairDataset out = ds;
    for (size_t k = 0; k < ds.train.size(); ++k) {
        out.targets[ds.train[k]] = noisy[k];
    }
    return out;
}

nlohmann::json to_json(const PairDataset &ds) {
    nlohmann::json pairs = nlohmann::json::array();
    for (int i = 0; i < ds.size(); ++i) {
        pairs.push_back({{"input", sim::to_json(ds.inputs[i])}, {"target", sim::to_json(ds.targets[i])}});
    }
    return {{"pairs", pairs}, {"train", ds.train}, {"test", ds.test}};
}

PairDataset dataset_from_json(const nlohmann::json &j) {
    PairDataset ds;
    for (const auto &p : j.at("pairs")) {
        ds.inputs.push_back(sim::state_from_json(p.at("input")));
        ds.targets.push_back(sim::state_from_json(p.at("target")));
    }
    ds.train = j.at("train").get<std::vector<int>>();
    ds.test = j.at("test").get<std::vector<int>>();
    ds.validate();
    return ds;
}

}  // namespace mbqml::learn
