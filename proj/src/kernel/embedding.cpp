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

#include "mbqml/kernel/embedding.hpp"

#include <cmath>

#include "mbqml/graph/flow.hpp"
#include "mbqml/muta/muta.hpp"
#include "mbqml/sim/mbqc.hpp"

namespace mbqml::kernel {

namespace {

struct Layer {
    muta::Network net = muta::build_layer(muta::LayerSpec{2, 0, {1}, 5});
    graph::Flow flow = *graph::find_flow(net.graph);
};

const Layer &layer() {
    static const Layer l;
    return l;
}

}  // namespace

double coupling_angle(const Point &x) { return std::cos(x[0]) * std::cos(x[1]); }

sim::StateVector embed(const Point &x) {
    sim::Vec v = sim::Vec::Zero(4);
    v(0) = 1.0;
    auto rzs = [&](sim::Vec &s) {
        sim::apply_1q(s.data(), 2, 0, sim::rz(-x[0]));
        sim::apply_1q(s.data(), 2, 1, sim::rz(-x[1]));
    };
    rzs(v);
    sim::apply_2q(v.data(), 2, 0, 1, sim::ising_xx(-coupling_angle(x)));
    rzs(v);
    return sim::StateVector(v);
}

translate::MeasurementPattern embedding_pattern(const Point &x) {
    auto p = translate::MeasurementPattern::zeros(10);
    p.angles[0] = x[0];
    p.angles[2] = x[0];
    p.angles[5] = x[1];
    p.angles[7] = x[1];
    p.angles[6] = coupling_angle(x);
    return p;
}

sim::StateVector embed_mbqc(const Point &x) {
    const auto &l = layer();
    return sim::run_mbqc_ideal(l.net.graph, l.flow, embedding_pattern(x), sim::StateVector::basis(2, 0));
}

double kernel(const Point &a, const Point &b) { return sim::fidelity(embed(a), embed(b)); }

Eigen::MatrixXd gram(const std::vector<Point> &a, const std::vector<Point> &b) {
    std::vector<sim::StateVector> ea, eb;
    for (const auto &x : a) {
        ea.push_back(embed(x));
    }
    for (const auto &x : b) {
        eb.push_back(embed(x));
    }
    Eigen::MatrixXd k(a.size(), b.size());
    for (size_t i = 0; i < a.size(); ++i) {
        for (size_t j = 0; j < b.size(); ++j) {
            k(i, j) = sim::fidelity(ea[i], eb[j]);
        }
    }
    return k;
}

}  // namespace mbqml::kernel
