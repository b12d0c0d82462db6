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

#include "mbqml/learn/train.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

namespace mbqml::learn {

nlohmann::json to_json(const TrainConfig &c) {
    return {{"steps", c.steps}, {"adam", to_json(c.adam)}, {"zero_init", c.zero_init}};
}

TrainConfig train_config_from_json(const nlohmann::json &j) {
    TrainConfig c;
    c.steps = j.value("steps", c.steps);
    if (j.contains("adam")) {
        c.adam = adam_from_json(j.at("adam"));
    }
    c.zero_init = j.value("zero_init", c.zero_init);
    return c;
}

nlohmann::json to_json(const TrainRun &r) {
    auto nan_safe = [](const std::vector<double> &v) {
        nlohmann::json a = nlohmann::json::array();
        for (double x : v) {
            a.push_back(std::isfinite(x) ? nlohmann::json(x) : nlohmann::json(nullptr));
        }
        return a;
    };
    return {{"seed", r.seed},
            {"config", r.config},
            {"initial_params", r.initial_params},
            {"final_params", r.final_params},
            {"train_loss", nan_safe(r.train_loss)},
            {"test_loss", nan_safe(r.test_loss)}};
}

std::string curve_csv(const TrainRun &r) {
    std::ostringstream os;
    os.precision(17);
    os << "step,train_loss,test_loss\n";
    for (size_t t = 0; t < r.train_loss.size(); ++t) {
        os << t << ',' << r.train_loss[t] << ',';
        if (std::isfinite(r.test_loss[t])) {
            os << r.test_loss[t];
        }
        os << '\n';
    }
    return os.str();
}

std::vector<double> initial_params(int n, bool zero, sim::Rng &rng) {
    std::vector<double> p(n, 0.0);
    if (!zero) {
        // (-pi, pi]: reflect the half-open [-pi, pi) draw.
        std::uniform_real_distribution<double> u(-std::numbers::pi, std::numbers::pi);
        for (auto &x : p) {
            x = -u(rng);
        }
    }
    return p;
}

TrainRun train(const Objective &obj, const TrainConfig &cfg, sim::Rng &rng, std::vector<double> init) {
    if (cfg.steps < 0) {
        throw std::invalid_argument("train: negative step count");
    }
    if (init.empty()) {
        init = initial_params(obj.num_params, cfg.zero_init, rng);
    }
    if (static_cast<int>(init.size()) != obj.num_params) {
        throw std::invalid_argument("train: initial parameter count mismatch");
    }
    TrainRun run;
    run.config = to_json(cfg);
    run.initial_params = init;
    auto params = init;
    auto record = [&] {
        run.train_loss.push_back(obj.train_loss(params));
        run.test_loss.push_back(obj.test_loss ? obj.test_loss(params) : std::numeric_limits<double>::quiet_NaN());
    };
    Adam opt(params.size(), cfg.adam);
    record();
    for (int t = 0; t < cfg.steps; ++t) {
        opt.step(params, obj.gradient(params));
        record();
    }
    run.final_params = params;
    return run;
}

Objective gate_objective(const GateModel &m, const PairDataset &ds, double resource_noise) {
    ds.validate();
    Objective obj;
    obj.num_params = m.par.num_params();
    auto clean = [&m, &ds](const std::vector<int> &idx) {
        return [&m, &ds, idx](const std::vector<double> &slots) {
            return infidelity(m.unitary_from_slots(slots), ds, idx);
        };
    };
    SlotFunction train_slots = clean(ds.train);
    if (resource_noise > 0.0) {
        train_slots = [&m, &ds, resource_noise](const std::vector<double> &slots) {
            return noisy_resource_infidelity(m, slots, ds, ds.train, resource_noise);
        };
    }
    obj.train_loss = [&m, train_slots](const std::vector<double> &p) { return train_slots(m.par.expand(p)); };
    if (!ds.test.empty()) {
        obj.test_loss = [&m, test_slots = clean(ds.test)](const std::vector<double> &p) {
            return test_slots(m.par.expand(p));
        };
    }
    obj.gradient = [&m, train_slots](const std::vector<double> &p) { return parameter_shift(train_slots, m.par, p); };
    return obj;
}

nlohmann::json to_json(const GateTask &t) {
    static const char *names[] = {"none", "depolarizing", "bitflip", "brownian"};
    return {{"n_total", t.n_total},
            {"n_train", t.n_train},
            {"train", to_json(t.train)},
            {"data_noise",
             {{"kind", names[static_cast<int>(t.data_noise.kind)]},
              {"p", t.data_noise.p},
              {"dt", t.data_noise.dt},
              {"r", t.data_noise.r}}},
            {"resource_noise", t.resource_noise}};
}

TrainRun train_gate(const sim::Mat &target, const muta::NetworkSpec &spec, const GateTask &task, sim::Rng &rng) {
    const auto model = GateModel::from_spec(spec);
    if (target.rows() != (Eigen::Index{1} << model.symbolic.num_wires)) {
        throw std::invalid_argument("train_gate: target dimension does not match the network width");
    }
    auto ds = make_unitary_dataset(target, task.n_total, task.n_train, rng);
    if (task.data_noise.kind != sim::NoiseChannel::Kind::none) {
        ds = with_noisy_training_targets(ds, task.data_noise, rng);
    }
    auto run = train(gate_objective(model, ds, task.resource_noise), task.train, rng);
    run.config = to_json(task);
    return run;
}

}  // namespace mbqml::learn
