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

#include "mbqml/hea/greedy.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "mbqml/muta/muta.hpp"

namespace mbqml::hea {

namespace {

// Counts evaluations and keeps the global best record.
class Tracker {
   public:
    Tracker(const DiscreteLoss &loss, SearchResult &out) : loss_(loss), out_(out) {
        out_.best_loss = std::numeric_limits<double>::infinity();
    }

    double operator()(const Pattern &p) {
        const double l = loss_(p);
        ++out_.evaluations;
        if (l < out_.best_loss) {
            out_.best_loss = l;
            out_.best_pattern = p;
        }
        out_.log.push_back({out_.evaluations, l, out_.best_loss});
        return l;
    }

   private:
    const DiscreteLoss &loss_;
    SearchResult &out_;
};

Pattern random_pattern(const SearchSpace &space, sim::Rng &rng) {
    std::uniform_int_distribution<int> pick(0, static_cast<int>(kAngles.size()) - 1);
    Pattern p(space.num_nodes, 0);
    for (int v : space.trainable) {
        p[v] = pick(rng);
    }
    return p;
}

void check_space(const SearchSpace &space) {
    std::set<int> seen;
    for (int v : space.trainable) {
        if (v < 0 || v >= space.num_nodes || !seen.insert(v).second) {
            throw std::invalid_argument("search space: trainable node out of range or repeated");
        }
    }
}

}  // namespace

std::vector<double> to_angles(const Pattern &p) {
    std::vector<double> a(p.size());
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] < 0 || p[i] >= static_cast<int>(kAngles.size())) {
            throw std::invalid_argument("to_angles: angle index out of range");
        }
        a[i] = kAngles[p[i]];
    }
    return a;
}

Slices normalize_slices(const Slices &slices, const SearchSpace &space) {
    check_space(space);
    const std::set<int> trainable(space.trainable.begin(), space.trainable.end());
    std::set<int> seen;
    Slices out;
    for (const auto &s : slices) {
        std::vector<int> kept;
        for (int v : s) {
            if (v < 0 || v >= space.num_nodes || !seen.insert(v).second) {
                throw std::invalid_argument("slices: node out of range or repeated");
            }
            if (trainable.count(v)) {
                kept.push_back(v);
            }
        }
        out.push_back(kept);
    }
    for (int v : space.trainable) {
        if (!seen.count(v)) {
            throw std::invalid_argument("slices: trainable node " + std::to_string(v) + " not covered");
        }
    }
    return out;
}

SearchResult greedy_opt(const DiscreteLoss &loss, const SearchSpace &space, const Slices &slices,
                        const GreedyConfig &cfg, sim::Rng &rng) {
    const Slices lambda = normalize_slices(slices, space);
    const int n_slices = static_cast<int>(lambda.size());
    if (!(cfg.epsilon >= 0.0 && cfg.epsilon <= 1.0) || !(cfg.delta > 0.0) || cfg.n_reset < 1 || cfg.l_max < 1 ||
        cfg.l_max > n_slices) {
        throw std::invalid_argument("greedy_opt: need epsilon in [0,1], delta > 0, n_reset >= 1, 1 <= l_max <= |slices|");
    }
    for (int i = 0; i + cfg.l_max <= n_slices; ++i) {
        size_t width = 0;
        for (int k = i; k < i + cfg.l_max; ++k) {
            width += lambda[k].size();
        }
        if (width > static_cast<size_t>(cfg.max_window_nodes)) {
            throw std::invalid_argument("greedy_opt: window of " + std::to_string(width) + " nodes exceeds the limit");
        }
    }

    SearchResult res;
    Tracker eval(loss, res);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    const int n_angles = static_cast<int>(kAngles.size());
    auto finish = [&](const Pattern &p, double l, bool ok) {
        res.success = ok;
        res.pattern = p;
        res.loss = l;
        return res;
    };

    Pattern theta;
    double theta_loss = 0.0;
    for (int reset = 0; reset < cfg.n_reset; ++reset) {
        res.restarts = reset;
        theta = random_pattern(space, rng);
        theta_loss = eval(theta);
        if (theta_loss < cfg.delta) {
            return finish(theta, theta_loss, true);
        }
        for (int m = 1; m <= cfg.l_max; ++m) {
            // LayerOpt(l, theta, Lambda, m, epsilon).
            Pattern best = theta;
            double best_loss = theta_loss;
            for (int i = 0; i + m <= n_slices; ++i) {
                std::vector<int> window;
                for (int k = i; k < i + m; ++k) {
                    window.insert(window.end(), lambda[k].begin(), lambda[k].end());
                }
                long count = 1;
                for (size_t k = 0; k < window.size(); ++k) {
                    count *= n_angles;
                }
                for (long a = 0; a < count; ++a) {
                    Pattern curr = best;
                    long r = a;
                    for (size_t k = window.size(); k-- > 0;) {
                        curr[window[k]] = static_cast<int>(r % n_angles);
                        r /= n_angles;
                    }
                    const double l = eval(curr);
                    if (l < best_loss || (cfg.epsilon > 0.0 && coin(rng) < cfg.epsilon)) {
                        best = std::move(curr);
                        best_loss = l;
                    }
                    if (l < cfg.delta) {
                        return finish(best, best_loss, true);
                    }
                }
            }
            theta = std::move(best);
            theta_loss = best_loss;
        }
    }
    return finish(theta, theta_loss, false);
}

SearchResult random_search(const DiscreteLoss &loss, const SearchSpace &space, long budget, sim::Rng &rng) {
    check_space(space);
    if (budget < 1) {
        throw std::invalid_argument("random_search: budget must be >= 1");
    }
    SearchResult res;
    Tracker eval(loss, res);
    for (long b = 0; b < budget; ++b) {
        eval(random_pattern(space, rng));
    }
    res.pattern = res.best_pattern;
    res.loss = res.best_loss;
    return res;
}

ExhaustiveResult exhaustive_search(const DiscreteLoss &loss, const SearchSpace &space, const std::vector<int> &choices,
                                   double tol) {
    check_space(space);
    if (choices.empty()) {
        throw std::invalid_argument("exhaustive_search: no angle choices");
    }
    long count = 1;
    for (size_t k = 0; k < space.trainable.size(); ++k) {
        count *= static_cast<long>(choices.size());
        if (count > 531441) {
            throw std::invalid_argument("exhaustive_search: too many assignments");
        }
    }
    ExhaustiveResult res;
    res.min_loss = std::numeric_limits<double>::infinity();
    std::vector<std::pair<double, Pattern>> all;
    const long base = static_cast<long>(choices.size());
    for (long a = 0; a < count; ++a) {
        Pattern p(space.num_nodes, 0);
        long r = a;
        for (size_t k = space.trainable.size(); k-- > 0;) {
            p[space.trainable[k]] = choices[r % base];
            r /= base;
        }
        const double l = loss(p);
        res.min_loss = std::min(res.min_loss, l);
        all.emplace_back(l, std::move(p));
    }
    res.evaluations = count;
    for (auto &[l, p] : all) {
        if (l <= res.min_loss + tol) {
            res.optimal.push_back(std::move(p));
        }
    }
    return res;
}

graph::OpenGraph inject_magic(const graph::OpenGraph &g, const std::vector<int> &nodes) {
    graph::OpenGraph out = g;
    for (int v : nodes) {
        if (v < 0 || v >= g.num_nodes() || g.is_input(v) || g.is_output(v)) {
            throw std::invalid_argument("inject_magic: node " + std::to_string(v) + " is not a resource node");
        }
        out = out.with_init(v, graph::QubitState::t_state());
    }
    return out;
}

sim::Mat t_isingxx_target() {
    sim::Mat t = sim::Mat::Identity(4, 4);
    // Wire 0 is the low bit.
    t(1, 1) = t(3, 3) = std::polar(1.0, -std::numbers::pi / 4);
    return t * sim::ising_xx(-std::numbers::pi / 4);
}

Slices default_slices() { return {{0}, {5}, {6}, {1}, {2, 7}, {3, 8}, {4, 9}}; }

double HeaTask::loss(const Pattern &p, const std::vector<int> &idx) const {
    return learn::infidelity(model.unitary_from_slots(to_angles(p)), data, idx);
}

HeaTask make_t_isingxx_task(int n_total, int n_train, bool inject, sim::Rng &rng) {
    auto g = muta::build_layer(muta::LayerSpec{2, 0, {1}, 5}).graph;
    if (inject) {
        g = inject_magic(g, {2, 6});
    }
    HeaTask t{learn::GateModel::all_trainable(g), learn::make_unitary_dataset(t_isingxx_target(), n_total, n_train, rng),
              {}, default_slices()};
    t.space.num_nodes = g.num_nodes();
    for (int v = 0; v < g.num_nodes(); ++v) {
        if (!g.is_output(v)) {
            t.space.trainable.push_back(v);
        }
    }
    return t;
}

std::string log_csv(const SearchResult &r) {
    std::ostringstream os;
    os.precision(17);
    os << "evaluation_index,candidate_loss,best_loss\n";
    for (const auto &e : r.log) {
        os << e.index << ',' << e.candidate_loss << ',' << e.best_loss << '\n';
    }
    return os.str();
}

nlohmann::json to_json(const GreedyConfig &c) {
    return {{"epsilon", c.epsilon},
            {"n_reset", c.n_reset},
            {"l_max", c.l_max},
            {"delta", c.delta},
            {"max_window_nodes", c.max_window_nodes}};
}

GreedyConfig greedy_config_from_json(const nlohmann::json &j) {
    GreedyConfig c;
    c.epsilon = j.value("epsilon", c.epsilon);
    c.n_reset = j.value("n_reset", c.n_reset);
    c.l_max = j.value("l_max", c.l_max);
    c.delta = j.value("delta", c.delta);
    c.max_window_nodes = j.value("max_window_nodes", c.max_window_nodes);
    return c;
}

nlohmann::json to_json(const SearchResult &r) {
    return {{"success", r.success},          {"pattern", r.pattern},     {"loss", r.loss},
            {"best_pattern", r.best_pattern}, {"best_loss", r.best_loss}, {"evaluations", r.evaluations},
            {"restarts", r.restarts}};
}

}  // namespace mbqml::hea
