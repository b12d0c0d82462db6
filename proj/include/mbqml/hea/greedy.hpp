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

#ifndef MBQML_HEA_GREEDY_HPP_
#define MBQML_HEA_GREEDY_HPP_

#include <array>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "json.hpp"
#include "mbqml/graph/open_graph.hpp"
#include "mbqml/learn/dataset.hpp"
#include "mbqml/learn/gate_model.hpp"
#include "mbqml/sim/haar.hpp"

namespace mbqml::hea {

// Permitted measurement angles, indexed 0, 1, 2.
inline constexpr std::array<double, 3> kAngles{0.0, std::numbers::pi / 4, std::numbers::pi / 2};

// Angle index per graph node (entries of untrained nodes stay 0).
using Pattern = std::vector<int>;
using DiscreteLoss = std::function<double(const Pattern &)>;
using Slices = std::vector<std::vector<int>>;

std::vector<double> to_angles(const Pattern &p);

// The search space: which nodes carry a discrete angle.
struct SearchSpace {
    int num_nodes = 0;
    std::vector<int> trainable;
};

struct GreedyConfig {
    double epsilon = 0.0;
    int n_reset = 5;
    int l_max = 4;
    double delta = 1e-3;
    // Largest slice union enumerated in one LayerOpt window.
    int max_window_nodes = 12;
};

struct EvalRecord {
    long index = 0;
    double candidate_loss = 0.0;
    // Minimum loss seen so far, including this evaluation.
    double best_loss = 0.0;
};

struct SearchResult {
    bool success = false;
    // Pattern returned by the algorithm proper.
    Pattern pattern;
    double loss = 0.0;
    // Lowest-loss pattern evaluated at any point.
    Pattern best_pattern;
    double best_loss = 0.0;
    long evaluations = 0;
    int restarts = 0;
    std::vector<EvalRecord> log;
};

// Slices restricted to the trainable nodes (others, e.g. unmeasured outputs,
// are dropped; a slice may become empty).  Throws std::invalid_argument when
// a node is out of range, repeated, or a trainable node is missing.
Slices normalize_slices(const Slices &slices, const SearchSpace &space);

// Slice-wise epsilon-greedy search.  Each reset draws uniform angles, then for
// m = 1..l_max sweeps every window of m consecutive slices and enumerates all
// assignments of the window in lexicographic order (first node slowest,
// angle index ascending), keeping the remaining nodes at the current pattern;
// a candidate replaces the current pattern when strictly better or with
// probability epsilon.  Stops as soon as an evaluated loss drops below delta.
// Throws std::invalid_argument on a bad config or when a window at l_max
// covers more than max_window_nodes nodes.
SearchResult greedy_opt(const DiscreteLoss &loss, const SearchSpace &space, const Slices &slices,
                        const GreedyConfig &cfg, sim::Rng &rng);

// i.i.d. uniform patterns; budget >= 1.
SearchResult random_search(const DiscreteLoss &loss, const SearchSpace &space, long budget, sim::Rng &rng);

struct ExhaustiveResult {
    double min_loss = 0.0;
    // Patterns within `tol` of the minimum.
    std::vector<Pattern> optimal;
    long evaluations = 0;
};

// Every assignment over `choices` (angle indices) on the trainable nodes.
// Throws std::invalid_argument beyond 3^12 assignments.
ExhaustiveResult exhaustive_search(const DiscreteLoss &loss, const SearchSpace &space,
                                   const std::vector<int> &choices = {0, 1, 2}, double tol = 1e-9);

// Sets |T> at the given nodes.  Throws std::invalid_argument for input,
// output or out-of-range nodes.
graph::OpenGraph inject_magic(const graph::OpenGraph &g, const std::vector<int> &nodes);

// (T (x) 1) IsingXX(-pi/4), T = diag(1, e^{-i pi/4}) on wire 0.
sim::Mat t_isingxx_target();

// [{0},{5},{6},{1},{2,7},{3,8},{4,9}] for the connected (2,0) layer.
Slices default_slices();

// Connected (2,0) layer with |T> at nodes 2 and 6, a Haar pair dataset for
// the target, and the infidelity losses over its splits.
struct HeaTask {
    learn::GateModel model;
    learn::PairDataset data;
    SearchSpace space;
    Slices slices;

    double loss(const Pattern &p, const std::vector<int> &idx) const;
    double train_loss(const Pattern &p) const { return loss(p, data.train); }
    double test_loss(const Pattern &p) const { return loss(p, data.test); }
};

HeaTask make_t_isingxx_task(int n_total, int n_train, bool inject, sim::Rng &rng);

// "evaluation_index,candidate_loss,best_loss", one row per evaluation.
std::string log_csv(const SearchResult &r);
nlohmann::json to_json(const GreedyConfig &c);
GreedyConfig greedy_config_from_json(const nlohmann::json &j);
// Summary without the per-evaluation log.
nlohmann::json to_json(const SearchResult &r);

}  // namespace mbqml::hea

#endif  // MBQML_HEA_GREEDY_HPP_
