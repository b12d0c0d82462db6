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

#ifndef MBQML_GRAPH_OPEN_GRAPH_HPP_
#define MBQML_GRAPH_OPEN_GRAPH_HPP_

#include <complex>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace mbqml::graph {

using cplx = std::complex<double>;

// Single-qubit pure state a0|0> + a1|1>.
struct QubitState {
    cplx a0{1.0, 0.0};
    cplx a1{0.0, 0.0};

    static QubitState plus();
    static QubitState zero();
    // |T> = (|0> + e^{-i pi/4}|1>)/sqrt2.
    static QubitState t_state();

    // A state of the form (|0> + e^{i phi}|1>)/sqrt2 up to global phase is a
    // "phase state"; returns phi if so.
    std::optional<double> phase() const;

    bool operator==(const QubitState &other) const = default;
};

using Edge = std::pair<int, int>;

// An undirected simple graph with designated input and output nodes and
// optional non-default preparation states.  Immutable after construction.
class OpenGraph {
   public:
    OpenGraph() = default;
    // Throws std::invalid_argument on self-loops, out-of-range endpoints,
    // duplicated inputs/outputs or out-of-range init entries.
    OpenGraph(int num_nodes, std::vector<Edge> edges, std::vector<int> inputs, std::vector<int> outputs,
              std::map<int, QubitState> init = {});

    int num_nodes() const { return num_nodes_; }
    // Sorted, each edge stored as (min, max), duplicates removed.
    const std::vector<Edge> &edges() const { return edges_; }
    const std::vector<int> &neighbors(int v) const { return adj_.at(v); }
    bool has_edge(int u, int v) const;

    const std::vector<int> &inputs() const { return inputs_; }
    const std::vector<int> &outputs() const { return outputs_; }
    bool is_input(int v) const { return in_mask_.at(v); }
    bool is_output(int v) const { return out_mask_.at(v); }

    // Preparation state of a non-input node (|+> unless overridden).
    QubitState init_state(int v) const;
    const std::map<int, QubitState> &init_states() const { return init_; }
    OpenGraph with_init(int v, QubitState s) const;

   private:
    int num_nodes_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> inputs_, outputs_;
    std::vector<bool> in_mask_, out_mask_;
    std::map<int, QubitState> init_;
};

}  // namespace mbqml::graph

#endif  // MBQML_GRAPH_OPEN_GRAPH_HPP_
