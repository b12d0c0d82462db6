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

#ifndef MBQML_GRAPH_FLOW_HPP_
#define MBQML_GRAPH_FLOW_HPP_

#include <optional>
#include <utility>
#include <vector>

#include "mbqml/graph/open_graph.hpp"

namespace mbqml::graph {

// Causal flow: successor map plus a concrete measurement schedule.
struct Flow {
    // f[v] is the successor of v, or -1 for output nodes.
    std::vector<int> f;
    // A total order over all nodes (outputs included) compatible with f.
    std::vector<int> order;

    // position[v] = index of v in `order`.
    std::vector<int> positions() const;
};

// Extra "a must be measured before b" requirements, e.g. classically
// controlled measurements.
using Precedence = std::vector<std::pair<int, int>>;

// Finds a causal flow with the backward "unique unprocessed neighbour"
// algorithm; returns nullopt iff the graph has no causal flow.
std::optional<Flow> find_flow(const OpenGraph &g, const Precedence &extra = {});

// Linearizes the precedence relation induced by `f` (plus `extra`) with a
// smallest-index-first Kahn sweep.  Returns nullopt if the relation is cyclic.
std::optional<std::vector<int>> schedule(const OpenGraph &g, const std::vector<int> &f, const Precedence &extra = {});

// Checks domain/range of f, adjacency, and that `order` respects
// i < f(i) and i < j for every j in N(f(i)) \ {i}.
bool verify_flow(const OpenGraph &g, const Flow &fl);

// Exhaustive search over all successor maps; exponential, for cross-checks on
// small graphs only.
bool has_flow_bruteforce(const OpenGraph &g);

// Two-colouring; the smallest node of every component goes to the first set.
std::optional<std::pair<std::vector<int>, std::vector<int>>> bipartition(const OpenGraph &g);

}  // namespace mbqml::graph

#endif  // MBQML_GRAPH_FLOW_HPP_
