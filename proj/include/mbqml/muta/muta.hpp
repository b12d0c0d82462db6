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

#ifndef MBQML_MUTA_MUTA_HPP_
#define MBQML_MUTA_MUTA_HPP_

#include <optional>
#include <vector>

#include "mbqml/graph/flow.hpp"
#include "mbqml/graph/open_graph.hpp"

namespace mbqml::muta {

// One layer: `width` wires of `columns` nodes (5, or the deeper 6-column
// variant).  With a tip row i, each j in `connectivity` gets a triangle
// Q[i][1] - Q[j][0] - Q[j][1] - Q[j][2] closed by the tip edges
// (Q[i][1], Q[j][0]) and (Q[i][1], Q[j][2]).
struct LayerSpec {
    int width = 1;
    std::optional<int> tip;
    std::vector<int> connectivity;
    int columns = 5;

    // Throws std::invalid_argument on an inconsistent spec.
    void validate() const;
};

// Identifies output row `from_row` of layer `from_layer` with input row
// `to_row` of a later layer `to_layer`.
struct Link {
    int from_layer = 0, from_row = 0, to_layer = 1, to_row = 0;
    bool operator==(const Link &) const = default;
};

struct NetworkSpec {
    std::vector<LayerSpec> layers;
    std::vector<Link> links;

    // Chains layers with the identity map on min(width) rows.
    static NetworkSpec chain(std::vector<LayerSpec> layers);
};

// A realized resource graph together with its (layer, row, column) grid.
struct Network {
    graph::OpenGraph graph;
    // coords[layer][row][col] -> node index.
    std::vector<std::vector<std::vector<int>>> coords;

    int node(int layer, int row, int col) const { return coords.at(layer).at(row).at(col); }
    int depth() const { return static_cast<int>(coords.size()); }
    // Widest layer.
    int max_width() const;
};

Network build_layer(const LayerSpec &spec);

// Merged nodes take the index of the later (input-side) position so that
// numbering stays row-major per layer, skipping the consumed outputs.
// Throws on non-injective or malformed links.
Network concatenate(const NetworkSpec &net);

// Measurement roles.
enum class RoleKind { trainable, fixed, controlled, output };

struct NodeRole {
    RoleKind kind = RoleKind::trainable;
    // Fixed angle, or the initial angle of a trainable/controlled node.
    double angle = 0.0;
    // Fixed nodes only: measure in the Z basis instead of the XY plane.
    bool z_basis = false;
    // Controlled nodes: the learnable angle applies iff every controller
    // reported outcome 1; otherwise `otherwise_angle` is used.
    std::vector<int> controllers;
    double otherwise_angle = 0.0;

    bool operator==(const NodeRole &) const = default;
};

using RoleMap = std::vector<NodeRole>;

// Non-output nodes trainable, outputs output.
RoleMap default_roles(const graph::OpenGraph &g);

// Checks roles against the graph and flow: only outputs may be `output` or a
// Z-basis readout, controllers are strictly earlier measured nodes.
void validate_roles(const graph::OpenGraph &g, const graph::Flow &fl, const RoleMap &roles);

// Precedence pairs (controller, controlled) implied by the roles.
graph::Precedence role_precedence(const RoleMap &roles);

// Nodes carrying a learnable angle, ascending.
std::vector<int> learnable_nodes(const RoleMap &roles);

// A feed-forward classical layer: `width` neurons, where neuron `hub`
// connects to the neurons in `connected` (empty for an unconnected layer).
struct ClassicalLayer {
    int width = 1;
    std::optional<int> hub;
    std::vector<int> connected;
};

NetworkSpec from_classical_geometry(const std::vector<ClassicalLayer> &layers);

}  // namespace mbqml::muta

#endif  // MBQML_MUTA_MUTA_HPP_
