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

#include "mbqml/muta/muta.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace mbqml::muta {

void LayerSpec::validate() const {
    if (width < 1) {
        throw std::invalid_argument("layer width must be positive");
    }
    if (columns != 5 && columns != 6) {
        throw std::invalid_argument("layers have 5 or 6 columns");
    }
    if (!tip) {
        if (!connectivity.empty()) {
            throw std::invalid_argument("connectivity given without a tip row");
        }
        return;
    }
    if (*tip < 0 || *tip >= width) {
        throw std::invalid_argument("tip row out of range");
    }
    std::set<int> seen;
    for (int j : connectivity) {
        if (j == *tip) {
            throw std::invalid_argument("tip row listed in its own connectivity");
        }
        if (j < 0 || j >= width || !seen.insert(j).second) {
            throw std::invalid_argument("bad connectivity row " + std::to_string(j));
        }
    }
}

NetworkSpec NetworkSpec::chain(std::vector<LayerSpec> layers) {
    NetworkSpec net;
    for (size_t l = 0; l + 1 < layers.size(); ++l) {
        int k = std::min(layers[l].width, layers[l + 1].width);
        for (int r = 0; r < k; ++r) {
            net.links.push_back({static_cast<int>(l), r, static_cast<int>(l + 1), r});
        }
    }
    net.layers = std::move(layers);
    return net;
}

int Network::max_width() const {
    int w = 0;
    for (const auto &layer : coords) {
        w = std::max(w, static_cast<int>(layer.size()));
    }
    return w;
}

Network build_layer(const LayerSpec &spec) {
    NetworkSpec net;
    net.layers.push_back(spec);
    return concatenate(net);
}

Network concatenate(const NetworkSpec &net) {
    const int L = static_cast<int>(net.layers.size());
    if (L == 0) {
        throw std::invalid_argument("network has no layers");
    }
    for (const auto &layer : net.layers) {
        layer.validate();
    }
    // (layer, row) of an output -> (layer, row) of the input it is merged into.
    std::map<std::pair<int, int>, std::pair<int, int>> out_to_in;
    std::set<std::pair<int, int>> used_inputs;
    for (const auto &lk : net.links) {
        if (lk.from_layer < 0 || lk.from_layer >= L || lk.to_layer <= lk.from_layer || lk.to_layer >= L) {
            throw std::invalid_argument("link must go from a layer to a later layer");
        }
        if (lk.from_row < 0 || lk.from_row >= net.layers[lk.from_layer].width || lk.to_row < 0 ||
            lk.to_row >= net.layers[lk.to_layer].width) {
            throw std::invalid_argument("link row out of range");
        }
        if (!out_to_in.emplace(std::pair{lk.from_layer, lk.from_row}, std::pair{lk.to_layer, lk.to_row}).second) {
            throw std::invalid_argument("output identified with more than one input");
        }
        if (!used_inputs.insert({lk.to_layer, lk.to_row}).second) {
            throw std::invalid_argument("two outputs identified with one input");
        }
    }

    Network result;
    result.coords.resize(L);
    int next = 0;
    for (int l = 0; l < L; ++l) {
        const auto &spec = net.layers[l];
        result.coords[l].assign(spec.width, std::vector<int>(spec.columns, -1));
        for (int r = 0; r < spec.width; ++r) {
            for (int c = 0; c < spec.columns; ++c) {
                if (c == spec.columns - 1 && out_to_in.count({l, r})) {
                    continue;  // numbered with its later input position
                }
                result.coords[l][r][c] = next++;
            }
        }
    }
    for (const auto &[from, to] : out_to_in) {
        int last = net.layers[from.first].columns - 1;
        result.coords[from.first][from.second][last] = result.coords[to.first][to.second][0];
    }

    std::vector<graph::Edge> edges;
    std::vector<int> inputs, outputs;
    for (int l = 0; l < L; ++l) {
        const auto &spec = net.layers[l];
        const auto &q = result.coords[l];
        for (int r = 0; r < spec.width; ++r) {
            for (int c = 0; c + 1 < spec.columns; ++c) {
                edges.emplace_back(q[r][c], q[r][c + 1]);
            }
        }
        if (spec.tip) {
            for (int j : spec.connectivity) {
                edges.emplace_back(q[*spec.tip][1], q[j][0]);
                edges.emplace_back(q[*spec.tip][1], q[j][2]);
            }
        }
        for (int r = 0; r < spec.width; ++r) {
            if (!used_inputs.count({l, r})) {
                inputs.push_back(q[r][0]);
            }
        }
        for (int r = 0; r < spec.width; ++r) {
            if (!out_to_in.count({l, r})) {
                outputs.push_back(q[r][spec.columns - 1]);
            }
        }
    }
    result.graph = graph::OpenGraph(next, std::move(edges), std::move(inputs), std::move(outputs));
    return result;
}

RoleMap default_roles(const graph::OpenGraph &g) {
    RoleMap roles(g.num_nodes());
    for (int v : g.outputs()) {
        roles[v].kind = RoleKind::output;
    }
    return roles;
}

void validate_roles(const graph::OpenGraph &g, const graph::Flow &fl, const RoleMap &roles) {
    if (static_cast<int>(roles.size()) != g.num_nodes()) {
        throw std::invalid_argument("role map size does not match the graph");
    }
    auto pos = fl.positions();
    for (int v = 0; v < g.num_nodes(); ++v) {
        const auto &r = roles[v];
        const std::string where = "node " + std::to_string(v);
        if (g.is_output(v)) {
            bool readout = r.kind == RoleKind::fixed && r.z_basis;
            if (r.kind != RoleKind::output && !readout) {
                throw std::invalid_argument(where + ": outputs are either unmeasured or Z readouts");
            }
        } else if (r.kind == RoleKind::output) {
            throw std::invalid_argument(where + ": only output nodes may have the output role");
        } else if (r.z_basis) {
            throw std::invalid_argument(where + ": Z readouts are only allowed on output nodes");
        }
        if (r.kind == RoleKind::controlled) {
            if (r.controllers.empty()) {
                throw std::invalid_argument(where + ": controlled node without controllers");
            }
            for (int c : r.controllers) {
                if (c < 0 || c >= g.num_nodes()) {
                    throw std::invalid_argument(where + ": controller out of range");
                }
                bool measured = !g.is_output(c) || (roles[c].kind == RoleKind::fixed && roles[c].z_basis);
                if (!measured || pos[c] >= pos[v]) {
                    throw std::invalid_argument(where + ": controller " + std::to_string(c) +
                                                " is not measured strictly earlier");
                }
            }
        } else if (!r.controllers.empty()) {
            throw std::invalid_argument(where + ": controllers given for an uncontrolled node");
        }
    }
}

graph::Precedence role_precedence(const RoleMap &roles) {
    graph::Precedence prec;
    for (int v = 0; v < static_cast<int>(roles.size()); ++v) {
        for (int c : roles[v].controllers) {
            prec.emplace_back(c, v);
        }
    }
    return prec;
}

std::vector<int> learnable_nodes(const RoleMap &roles) {
    std::vector<int> nodes;
    for (int v = 0; v < static_cast<int>(roles.size()); ++v) {
        if (roles[v].kind == RoleKind::trainable || roles[v].kind == RoleKind::controlled) {
            nodes.push_back(v);
        }
    }
    return nodes;
}

NetworkSpec from_classical_geometry(const std::vector<ClassicalLayer> &layers) {
    std::vector<LayerSpec> specs;
    for (const auto &cl : layers) {
        if (cl.width < 1) {
            throw std::invalid_argument("classical layer needs at least one neuron");
        }
        if (!cl.hub && !cl.connected.empty()) {
            throw std::invalid_argument("connections without a hub neuron are not feed-forward expressible");
        }
        LayerSpec spec{cl.width, cl.hub, cl.connected, 5};
        spec.validate();
        specs.push_back(std::move(spec));
    }
    return NetworkSpec::chain(std::move(specs));
}

}  // namespace mbqml::muta
