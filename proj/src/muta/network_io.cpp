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

#include "mbqml/muta/network_io.hpp"

#include <stdexcept>
#include <string>

#include "mbqml/graph/graph_io.hpp"

namespace mbqml::muta {

using nlohmann::json;

RealizedNetwork realize(const NetworkFile &file) {
    RealizedNetwork out{concatenate(file.spec), {}};
    auto &g = out.network.graph;
    // A global input with an explicit preparation state becomes a prepared
    // node rather than an input.
    std::vector<int> inputs;
    for (int v : g.inputs()) {
        if (!file.init.count(v)) {
            inputs.push_back(v);
        }
    }
    g = graph::OpenGraph(g.num_nodes(), g.edges(), std::move(inputs), g.outputs(), file.init);
    out.roles = default_roles(g);
    for (const auto &[v, r] : file.roles) {
        if (v < 0 || v >= g.num_nodes()) {
            throw std::invalid_argument("role given for unknown node " + std::to_string(v));
        }
        out.roles[v] = r;
    }
    return out;
}

json to_json(const LayerSpec &spec) {
    json j = {{"width", spec.width}, {"connectivity", spec.connectivity}, {"columns", spec.columns}};
    j["tip"] = spec.tip ? json(*spec.tip) : json(nullptr);
    return j;
}

LayerSpec layer_from_json(const json &j) {
    LayerSpec spec;
    spec.width = j.at("width").get<int>();
    if (j.contains("tip") && !j.at("tip").is_null()) {
        spec.tip = j.at("tip").get<int>();
    }
    spec.connectivity = j.value("connectivity", std::vector<int>{});
    spec.columns = j.value("columns", 5);
    spec.validate();
    return spec;
}

namespace {

const char *kind_name(RoleKind k) {
    switch (k) {
        case RoleKind::trainable:
            return "trainable";
        case RoleKind::fixed:
            return "fixed";
        case RoleKind::controlled:
            return "controlled";
        case RoleKind::output:
            return "output";
    }
    return "?";
}

RoleKind kind_from_name(const std::string &s) {
    if (s == "trainable") return RoleKind::trainable;
    if (s == "fixed") return RoleKind::fixed;
    if (s == "controlled") return RoleKind::controlled;
    if (s == "output") return RoleKind::output;
    throw std::invalid_argument("unknown role '" + s + "'");
}

}  // namespace

json to_json(const NodeRole &role) {
    json j = {{"kind", kind_name(role.kind)}, {"angle", role.angle}};
    if (role.z_basis) {
        j["basis"] = "Z";
    }
    if (role.kind == RoleKind::controlled) {
        j["controllers"] = role.controllers;
        j["otherwise_angle"] = role.otherwise_angle;
    }
    return j;
}

NodeRole role_from_json(const json &j) {
    NodeRole r;
    r.kind = kind_from_name(j.at("kind").get<std::string>());
    r.angle = j.value("angle", 0.0);
    r.z_basis = j.value("basis", std::string("XY")) == "Z";
    r.controllers = j.value("controllers", std::vector<int>{});
    r.otherwise_angle = j.value("otherwise_angle", 0.0);
    return r;
}

json to_json(const NetworkFile &file) {
    json layers = json::array();
    for (const auto &l : file.spec.layers) {
        layers.push_back(to_json(l));
    }
    json links = json::array();
    for (const auto &lk : file.spec.links) {
        links.push_back({lk.from_layer, lk.from_row, lk.to_layer, lk.to_row});
    }
    json roles = json::object();
    for (const auto &[v, r] : file.roles) {
        roles[std::to_string(v)] = to_json(r);
    }
    json init = json::object();
    for (const auto &[v, s] : file.init) {
        init[std::to_string(v)] = graph::qubit_state_to_json(s);
    }
    return {{"layers", layers}, {"links", links}, {"roles", roles}, {"init", init}};
}

NetworkFile network_from_json(const json &j) {
    NetworkFile file;
    for (const auto &l : j.at("layers")) {
        file.spec.layers.push_back(layer_from_json(l));
    }
    if (j.contains("links")) {
        for (const auto &lk : j.at("links")) {
            if (!lk.is_array() || lk.size() != 4) {
                throw std::invalid_argument("link must be [from_layer, from_row, to_layer, to_row]");
            }
            file.spec.links.push_back({lk[0].get<int>(), lk[1].get<int>(), lk[2].get<int>(), lk[3].get<int>()});
        }
    } else {
        file.spec = NetworkSpec::chain(file.spec.layers);
    }
    if (j.contains("roles")) {
        for (const auto &[key, value] : j.at("roles").items()) {
            file.roles[std::stoi(key)] = role_from_json(value);
        }
    }
    if (j.contains("init")) {
        for (const auto &[key, value] : j.at("init").items()) {
            file.init[std::stoi(key)] = graph::qubit_state_from_json(value);
        }
    }
    return file;
}

}  // namespace mbqml::muta
