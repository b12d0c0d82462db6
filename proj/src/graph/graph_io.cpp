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

#include "mbqml/graph/graph_io.hpp"

#include <stdexcept>
#include <string>

namespace mbqml::graph {

using nlohmann::json;

json qubit_state_to_json(const QubitState &s) {
    if (s == QubitState::plus()) {
        return "plus";
    }
    if (s == QubitState::zero()) {
        return "zero";
    }
    if (s == QubitState::t_state()) {
        return "T";
    }
    return json::array({s.a0.real(), s.a0.imag(), s.a1.real(), s.a1.imag()});
}

QubitState qubit_state_from_json(const json &j) {
    if (j.is_string()) {
        auto name = j.get<std::string>();
        if (name == "plus") {
            return QubitState::plus();
        }
        if (name == "zero") {
            return QubitState::zero();
        }
        if (name == "T") {
            return QubitState::t_state();
        }
        throw std::invalid_argument("unknown init state '" + name + "'");
    }
    if (!j.is_array() || j.size() != 4) {
        throw std::invalid_argument("init state must be a name or [re0, im0, re1, im1]");
    }
    return {cplx(j[0].get<double>(), j[1].get<double>()), cplx(j[2].get<double>(), j[3].get<double>())};
}

json to_json(const OpenGraph &g) {
    json edges = json::array();
    for (auto [u, v] : g.edges()) {
        edges.push_back({u, v});
    }
    json init = json::object();
    for (const auto &[v, s] : g.init_states()) {
        init[std::to_string(v)] = qubit_state_to_json(s);
    }
    return {{"nodes", g.num_nodes()},
            {"edges", edges},
            {"inputs", g.inputs()},
            {"outputs", g.outputs()},
            {"init", init}};
}

OpenGraph graph_from_json(const json &j) {
    std::vector<Edge> edges;
    for (const auto &e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) {
            throw std::invalid_argument("edge must be a pair");
        }
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    std::map<int, QubitState> init;
    if (j.contains("init")) {
        for (const auto &[key, value] : j.at("init").items()) {
            init[std::stoi(key)] = qubit_state_from_json(value);
        }
    }
    return OpenGraph(j.at("nodes").get<int>(), std::move(edges), j.at("inputs").get<std::vector<int>>(),
                     j.at("outputs").get<std::vector<int>>(), std::move(init));
}

json to_json(const Flow &fl) { return {{"f", fl.f}, {"order", fl.order}}; }

}  // namespace mbqml::graph
