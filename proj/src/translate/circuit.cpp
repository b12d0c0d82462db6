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

#include "mbqml/translate/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "mbqml/sim/state.hpp"

namespace mbqml::translate {

using nlohmann::json;

const char *gate_name(GateKind k) {
    switch (k) {
        case GateKind::rz:
            return "rz";
        case GateKind::rx:
            return "rx";
        case GateKind::h:
            return "h";
        case GateKind::cz:
            return "cz";
        case GateKind::cnot:
            return "cnot";
        case GateKind::ising_xx:
            return "ising_xx";
    }
    return "?";
}

namespace {

GateKind kind_from_name(const std::string &s) {
    for (auto k : {GateKind::rz, GateKind::rx, GateKind::h, GateKind::cz, GateKind::cnot, GateKind::ising_xx}) {
        if (s == gate_name(k)) {
            return k;
        }
    }
    throw std::invalid_argument("unknown gate '" + s + "'");
}

}  // namespace

void GateCircuit::bind(std::span<const double> slots) {
    for (auto &g : gates) {
        if (g.param < 0) {
            continue;
        }
        if (g.param >= static_cast<int>(slots.size())) {
            throw std::out_of_range("angle slot " + std::to_string(g.param) + " not provided");
        }
        g.angle = g.coeff * slots[g.param] + g.offset;
    }
}

int GateCircuit::num_slots() const {
    int m = 0;
    for (const auto &g : gates) {
        m = std::max(m, g.param + 1);
    }
    return m;
}

Eigen::MatrixXcd circuit_unitary(const GateCircuit &c) {
    if (c.num_wires > 12) {
        throw std::length_error("dense unitaries are limited to 12 wires");
    }
    const Eigen::Index dim = Eigen::Index{1} << c.num_wires;
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(dim, dim);
    for (Eigen::Index col = 0; col < dim; ++col) {
        sim::StateVector s(u.col(col));
        sim::apply_circuit(s, c);
        u.col(col) = s.amps;
    }
    return u;
}

double trace_overlap(const Eigen::MatrixXcd &u, const Eigen::MatrixXcd &v) {
    return std::abs((u.adjoint() * v).trace()) / static_cast<double>(u.rows());
}

json to_json(const GateCircuit &c) {
    json gates = json::array();
    for (const auto &g : c.gates) {
        json jg = {{"gate", gate_name(g.kind)}, {"wires", g.is_two_qubit() ? json{g.q0, g.q1} : json{g.q0}}};
        if (g.is_rotation()) {
            jg["angle"] = g.angle;
        }
        if (g.param >= 0) {
            jg["param"] = g.param;
            jg["coeff"] = g.coeff;
            jg["offset"] = g.offset;
        } else if (g.kind == GateKind::rz || g.kind == GateKind::rx) {
            jg["offset"] = g.offset;
        }
        gates.push_back(std::move(jg));
    }
    return {{"num_wires", c.num_wires},
            {"input_nodes", c.input_nodes},
            {"output_wires", c.output_wires},
            {"gates", gates}};
}

GateCircuit circuit_from_json(const json &j) {
    GateCircuit c;
    c.num_wires = j.at("num_wires").get<int>();
    c.input_nodes = j.value("input_nodes", std::vector<int>{});
    c.output_wires = j.value("output_wires", std::vector<int>{});
    for (const auto &jg : j.at("gates")) {
        Gate g;
        g.kind = kind_from_name(jg.at("gate").get<std::string>());
        auto wires = jg.at("wires").get<std::vector<int>>();
        if (wires.size() != (g.is_two_qubit() ? 2u : 1u)) {
            throw std::invalid_argument("wrong wire count for gate");
        }
        g.q0 = wires[0];
        if (wires.size() == 2) {
            g.q1 = wires[1];
        }
        g.angle = jg.value("angle", 0.0);
        g.param = jg.value("param", -1);
        g.coeff = jg.value("coeff", 0.0);
        g.offset = jg.value("offset", 0.0);
        c.gates.push_back(g);
    }
    return c;
}

std::string to_text(const GateCircuit &c) {
    std::ostringstream out;
    out.precision(17);
    for (const auto &g : c.gates) {
        out << gate_name(g.kind) << ' ' << g.q0;
        if (g.is_two_qubit()) {
            out << ' ' << g.q1;
        }
        if (g.is_rotation()) {
            out << ' ' << g.angle;
        }
        if (g.param >= 0) {
            out << " @" << g.param;
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace mbqml::translate
