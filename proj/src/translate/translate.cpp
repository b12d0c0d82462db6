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

#include "mbqml/translate/translate.hpp"

#include <set>
#include <stdexcept>
#include <string>

namespace mbqml::translate {

FPaths f_paths(const graph::OpenGraph &g, const graph::Flow &fl) {
    const int n = g.num_nodes();
    FPaths out;
    out.wire_of.assign(n, -1);
    for (int w = 0; w < static_cast<int>(g.inputs().size()); ++w) {
        std::vector<int> path;
        for (int v = g.inputs()[w]; v >= 0; v = fl.f[v]) {
            if (out.wire_of[v] >= 0) {
                throw std::invalid_argument("f-paths intersect at node " + std::to_string(v));
            }
            out.wire_of[v] = w;
            path.push_back(v);
        }
        if (!g.is_output(path.back())) {
            throw std::invalid_argument("f-path does not end at an output");
        }
        out.paths.push_back(std::move(path));
    }
    for (int v = 0; v < n; ++v) {
        if (out.wire_of[v] < 0) {
            throw std::invalid_argument("node " + std::to_string(v) + " lies on no f-path");
        }
    }
    for (const auto &path : out.paths) {
        for (size_t a = 0; a < path.size(); ++a) {
            for (size_t b = a + 2; b < path.size(); ++b) {
                if (g.has_edge(path[a], path[b])) {
                    throw std::invalid_argument("f-path is not an induced path");
                }
            }
        }
    }
    return out;
}

GateCircuit translate_symbolic(const graph::OpenGraph &g, const graph::Flow &fl) {
    if (g.inputs().size() != g.outputs().size()) {
        throw std::invalid_argument("translation needs |I| = |O|");
    }
    if (!graph::verify_flow(g, fl)) {
        throw std::invalid_argument("invalid flow");
    }
    const FPaths fp = f_paths(g, fl);
    const int n = g.num_nodes();
    const int wires = static_cast<int>(g.inputs().size());

    GateCircuit c;
    c.num_wires = wires;
    c.input_nodes = g.inputs();
    for (int v : g.outputs()) {
        c.output_wires.push_back(fp.wire_of[v]);
    }

    auto phase_of = [&](int v) -> double {
        if (g.is_input(v)) {
            return 0.0;
        }
        auto phi = g.init_state(v).phase();
        if (!phi) {
            throw std::invalid_argument("node " + std::to_string(v) + " is prepared outside the XY equator");
        }
        return *phi;
    };

    std::vector<int> head(g.inputs());
    std::vector<bool> measured(n, false);
    std::set<graph::Edge> done;
    auto key = [](int a, int b) { return graph::Edge{std::min(a, b), std::max(a, b)}; };

    for (int v : fl.order) {
        if (g.is_output(v)) {
            continue;
        }
        const int w = fp.wire_of[v];
        if (head[w] != v) {
            throw std::logic_error("measurement order disagrees with the f-paths");
        }
        for (int u : g.neighbors(v)) {
            if (u == fl.f[v] || measured[u] || done.count(key(u, v))) {
                continue;
            }
            if (head[fp.wire_of[u]] != u) {
                throw std::invalid_argument("junction neighbour " + std::to_string(u) + " of node " +
                                            std::to_string(v) + " is not at the head of its path");
            }
            c.gates.push_back(Gate{GateKind::cz, w, fp.wire_of[u]});
            done.insert(key(u, v));
        }
        Gate r{GateKind::rz, w};
        r.param = v;
        r.coeff = -1.0;
        r.offset = phase_of(v);
        r.angle = r.offset;
        c.gates.push_back(r);
        c.gates.push_back(Gate{GateKind::h, w});
        done.insert(key(v, fl.f[v]));
        measured[v] = true;
        head[w] = fl.f[v];
    }
    for (auto [a, b] : g.edges()) {
        if (!done.count({a, b})) {
            if (!g.is_output(a) || !g.is_output(b)) {
                throw std::logic_error("edge left untranslated");
            }
            c.gates.push_back(Gate{GateKind::cz, fp.wire_of[a], fp.wire_of[b]});
        }
    }
    for (int v : g.outputs()) {
        double phi = phase_of(v);
        if (phi != 0.0) {
            Gate r{GateKind::rz, fp.wire_of[v]};
            r.offset = phi;
            r.angle = phi;
            c.gates.push_back(r);
        }
    }
    return c;
}

GateCircuit translate(const graph::OpenGraph &g, const graph::Flow &fl, const MeasurementPattern &p) {
    if (static_cast<int>(p.angles.size()) != g.num_nodes()) {
        throw std::invalid_argument("pattern size does not match the graph");
    }
    GateCircuit c = translate_symbolic(g, fl);
    c.bind(p.angles);
    return c;
}

}  // namespace mbqml::translate
