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

#include "mbqml/graph/open_graph.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace mbqml::graph {

QubitState QubitState::plus() {
    const double r = std::numbers::sqrt2 / 2;
    return {cplx(r, 0), cplx(r, 0)};
}

QubitState QubitState::zero() { return {cplx(1, 0), cplx(0, 0)}; }

QubitState QubitState::t_state() {
    const double r = std::numbers::sqrt2 / 2;
    return {cplx(r, 0), r * std::polar(1.0, -std::numbers::pi / 4)};
}

std::optional<double> QubitState::phase() const {
    double n0 = std::abs(a0), n1 = std::abs(a1);
    if (n0 < 1e-12 || std::abs(n0 - n1) > 1e-12 * std::max(1.0, n0)) {
        return std::nullopt;
    }
    return std::arg(a1 / a0);
}

OpenGraph::OpenGraph(int num_nodes, std::vector<Edge> edges, std::vector<int> inputs, std::vector<int> outputs,
                     std::map<int, QubitState> init)
    : num_nodes_(num_nodes), inputs_(std::move(inputs)), outputs_(std::move(outputs)), init_(std::move(init)) {
    if (num_nodes_ < 0) {
        throw std::invalid_argument("negative node count");
    }
    auto check = [&](int v, const char *what) {
        if (v < 0 || v >= num_nodes_) {
            throw std::invalid_argument(std::string(what) + " index " + std::to_string(v) + " out of range");
        }
    };
    adj_.assign(num_nodes_, {});
    for (auto [u, v] : edges) {
        check(u, "edge endpoint");
        check(v, "edge endpoint");
        if (u == v) {
            throw std::invalid_argument("self-loop on node " + std::to_string(u));
        }
        edges_.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    for (auto [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto &nb : adj_) {
        std::sort(nb.begin(), nb.end());
    }

    in_mask_.assign(num_nodes_, false);
    out_mask_.assign(num_nodes_, false);
    for (int v : inputs_) {
        check(v, "input");
        if (in_mask_[v]) {
            throw std::invalid_argument("duplicate input " + std::to_string(v));
        }
        in_mask_[v] = true;
    }
    for (int v : outputs_) {
        check(v, "output");
        if (out_mask_[v]) {
            throw std::invalid_argument("duplicate output " + std::to_string(v));
        }
        out_mask_[v] = true;
    }
    for (const auto &[v, s] : init_) {
        check(v, "init");
        if (in_mask_[v]) {
            throw std::invalid_argument("init state given for input node " + std::to_string(v));
        }
        double norm = std::norm(s.a0) + std::norm(s.a1);
        if (std::abs(norm - 1.0) > 1e-9) {
            throw std::invalid_argument("init state of node " + std::to_string(v) + " is not normalized");
        }
    }
}

bool OpenGraph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= num_nodes_ || v >= num_nodes_) {
        return false;
    }
    const auto &nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

QubitState OpenGraph::init_state(int v) const {
    auto it = init_.find(v);
    return it == init_.end() ? QubitState::plus() : it->second;
}

OpenGraph OpenGraph::with_init(int v, QubitState s) const {
    auto init = init_;
    init[v] = s;
    return OpenGraph(num_nodes_, edges_, inputs_, outputs_, std::move(init));
}

}  // namespace mbqml::graph
