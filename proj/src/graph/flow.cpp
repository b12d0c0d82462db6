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

#include "mbqml/graph/flow.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <set>

namespace mbqml::graph {

std::vector<int> Flow::positions() const {
    std::vector<int> pos(order.size(), -1);
    for (size_t k = 0; k < order.size(); ++k) {
        pos[order[k]] = static_cast<int>(k);
    }
    return pos;
}

namespace {

// Successor edges of the precedence DAG: i -> f(i), i -> j for j in N(f(i)) \ {i}.
std::vector<std::vector<int>> precedence_graph(const OpenGraph &g, const std::vector<int> &f, const Precedence &extra) {
    const int n = g.num_nodes();
    std::vector<std::vector<int>> succ(n);
    for (int i = 0; i < n; ++i) {
        if (f[i] < 0) {
            continue;
        }
        succ[i].push_back(f[i]);
        for (int j : g.neighbors(f[i])) {
            if (j != i) {
                succ[i].push_back(j);
            }
        }
    }
    for (auto [a, b] : extra) {
        succ[a].push_back(b);
    }
    return succ;
}

}  // namespace

std::optional<std::vector<int>> schedule(const OpenGraph &g, const std::vector<int> &f, const Precedence &extra) {
    const int n = g.num_nodes();
    auto succ = precedence_graph(g, f, extra);
    std::vector<int> indeg(n, 0);
    for (const auto &s : succ) {
        for (int j : s) {
            ++indeg[j];
        }
    }
    std::priority_queue<int, std::vector<int>, std::greater<>> ready;
    for (int v = 0; v < n; ++v) {
        if (indeg[v] == 0) {
            ready.push(v);
        }
    }
    std::vector<int> order;
    order.reserve(n);
    while (!ready.empty()) {
        int v = ready.top();
        ready.pop();
        order.push_back(v);
        for (int j : succ[v]) {
            if (--indeg[j] == 0) {
                ready.push(j);
            }
        }
    }
    if (static_cast<int>(order.size()) != n) {
        return std::nullopt;
    }
    return order;
}

std::optional<Flow> find_flow(const OpenGraph &g, const Precedence &extra) {
    const int n = g.num_nodes();
    std::vector<int> f(n, -1);
    std::vector<bool> processed(n, false);
    std::set<int> correctors;
    int num_processed = 0;
    for (int v : g.outputs()) {
        processed[v] = true;
        ++num_processed;
        if (!g.is_input(v)) {
            correctors.insert(v);
        }
    }

    while (true) {
        std::vector<int> newly;
        std::set<int> used;
        std::vector<bool> claimed(n, false);
        for (int v : correctors) {
            int unique = -1, count = 0;
            for (int u : g.neighbors(v)) {
                if (!processed[u]) {
                    unique = u;
                    ++count;
                }
            }
            if (count == 1 && !claimed[unique]) {
                claimed[unique] = true;
                f[unique] = v;
                newly.push_back(unique);
                used.insert(v);
            }
        }
        if (newly.empty()) {
            break;
        }
        for (int u : newly) {
            processed[u] = true;
            ++num_processed;
        }
        for (int v : used) {
            correctors.erase(v);
        }
        for (int u : newly) {
            if (!g.is_input(u)) {
                correctors.insert(u);
            }
        }
    }
    if (num_processed != n) {
        return std::nullopt;
    }
    auto order = schedule(g, f, extra);
    if (!order) {
        return std::nullopt;
    }
    return Flow{std::move(f), std::move(*order)};
}

bool verify_flow(const OpenGraph &g, const Flow &fl) {
    const int n = g.num_nodes();
    if (static_cast<int>(fl.f.size()) != n || static_cast<int>(fl.order.size()) != n) {
        return false;
    }
    std::vector<int> pos(n, -1);
    for (int k = 0; k < n; ++k) {
        int v = fl.order[k];
        if (v < 0 || v >= n || pos[v] >= 0) {
            return false;
        }
        pos[v] = k;
    }
    for (int i = 0; i < n; ++i) {
        int fi = fl.f[i];
        if (g.is_output(i)) {
            if (fi != -1) {
                return false;
            }
            continue;
        }
        if (fi < 0 || fi >= n || g.is_input(fi) || !g.has_edge(i, fi)) {
            return false;
        }
        if (pos[i] >= pos[fi]) {
            return false;
        }
        for (int j : g.neighbors(fi)) {
            if (j != i && pos[i] >= pos[j]) {
                return false;
            }
        }
    }
    return true;
}

bool has_flow_bruteforce(const OpenGraph &g) {
    const int n = g.num_nodes();
    std::vector<int> domain;
    std::vector<std::vector<int>> candidates;
    for (int i = 0; i < n; ++i) {
        if (g.is_output(i)) {
            continue;
        }
        domain.push_back(i);
        std::vector<int> c;
        for (int j : g.neighbors(i)) {
            if (!g.is_input(j)) {
                c.push_back(j);
            }
        }
        if (c.empty()) {
            return false;
        }
        candidates.push_back(std::move(c));
    }
    std::vector<int> f(n, -1);
    std::function<bool(size_t)> rec = [&](size_t k) -> bool {
        if (k == domain.size()) {
            return schedule(g, f).has_value();
        }
        for (int c : candidates[k]) {
            f[domain[k]] = c;
            if (rec(k + 1)) {
                return true;
            }
        }
        f[domain[k]] = -1;
        return false;
    };
    return rec(0);
}

std::optional<std::pair<std::vector<int>, std::vector<int>>> bipartition(const OpenGraph &g) {
    const int n = g.num_nodes();
    std::vector<int> color(n, -1);
    for (int s = 0; s < n; ++s) {
        if (color[s] >= 0) {
            continue;
        }
        color[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int u : g.neighbors(v)) {
                if (color[u] < 0) {
                    color[u] = 1 - color[v];
                    q.push(u);
                } else if (color[u] == color[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    std::pair<std::vector<int>, std::vector<int>> parts;
    for (int v = 0; v < n; ++v) {
        (color[v] == 0 ? parts.first : parts.second).push_back(v);
    }
    return parts;
}

}  // namespace mbqml::graph
