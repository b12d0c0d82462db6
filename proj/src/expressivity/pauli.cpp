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

#include "mbqml/expressivity/pauli.hpp"

#include <bit>
#include <functional>
#include <queue>
#include <stdexcept>
#include <tuple>

namespace mbqml::expressivity {

using translate::Gate;
using translate::GateKind;

namespace {

int mod4(int k) { return ((k % 4) + 4) % 4; }

// Exponent of i picked up by s(x1,z1) * s(x2,z2) on one qubit.
int product_phase(int x1, int z1, int x2, int z2) {
    if (x1 == 0 && z1 == 0) {
        return 0;
    }
    if (x1 == 1 && z1 == 1) {
        return z2 - x2;
    }
    if (x1 == 1) {
        return z2 * (2 * x2 - 1);
    }
    return x2 * (1 - 2 * z2);
}

}  // namespace

PauliString PauliString::parse(const std::string &s) {
    size_t k = 0;
    int phase = 0;
    if (k < s.size() && (s[k] == '+' || s[k] == '-')) {
        phase = s[k] == '-' ? 2 : 0;
        ++k;
    }
    if (k < s.size() && s[k] == 'i') {
        phase += 1;
        ++k;
    }
    PauliString p;
    p.n = static_cast<int>(s.size() - k);
    if (p.n > 31) {
        throw std::invalid_argument("Pauli string too long");
    }
    p.phase = mod4(phase);
    for (int q = 0; q < p.n; ++q) {
        switch (s[k + q]) {
            case 'I':
                break;
            case 'X':
                p.x |= uint64_t{1} << q;
                break;
            case 'Y':
                p.x |= uint64_t{1} << q;
                p.z |= uint64_t{1} << q;
                break;
            case 'Z':
                p.z |= uint64_t{1} << q;
                break;
            default:
                throw std::invalid_argument("bad Pauli letter in '" + s + "'");
        }
    }
    return p;
}

PauliString PauliString::single(int n, int q, char letter) {
    std::string s(n, 'I');
    s.at(q) = letter;
    return parse(s);
}

char PauliString::letter(int q) const {
    int xb = (x >> q) & 1, zb = (z >> q) & 1;
    return xb ? (zb ? 'Y' : 'X') : (zb ? 'Z' : 'I');
}

int PauliString::weight() const { return std::popcount(x | z); }

std::string PauliString::letters() const {
    std::string s;
    for (int q = 0; q < n; ++q) {
        s += letter(q);
    }
    return s;
}

std::string PauliString::to_string() const {
    static const char *prefix[] = {"", "i", "-", "-i"};
    return prefix[mod4(phase)] + letters();
}

bool PauliString::commutes(const PauliString &o) const {
    return (std::popcount(x & o.z) + std::popcount(z & o.x)) % 2 == 0;
}

PauliString PauliString::operator*(const PauliString &o) const {
    if (n != o.n) {
        throw std::invalid_argument("Pauli qubit counts differ");
    }
    int ph = phase + o.phase;
    for (int q = 0; q < n; ++q) {
        ph += product_phase((x >> q) & 1, (z >> q) & 1, (o.x >> q) & 1, (o.z >> q) & 1);
    }
    return {n, x ^ o.x, z ^ o.z, mod4(ph)};
}

sim::Mat PauliString::matrix() const {
    const size_t dim = size_t{1} << n;
    static const sim::cplx ipow[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    sim::Mat m = sim::Mat::Zero(dim, dim);
    const sim::cplx base = ipow[mod4(phase + std::popcount(x & z))];
    for (size_t j = 0; j < dim; ++j) {
        double sign = std::popcount(j & z) % 2 ? -1.0 : 1.0;
        m(j ^ x, j) = base * sign;
    }
    return m;
}

PauliString conjugate(const PauliString &p, const Gate &g) {
    const int n = p.n;
    // Images of X_q and Z_q under G^dag . G.
    auto image = [&](int q, char letter) -> PauliString {
        PauliString out = PauliString::single(n, q, letter);
        switch (g.kind) {
            case GateKind::h:
                if (q == g.q0) {
                    out = PauliString::single(n, q, letter == 'X' ? 'Z' : 'X');
                }
                break;
            case GateKind::cz:
                if (letter == 'X' && (q == g.q0 || q == g.q1)) {
                    out = out * PauliString::single(n, q == g.q0 ? g.q1 : g.q0, 'Z');
                }
                break;
            case GateKind::cnot:
                if (letter == 'X' && q == g.q0) {
                    out = out * PauliString::single(n, g.q1, 'X');
                } else if (letter == 'Z' && q == g.q1) {
                    out = PauliString::single(n, g.q0, 'Z') * out;
                }
                break;
            default:
                throw std::invalid_argument("conjugate: not a Clifford gate");
        }
        return out;
    };
    // P = i^(phase + #Y) prod_q X_q^x Z_q^z.
    PauliString out{n, 0, 0, mod4(p.phase + std::popcount(p.x & p.z))};
    for (int q = 0; q < n; ++q) {
        if ((p.x >> q) & 1) {
            out = out * image(q, 'X');
        }
        if ((p.z >> q) & 1) {
            out = out * image(q, 'Z');
        }
    }
    return out;
}

RotationForm rotation_form(const translate::GateCircuit &c) {
    RotationForm form;
    form.num_wires = c.num_wires;
    const int n = c.num_wires;
    for (const Gate &g : c.gates) {
        if (!g.is_rotation()) {
            form.cliffords.push_back(g);
            continue;
        }
        PauliString p;
        if (g.kind == GateKind::rz) {
            p = PauliString::single(n, g.q0, 'Z');
        } else if (g.kind == GateKind::rx) {
            p = PauliString::single(n, g.q0, 'X');
        } else {
            p = PauliString::single(n, g.q0, 'X') * PauliString::single(n, g.q1, 'X');
        }
        // R_P C = C R_{C^dag P C}; conjugate by the latest Clifford first.
        for (auto it = form.cliffords.rbegin(); it != form.cliffords.rend(); ++it) {
            p = conjugate(p, *it);
        }
        PauliRotation r;
        r.param = g.param;
        double sign = p.phase == 2 ? -1.0 : 1.0;
        if (p.phase % 2 != 0) {
            throw std::logic_error("conjugated rotation generator is not Hermitian");
        }
        if (g.param >= 0) {
            r.coeff = sign * g.coeff;
            r.offset = sign * g.offset;
        } else {
            r.offset = sign * g.angle;
        }
        r.pauli = p.unsigned_part();
        form.rotations.push_back(r);
    }
    return form;
}

std::vector<Gate> normalized_gates(const RotationForm &form) {
    const size_t m = form.rotations.size();
    std::vector<uint64_t> support(m);
    std::vector<int> low(m);
    for (size_t k = 0; k < m; ++k) {
        const auto &p = form.rotations[k].pauli;
        support[k] = p.x | p.z;
        low[k] = support[k] ? std::countr_zero(support[k]) : 0;
    }
    std::vector<std::vector<size_t>> succ(m);
    std::vector<int> indeg(m, 0);
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = i + 1; j < m; ++j) {
            if (support[i] & support[j]) {
                succ[i].push_back(j);
                ++indeg[j];
            }
        }
    }
    using Key = std::tuple<int, size_t>;
    std::priority_queue<Key, std::vector<Key>, std::greater<>> ready;
    for (size_t k = 0; k < m; ++k) {
        if (indeg[k] == 0) {
            ready.emplace(low[k], k);
        }
    }
    std::vector<Gate> out;
    while (!ready.empty()) {
        size_t k = std::get<1>(ready.top());
        ready.pop();
        for (size_t j : succ[k]) {
            if (--indeg[j] == 0) {
                ready.emplace(low[j], j);
            }
        }
        const auto &r = form.rotations[k];
        const auto &p = r.pauli;
        Gate g;
        if (p.weight() == 1 && p.x == 0) {
            g.kind = GateKind::rz;
        } else if (p.weight() == 1 && p.z == 0) {
            g.kind = GateKind::rx;
        } else if (p.weight() == 2 && p.z == 0) {
            g.kind = GateKind::ising_xx;
            g.q1 = 63 - std::countl_zero(p.x);
        } else {
            throw std::domain_error("rotation about " + p.letters() + " has no native gate");
        }
        g.q0 = low[k];
        g.param = r.param;
        g.coeff = r.coeff;
        g.offset = r.offset;
        g.angle = r.param >= 0 ? 0.0 : r.offset;
        out.push_back(g);
    }
    return out;
}

}  // namespace mbqml::expressivity
