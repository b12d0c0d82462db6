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

#include "mbqml/expressivity/lie.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <set>
#include <stdexcept>

#include <Eigen/Dense>

#include "mbqml/graph/flow.hpp"
#include "mbqml/sim/state.hpp"
#include "mbqml/translate/translate.hpp"

namespace mbqml::expressivity {

namespace {

PauliString from_key(int n, uint64_t key) {
    const uint64_t mask = (uint64_t{1} << n) - 1;
    return {n, key & mask, key >> n, 0};
}

Eigen::VectorXd dense(const LieElement &e) {
    Eigen::VectorXd v = Eigen::VectorXd::Zero(Eigen::Index{1} << (2 * e.n));
    for (const auto &[k, c] : e.terms) {
        v(static_cast<Eigen::Index>(k)) = c;
    }
    return v;
}

constexpr double kTol = 1e-9;

}  // namespace

LieElement LieElement::of(const PauliString &p) {
    LieElement e;
    e.n = p.n;
    e.terms[p.unsigned_part().key()] = p.phase == 2 ? -1.0 : 1.0;
    if (p.phase % 2 != 0) {
        throw std::invalid_argument("generator must be Hermitian (phase +-1)");
    }
    return e;
}

double LieElement::norm() const {
    double s = 0.0;
    for (const auto &[k, c] : terms) {
        s += c * c;
    }
    return std::sqrt(s);
}

LieElement commutator(const LieElement &a, const LieElement &b) {
    if (a.n != b.n) {
        throw std::invalid_argument("commutator: qubit counts differ");
    }
    // [iP, iQ] = -[P, Q] = -2PQ for anticommuting P, Q, and PQ = +-i R.
    LieElement out;
    out.n = a.n;
    for (const auto &[ka, ca] : a.terms) {
        PauliString p = from_key(a.n, ka);
        for (const auto &[kb, cb] : b.terms) {
            PauliString q = from_key(b.n, kb);
            if (p.commutes(q)) {
                continue;
            }
            PauliString r = p * q;
            double sign = r.phase == 1 ? 1.0 : -1.0;
            out.terms[r.unsigned_part().key()] += -2.0 * ca * cb * sign;
        }
    }
    for (auto it = out.terms.begin(); it != out.terms.end();) {
        it = std::abs(it->second) < 1e-14 ? out.terms.erase(it) : std::next(it);
    }
    return out;
}

std::vector<PauliString> extract_generators(const translate::GateCircuit &c) {
    std::set<PauliString> seen;
    for (const auto &r : rotation_form(c).rotations) {
        if (r.param >= 0 && r.coeff != 0.0) {
            seen.insert(r.pauli);
        }
    }
    return {seen.begin(), seen.end()};
}

LieClosureResult lie_closure(const std::vector<PauliString> &gens) {
    if (gens.empty()) {
        throw std::invalid_argument("lie_closure: no generators");
    }
    const int n = gens.front().n;
    if (n < 1 || n > 5) {
        throw std::invalid_argument("lie_closure: qubit count must be in [1, 5]");
    }
    LieClosureResult res;
    res.n = n;
    std::vector<Eigen::VectorXd> ortho;
    std::set<uint64_t> mono_keys;
    bool all_monomial = true;

    auto try_add = [&](const LieElement &e) {
        if (e.terms.empty()) {
            return;
        }
        if (all_monomial && e.is_monomial()) {
            uint64_t k = e.terms.begin()->first;
            if (mono_keys.count(k)) {
                return;
            }
            mono_keys.insert(k);
            LieElement unit = e;
            unit.terms.begin()->second = 1.0;
            ortho.push_back(dense(unit));
            res.basis.push_back(e);
            return;
        }
        Eigen::VectorXd v = dense(e);
        const double scale = v.norm();
        for (int pass = 0; pass < 2; ++pass) {
            for (const auto &q : ortho) {
                v -= q.dot(v) * q;
            }
        }
        if (v.norm() <= kTol * std::max(1.0, scale)) {
            return;
        }
        all_monomial = all_monomial && e.is_monomial();
        ortho.push_back(v / v.norm());
        res.basis.push_back(e);
    };

    for (const auto &g : gens) {
        if (g.n != n) {
            throw std::invalid_argument("lie_closure: generators on different qubit counts");
        }
        if (!g.is_identity()) {
            try_add(LieElement::of(g));
        }
    }
    for (size_t i = 0; i < res.basis.size(); ++i) {
        for (size_t j = 0; j < i; ++j) {
            try_add(commutator(res.basis[i], res.basis[j]));
        }
    }
    res.dim = static_cast<int>(res.basis.size());
    res.is_full = res.dim == (1 << (2 * n)) - 1;
    return res;
}

VarianceReport variance_probe(const translate::GateCircuit &symbolic, const sim::StateVector &target,
                              int num_samples, sim::Rng &rng) {
    if (num_samples < 1) {
        throw std::invalid_argument("variance_probe: need at least one sample");
    }
    if (target.n != symbolic.num_wires) {
        throw std::invalid_argument("variance_probe: target qubit count mismatch");
    }
    VarianceReport rep;
    rep.generators = extract_generators(symbolic);
    if (!rep.generators.empty()) {
        auto cl = lie_closure(rep.generators);
        rep.dim = cl.dim;
        rep.is_full = cl.is_full;
        if (cl.is_full) {
            rep.bound = std::pow(2.0, symbolic.num_wires) / cl.dim;
        }
    }
    const int slots = symbolic.num_slots();
    const int draws = slots == 0 ? 1 : num_samples;
    std::uniform_real_distribution<double> u(-std::numbers::pi, std::numbers::pi);
    std::vector<double> losses;
    losses.reserve(draws);
    std::vector<double> values(slots);
    for (int s = 0; s < draws; ++s) {
        for (auto &v : values) {
            v = u(rng);
        }
        auto c = symbolic;
        c.bind(values);
        auto psi = sim::StateVector::basis(c.num_wires);
        sim::apply_circuit(psi, c);
        losses.push_back(1.0 - sim::fidelity(target, psi));
    }
    rep.samples = draws;
    double mean = 0.0;
    for (double l : losses) {
        mean += l;
    }
    mean /= draws;
    rep.mean_loss = mean;
    if (draws > 1) {
        std::vector<double> d;
        double var = 0.0;
        for (double l : losses) {
            d.push_back((l - mean) * (l - mean));
            var += d.back();
        }
        rep.variance = var / (draws - 1);
        double dm = var / draws, dv = 0.0;
        for (double x : d) {
            dv += (x - dm) * (x - dm);
        }
        rep.variance_std_error = std::sqrt(dv / (draws - 1) / draws);
    }
    return rep;
}

VarianceReport variance_probe(const muta::NetworkSpec &spec, const sim::StateVector &target, int num_samples,
                              sim::Rng &rng) {
    auto net = muta::concatenate(spec);
    if (net.max_width() > 3) {
        throw std::invalid_argument("variance_probe: at most 3 wires");
    }
    auto fl = graph::find_flow(net.graph);
    if (!fl) {
        throw std::invalid_argument("variance_probe: network has no flow");
    }
    return variance_probe(translate::translate_symbolic(net.graph, *fl), target, num_samples, rng);
}

nlohmann::json to_json(const VarianceReport &r) {
    nlohmann::json gens = nlohmann::json::array();
    for (const auto &g : r.generators) {
        gens.push_back(g.letters());
    }
    return {{"generators", gens},
            {"dim", r.dim},
            {"is_full", r.is_full},
            {"bound", r.bound ? nlohmann::json(*r.bound) : nlohmann::json(nullptr)},
            {"empirical_variance", r.variance},
            {"variance_std_error", r.variance_std_error},
            {"mean_loss", r.mean_loss},
            {"samples", r.samples},
            {"seed", r.seed}};
}

}  // namespace mbqml::expressivity
