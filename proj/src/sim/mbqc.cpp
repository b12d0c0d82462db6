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

#include "mbqml/sim/mbqc.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace mbqml::sim {

using graph::OpenGraph;
using Vec2 = Eigen::Vector2cd;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTiny = 1e-15;

enum Status : char { kAbsent = 0, kLive = 1, kGone = 2 };

// Preparation vector actually simulated; phase states become |+>.
Vec2 prep_vector(const OpenGraph &g, int v) {
    auto s = g.init_state(v);
    if (s.phase()) {
        return Vec2(std::numbers::sqrt2 / 2, std::numbers::sqrt2 / 2);
    }
    return Vec2(s.a0, s.a1);
}

double phase_offset(const OpenGraph &g, int v) {
    if (g.is_input(v)) {
        return 0.0;
    }
    return g.init_state(v).phase().value_or(0.0);
}

// <+-_a| as a row: w_i = <b|i>.
Vec2 xy_bra(double a, int s) {
    const double r = std::numbers::sqrt2 / 2;
    return Vec2(r, (s ? -r : r) * std::polar(1.0, -a));
}

Vec2 z_bra(int s) { return s ? Vec2(0, 1) : Vec2(1, 0); }

double adapt(double base, bool x, bool z) { return (x ? -base : base) + (z ? kPi : 0.0); }

inline size_t insert_bit(size_t idx, int p, size_t bit) {
    const size_t low = idx & ((size_t{1} << p) - 1);
    return low | (bit << p) | ((idx >> p) << (p + 1));
}

struct PureRegister {
    std::vector<int> nodes;
    Vec amps = Vec::Ones(1);

    int n() const { return static_cast<int>(nodes.size()); }
    int pos(int v) const {
        auto it = std::find(nodes.begin(), nodes.end(), v);
        if (it == nodes.end()) {
            throw std::logic_error("node " + std::to_string(v) + " is not live");
        }
        return static_cast<int>(it - nodes.begin());
    }
    void add(int v, const Vec2 &s) {
        Vec next(amps.size() * 2);
        next.head(amps.size()) = s(0) * amps;
        next.tail(amps.size()) = s(1) * amps;
        amps = std::move(next);
        nodes.push_back(v);
    }
    void cz(int a, int b) { apply_cz(amps.data(), n(), pos(a), pos(b)); }
    void apply(int v, const Mat2 &u) { apply_1q(amps.data(), n(), pos(v), u); }
    // Contracts node v with the bra w and removes it; returns the squared
    // norm of what remains.
    double project(int v, const Vec2 &w) {
        const int p = pos(v);
        const size_t dim = size_t{1} << (n() - 1);
        Vec out(dim);
        for (size_t i = 0; i < dim; ++i) {
            size_t i0 = insert_bit(i, p, 0);
            out(i) = w(0) * amps(i0) + w(1) * amps(i0 | (size_t{1} << p));
        }
        amps = std::move(out);
        nodes.erase(nodes.begin() + p);
        return amps.squaredNorm();
    }
};

struct DensityRegister {
    std::vector<int> nodes;
    Mat rho = Mat::Ones(1, 1);

    int n() const { return static_cast<int>(nodes.size()); }
    int pos(int v) const {
        auto it = std::find(nodes.begin(), nodes.end(), v);
        if (it == nodes.end()) {
            throw std::logic_error("node " + std::to_string(v) + " is not live");
        }
        return static_cast<int>(it - nodes.begin());
    }
    void add(int v, const Vec2 &s) {
        const Eigen::Index d = rho.rows();
        Mat next(2 * d, 2 * d);
        for (int b = 0; b < 2; ++b) {
            for (int c = 0; c < 2; ++c) {
                next.block(b * d, c * d, d, d) = (s(b) * std::conj(s(c))) * rho;
            }
        }
        rho = std::move(next);
        nodes.push_back(v);
    }
    void cz(int a, int b) {
        const int m = n(), pa = pos(a), pb = pos(b);
        apply_cz(rho.data(), 2 * m, pa, pb);
        apply_cz(rho.data(), 2 * m, pa + m, pb + m);
    }
    void apply_at(Mat &r, int m, int p, const Mat2 &u) const {
        apply_1q(r.data(), 2 * m, p, u);
        apply_1q(r.data(), 2 * m, p + m, u.conjugate());
    }
    void apply(int v, const Mat2 &u) { apply_at(rho, n(), pos(v), u); }
    void depolarize(int v, double p) {
        if (p == 0.0) {
            return;
        }
        const int q = pos(v);
        const Eigen::Index d = rho.rows();
        const size_t bit = size_t{1} << q;
        Mat twirled = Mat::Zero(d, d);
        for (Eigen::Index c = 0; c < d; ++c) {
            if (c & bit) {
                continue;
            }
            for (Eigen::Index r = 0; r < d; ++r) {
                if (r & bit) {
                    continue;
                }
                cplx t = 0.5 * (rho(r, c) + rho(r | bit, c | bit));
                twirled(r, c) = t;
                twirled(r | bit, c | bit) = t;
            }
        }
        rho = (1.0 - 4.0 * p / 3.0) * rho + (4.0 * p / 3.0) * twirled;
    }
    // sum_ij w_i rho(.., i; .., j) conj(w_j) with node v removed.
    Mat contract(int v, const Vec2 &w) const {
        const int p = pos(v);
        const size_t d = size_t{1} << (n() - 1);
        Mat out(d, d);
        for (size_t c = 0; c < d; ++c) {
            size_t c0 = insert_bit(c, p, 0), c1 = c0 | (size_t{1} << p);
            for (size_t r = 0; r < d; ++r) {
                size_t r0 = insert_bit(r, p, 0), r1 = r0 | (size_t{1} << p);
                cplx row0 = rho(r0, c0) * std::conj(w(0)) + rho(r0, c1) * std::conj(w(1));
                cplx row1 = rho(r1, c0) * std::conj(w(0)) + rho(r1, c1) * std::conj(w(1));
                out(r, c) = w(0) * row0 + w(1) * row1;
            }
        }
        return out;
    }
};

template <class Reg>
struct Walker {
    const OpenGraph &g;
    const graph::Flow &fl;
    Reg reg;
    std::vector<char> status;

    Walker(const OpenGraph &graph, const graph::Flow &flow) : g(graph), fl(flow), status(graph.num_nodes(), kAbsent) {}

    void ensure(int v) {
        if (status[v] != kAbsent) {
            return;
        }
        reg.add(v, prep_vector(g, v));
        status[v] = kLive;
        for (int u : g.neighbors(v)) {
            if (status[u] == kLive) {
                reg.cz(u, v);
            }
        }
    }
    void ensure_closed(int v) {
        ensure(v);
        for (int u : g.neighbors(v)) {
            ensure(u);
        }
    }
    // Remaining nodes must be exactly the unmeasured outputs.
    void ensure_all() {
        for (int v = 0; v < g.num_nodes(); ++v) {
            ensure(v);
        }
    }
};

void load_input(PureRegister &reg, std::vector<char> &status, const OpenGraph &g, const StateVector &input) {
    if (input.n != static_cast<int>(g.inputs().size())) {
        throw std::invalid_argument("input state has " + std::to_string(input.n) + " qubits, graph has " +
                                    std::to_string(g.inputs().size()) + " inputs");
    }
    reg.amps = input.amps;
    reg.nodes = g.inputs();
    for (int v : g.inputs()) {
        status[v] = kLive;
    }
    for (auto [a, b] : g.edges()) {
        if (g.is_input(a) && g.is_input(b)) {
            reg.cz(a, b);
        }
    }
}

void check_pattern(const OpenGraph &g, const graph::Flow &fl, const translate::MeasurementPattern &p) {
    if (static_cast<int>(p.angles.size()) != g.num_nodes()) {
        throw std::invalid_argument("pattern size does not match the graph");
    }
    if (static_cast<int>(fl.f.size()) != g.num_nodes() || static_cast<int>(fl.order.size()) != g.num_nodes()) {
        throw std::invalid_argument("flow does not match the graph");
    }
}

// Applies the byproduct frame and output phase preparations, then orders
// the register as `outs`.
StateVector finish_pure(Walker<PureRegister> &w, const std::vector<char> &xf, const std::vector<char> &zf,
                        const std::vector<int> &outs) {
    w.ensure_all();
    for (int v : outs) {
        if (zf[v]) {
            w.reg.apply(v, pauli_z());
        }
        if (xf[v]) {
            w.reg.apply(v, pauli_x());
        }
        double phi = phase_offset(w.g, v);
        if (phi != 0.0) {
            Mat2 d = Mat2::Identity();
            d(1, 1) = std::polar(1.0, phi);
            w.reg.apply(v, d);
        }
    }
    if (w.reg.n() != static_cast<int>(outs.size())) {
        throw std::logic_error("unexpected live qubits at the end of the pattern");
    }
    std::vector<int> perm;
    for (int v : outs) {
        perm.push_back(w.reg.pos(v));
    }
    StateVector s(w.reg.amps);
    s.normalize();
    return permute_qubits(s, perm);
}

struct PureBranchState {
    Walker<PureRegister> w;
    std::vector<char> xf, zf;
    std::vector<int> outcomes;
    double prob = 1.0;
};

}  // namespace

MbqcResult run_mbqc(const OpenGraph &g, const graph::Flow &fl, const translate::MeasurementPattern &p,
                    const StateVector &input, MbqcMode mode) {
    check_pattern(g, fl, p);
    MbqcResult result;
    for (int v : fl.order) {
        if (!g.is_output(v)) {
            result.measured_nodes.push_back(v);
        }
    }
    const auto &sched = result.measured_nodes;
    const int n = g.num_nodes();

    PureBranchState root{Walker<PureRegister>(g, fl), std::vector<char>(n, 0), std::vector<char>(n, 0), {}, 1.0};
    load_input(root.w.reg, root.w.status, g, input);

    auto measure = [&](PureBranchState &st, int v, int s) {
        st.w.ensure_closed(v);
        double a = adapt(p.angles[v] - phase_offset(g, v), st.xf[v], st.zf[v]);
        double pr = st.w.reg.project(v, xy_bra(a, s)) / 1.0;
        st.w.status[v] = kGone;
        if (pr > kTiny) {
            st.w.reg.amps /= std::sqrt(pr);
        }
        st.prob *= pr;
        st.outcomes.push_back(s);
        if (s) {
            const int fv = fl.f[v];
            st.xf[fv] ^= 1;
            for (int j : g.neighbors(fv)) {
                if (j != v) {
                    st.zf[j] ^= 1;
                }
            }
        }
        return pr;
    };

    if (mode == MbqcMode::ideal) {
        for (int v : sched) {
            if (measure(root, v, 0) <= kTiny) {
                throw std::runtime_error("post-selected branch has zero probability");
            }
        }
        result.branches.push_back(
            {root.outcomes, root.prob, finish_pure(root.w, root.xf, root.zf, g.outputs())});
        return result;
    }

    auto rec = [&](auto &&self, PureBranchState st, size_t k) -> void {
        if (k == sched.size()) {
            result.branches.push_back({st.outcomes, st.prob, finish_pure(st.w, st.xf, st.zf, g.outputs())});
            return;
        }
        for (int s = 0; s < 2; ++s) {
            PureBranchState next = st;
            if (measure(next, sched[k], s) > kTiny) {
                self(self, std::move(next), k + 1);
            }
        }
    };
    rec(rec, std::move(root), 0);
    return result;
}

StateVector run_mbqc_ideal(const OpenGraph &g, const graph::Flow &fl, const translate::MeasurementPattern &p,
                           const StateVector &input) {
    return run_mbqc(g, fl, p, input, MbqcMode::ideal).branches.front().state;
}

DensityMatrix run_noisy_mbqc(const OpenGraph &g, const graph::Flow &fl, const translate::MeasurementPattern &p,
                             const DensityMatrix &input, double depolarizing_p) {
    check_pattern(g, fl, p);
    if (depolarizing_p < 0.0 || depolarizing_p > 1.0) {
        throw std::invalid_argument("depolarizing probability outside [0, 1]");
    }
    if (g.num_nodes() > 64) {
        throw std::length_error("graph too large for density simulation");
    }
    if (input.n != static_cast<int>(g.inputs().size())) {
        throw std::invalid_argument("input state does not match the number of inputs");
    }
    Walker<DensityRegister> w(g, fl);
    w.reg.rho = input.rho;
    w.reg.nodes = g.inputs();
    for (int v : g.inputs()) {
        w.status[v] = kLive;
    }
    for (auto [a, b] : g.edges()) {
        if (g.is_input(a) && g.is_input(b)) {
            w.reg.cz(a, b);
        }
    }
    std::vector<char> noisy(g.num_nodes(), 0);
    auto add_noise = [&](int v) {
        if (!noisy[v]) {
            w.reg.depolarize(v, depolarizing_p);
            noisy[v] = 1;
        }
    };

    for (int v : fl.order) {
        if (g.is_output(v)) {
            continue;
        }
        const int fv = fl.f[v];
        w.ensure_closed(v);
        w.ensure_closed(fv);
        if (w.reg.n() > 12) {
            throw std::length_error("live window too wide for density simulation");
        }
        add_noise(v);
        const double a = p.angles[v] - phase_offset(g, v);
        Mat r0 = w.reg.contract(v, xy_bra(a, 0));
        Mat r1 = w.reg.contract(v, xy_bra(a, 1));
        w.reg.nodes.erase(w.reg.nodes.begin() + w.reg.pos(v));
        w.status[v] = kGone;
        const int m = w.reg.n();
        w.reg.apply_at(r1, m, w.reg.pos(fv), pauli_x());
        for (int j : g.neighbors(fv)) {
            if (j != v && w.status[j] == kLive) {
                w.reg.apply_at(r1, m, w.reg.pos(j), pauli_z());
            }
        }
        w.reg.rho = r0 + r1;
    }
    w.ensure_all();
    for (int v : g.outputs()) {
        add_noise(v);
        double phi = phase_offset(g, v);
        if (phi != 0.0) {
            Mat2 d = Mat2::Identity();
            d(1, 1) = std::polar(1.0, phi);
            w.reg.apply(v, d);
        }
    }
    // Reorder to outputs() order.
    std::vector<int> perm;
    for (int v : g.outputs()) {
        perm.push_back(w.reg.pos(v));
    }
    const int m = w.reg.n();
    const size_t dim = size_t{1} << m;
    auto src = [&](size_t i) {
        size_t s = 0;
        for (int k = 0; k < m; ++k) {
            s |= ((i >> k) & 1) << perm[k];
        }
        return s;
    };
    Mat out(dim, dim);
    for (size_t c = 0; c < dim; ++c) {
        for (size_t r = 0; r < dim; ++r) {
            out(r, c) = w.reg.rho(src(r), src(c));
        }
    }
    return DensityMatrix(std::move(out));
}

std::vector<InstrumentBranch> run_instrument(const OpenGraph &g, const graph::Flow &fl,
                                             const std::vector<InstrumentNode> &program, const StateVector &input,
                                             const std::vector<int> *forced) {
    using Kind = InstrumentNode::Kind;
    const int n = g.num_nodes();
    if (static_cast<int>(program.size()) != n) {
        throw std::invalid_argument("program size does not match the graph");
    }
    std::vector<int> sched, outs;
    for (int v : fl.order) {
        const Kind k = program[v].kind;
        if (g.is_output(v)) {
            if (k == Kind::z_readout) {
                sched.push_back(v);
            } else if (k != Kind::unmeasured) {
                throw std::invalid_argument("output node " + std::to_string(v) + " can only be read out in Z");
            }
        } else {
            if (k == Kind::z_readout || k == Kind::unmeasured) {
                throw std::invalid_argument("non-output node " + std::to_string(v) + " needs an XY measurement");
            }
            sched.push_back(v);
        }
    }
    for (int v : g.outputs()) {
        if (program[v].kind == Kind::unmeasured) {
            outs.push_back(v);
        }
    }

    struct State {
        Walker<PureRegister> w;
        std::vector<char> xf, zf;
        std::vector<int> logical;  // -1 until measured
        std::vector<int> readout_nodes, readouts;
        double prob = 1.0;
    };
    State root{Walker<PureRegister>(g, fl), std::vector<char>(n, 0), std::vector<char>(n, 0),
               std::vector<int>(n, -1), {}, {}, 1.0};
    load_input(root.w.reg, root.w.status, g, input);

    std::vector<InstrumentBranch> branches;
    auto rec = [&](auto &&self, State st, size_t k) -> void {
        if (k == sched.size()) {
            branches.push_back({st.readout_nodes, st.readouts, st.prob, finish_pure(st.w, st.xf, st.zf, outs)});
            return;
        }
        const int v = sched[k];
        const auto &node = program[v];
        st.w.ensure_closed(v);
        if (node.kind == Kind::z_readout) {
            for (int logical = 0; logical < 2; ++logical) {
                const int s = logical ^ st.xf[v];
                State next = st;
                double pr = next.w.reg.project(v, z_bra(s));
                if (pr <= kTiny) {
                    continue;
                }
                next.w.reg.amps /= std::sqrt(pr);
                next.w.status[v] = kGone;
                next.prob *= pr;
                next.logical[v] = logical;
                next.readout_nodes.push_back(v);
                next.readouts.push_back(logical);
                self(self, std::move(next), k + 1);
            }
            return;
        }
        double base = node.angle;
        if (node.kind == Kind::controlled) {
            bool all_one = true;
            for (int c : node.controllers) {
                if (st.logical[c] < 0) {
                    throw std::invalid_argument("controller " + std::to_string(c) + " measured after node " +
                                                std::to_string(v));
                }
                all_one = all_one && st.logical[c] == 1;
            }
            base = all_one ? node.angle : node.otherwise_angle;
        }
        const int s = forced ? (*forced)[v] : 0;
        const double a = adapt(base - phase_offset(g, v), st.xf[v], st.zf[v]);
        double pr = st.w.reg.project(v, xy_bra(a, s));
        if (pr <= kTiny) {
            throw std::runtime_error("XY outcome with zero probability; pattern is not deterministic");
        }
        st.w.reg.amps /= std::sqrt(pr);
        st.w.status[v] = kGone;
        st.logical[v] = s;
        if (s) {
            const int fv = fl.f[v];
            st.xf[fv] ^= 1;
            for (int j : g.neighbors(fv)) {
                if (j != v) {
                    st.zf[j] ^= 1;
                }
            }
        }
        self(self, std::move(st), k + 1);
    };
    rec(rec, std::move(root), 0);
    return branches;
}

}  // namespace mbqml::sim
