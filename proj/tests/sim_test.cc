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

#include <cmath>

#include "gtest/gtest.h"
#include "mbqml/muta/teleport.hpp"
#include "mbqml/sim/haar.hpp"
#include "mbqml/sim/mbqc.hpp"
#include "mbqml/sim/noise.hpp"
#include "mbqml/sim/state.hpp"
#include "test_util.hpp"

using namespace mbqml;
using sim::cplx;
using sim::DensityMatrix;
using sim::StateVector;
using translate::Gate;
using translate::GateKind;

namespace {

// |<a|b>| = 1 up to global phase.
double overlap(const StateVector &a, const StateVector &b) { return std::abs(a.amps.dot(b.amps)); }

StateVector apply(const translate::GateCircuit &c, StateVector s) {
    sim::apply_circuit(s, c);
    return s;
}

}  // namespace

TEST(apply_gate, hadamard_and_graph_state) {
    StateVector s = StateVector::basis(1);
    sim::apply_gate(s, Gate{GateKind::h, 0});
    EXPECT_NEAR(s.amps(0).real(), std::sqrt(0.5), 1e-15);
    EXPECT_NEAR(s.amps(1).real(), std::sqrt(0.5), 1e-15);

    StateVector g = StateVector::basis(2);
    sim::apply_gate(g, Gate{GateKind::h, 0});
    sim::apply_gate(g, Gate{GateKind::h, 1});
    sim::apply_gate(g, Gate{GateKind::cz, 0, 1});
    sim::Vec expected(4);
    expected << 0.5, 0.5, 0.5, -0.5;
    EXPECT_LT((g.amps - expected).norm(), 1e-15);
    EXPECT_THROW(sim::apply_gate(g, Gate{GateKind::h, 2}), std::out_of_range);
}

TEST(apply_gate, density_matches_pure) {
    sim::Rng rng(1);
    StateVector s = sim::sample_haar_state(3, rng);
    DensityMatrix rho = DensityMatrix::from_pure(s);
    std::vector<Gate> gates = {Gate{GateKind::rx, 1, -1, 0.3}, Gate{GateKind::cnot, 2, 0},
                               Gate{GateKind::ising_xx, 0, 2, -1.1}, Gate{GateKind::cz, 1, 2},
                               Gate{GateKind::rz, 2, -1, 0.7}, Gate{GateKind::h, 1}};
    for (const auto &g : gates) {
        sim::apply_gate(s, g);
        sim::apply_gate(rho, g);
    }
    EXPECT_LT((rho.rho - s.amps * s.amps.adjoint()).norm(), 1e-13);
    EXPECT_TRUE(rho.is_valid(1e-10));
}

TEST(apply_gate, cnot_orientation) {
    StateVector s = StateVector::basis(2, 1);  // qubit 0 set
    sim::apply_gate(s, Gate{GateKind::cnot, 0, 1});
    EXPECT_NEAR(std::abs(s.amps(3)), 1.0, 1e-15);
}

TEST(purity, ising_sweep_matches_formula) {
    for (int k = 0; k < 100; ++k) {
        double a = -fixtures::kPi + 2 * fixtures::kPi * k / 99.0;
        StateVector s = StateVector::basis(2);
        sim::apply_gate(s, Gate{GateKind::ising_xx, 0, 1, -a});
        auto reduced = sim::partial_trace(DensityMatrix::from_pure(s), {0});
        double c = std::cos(a);
        EXPECT_NEAR(reduced.purity(), (1 + c * c) / 2, 1e-12);
    }
}

TEST(run_mbqc, all_branches_agree_on_layer_20) {
    auto net = fixtures::layer_20();
    auto fl = fixtures::flow_of(net.graph);
    sim::Rng rng(2);
    for (int trial = 0; trial < 5; ++trial) {
        auto p = fixtures::random_pattern(net.graph, rng);
        auto in = sim::sample_haar_state(2, rng);
        auto ideal = sim::run_mbqc_ideal(net.graph, fl, p, in);
        auto res = sim::run_mbqc(net.graph, fl, p, in, sim::MbqcMode::branch_all);
        ASSERT_EQ(res.branches.size(), 256u);
        double total = 0;
        for (const auto &b : res.branches) {
            total += b.probability;
            EXPECT_NEAR(b.probability, 1.0 / 256, 1e-12);
            EXPECT_NEAR(overlap(b.state, ideal), 1.0, 1e-10);
        }
        EXPECT_NEAR(total, 1.0, 1e-10);
    }
}

TEST(run_mbqc, matches_translated_circuit) {
    sim::Rng rng(3);
    std::vector<muta::Network> nets = {muta::build_layer({1, std::nullopt, {}, 5}), fixtures::layer_20(),
                                       muta::build_layer({3, 1, {0, 2}, 5}), muta::build_layer({3, 2, {0}, 6}),
                                       muta::concatenate(muta::NetworkSpec::chain({{2, 1, {0}, 5}, {2, 0, {1}, 5}}))};
    for (const auto &net : nets) {
        auto fl = fixtures::flow_of(net.graph);
        for (int trial = 0; trial < 5; ++trial) {
            auto p = fixtures::random_pattern(net.graph, rng);
            auto in = sim::sample_haar_state(static_cast<int>(net.graph.inputs().size()), rng);
            auto c = translate::translate(net.graph, fl, p);
            auto direct = sim::run_mbqc_ideal(net.graph, fl, p, in);
            EXPECT_NEAR(sim::fidelity(direct, apply(c, in)), 1.0, 1e-10);
        }
    }
}

TEST(run_mbqc, identity_patterns) {
    auto net = fixtures::layer_20();
    auto fl = fixtures::flow_of(net.graph);
    sim::Rng rng(4);
    auto psi = sim::sample_haar_state(1, rng), chi = sim::sample_haar_state(1, rng);
    auto in = StateVector::product({psi.amps, chi.amps});
    auto out = sim::run_mbqc_ideal(net.graph, fl, translate::MeasurementPattern::zeros(10), in);
    EXPECT_NEAR(sim::fidelity(out, in), 1.0, 1e-12);
}

TEST(run_mbqc, injected_t_state) {
    auto net = fixtures::layer_20();
    auto g = net.graph.with_init(2, graph::QubitState::t_state()).with_init(6, graph::QubitState::t_state());
    auto fl = fixtures::flow_of(g);
    sim::Rng rng(5);
    for (int trial = 0; trial < 3; ++trial) {
        auto p = fixtures::random_pattern(g, rng);
        auto in = sim::sample_haar_state(2, rng);
        auto res = sim::run_mbqc(g, fl, p, in, sim::MbqcMode::branch_all);
        auto expect = apply(translate::translate(g, fl, p), in);
        for (const auto &b : res.branches) {
            EXPECT_NEAR(overlap(b.state, expect), 1.0, 1e-10);
        }
    }
}

TEST(run_mbqc, rejects_mismatched_input) {
    auto net = fixtures::layer_20();
    auto fl = fixtures::flow_of(net.graph);
    EXPECT_THROW(sim::run_mbqc_ideal(net.graph, fl, translate::MeasurementPattern::zeros(10), StateVector::basis(1)),
                 std::invalid_argument);
    EXPECT_THROW(sim::run_mbqc_ideal(net.graph, fl, translate::MeasurementPattern::zeros(9), StateVector::basis(2)),
                 std::invalid_argument);
}

TEST(run_noisy_mbqc, noiseless_matches_pure) {
    auto net = fixtures::layer_20();
    auto fl = fixtures::flow_of(net.graph);
    sim::Rng rng(6);
    auto p = fixtures::random_pattern(net.graph, rng);
    auto in = sim::sample_haar_state(2, rng);
    auto rho = sim::run_noisy_mbqc(net.graph, fl, p, DensityMatrix::from_pure(in), 0.0);
    auto pure = sim::run_mbqc_ideal(net.graph, fl, p, in);
    EXPECT_LT((rho.rho - pure.amps * pure.amps.adjoint()).norm(), 1e-10);
}

TEST(run_noisy_mbqc, fully_depolarized_single_node) {
    graph::OpenGraph g(1, {}, {}, {0}, {{0, graph::QubitState::zero()}});
    graph::Flow fl{{-1}, {0}};
    auto rho = sim::run_noisy_mbqc(g, fl, translate::MeasurementPattern::zeros(1), DensityMatrix(sim::Mat::Ones(1, 1)),
                                   0.75);
    EXPECT_LT((rho.rho - 0.5 * sim::Mat::Identity(2, 2)).norm(), 1e-14);
}

TEST(run_noisy_mbqc, ising_degrades_gracefully) {
    auto net = fixtures::layer_20();
    auto fl = fixtures::flow_of(net.graph);
    auto p = translate::MeasurementPattern::zeros(10);
    p.angles[6] = fixtures::kPi / 2;
    sim::Rng rng(7);
    for (int trial = 0; trial < 3; ++trial) {
        auto in = sim::sample_haar_state(2, rng);
        auto target = sim::run_mbqc_ideal(net.graph, fl, p, in);
        auto rho = sim::run_noisy_mbqc(net.graph, fl, p, DensityMatrix::from_pure(in), 0.1);
        EXPECT_TRUE(rho.is_valid(1e-10));
        double f = sim::fidelity(target, rho);
        EXPECT_LT(f, 1.0);
        EXPECT_GT(f, 0.5);
    }
}

TEST(run_noisy_mbqc, matches_explicit_branch_average) {
    // Deferred corrections must reproduce the average over byproduct-corrected
    // branches of a density simulation in which every qubit is noised before
    // any measurement.  Check against a direct, non-lazy construction.
    graph::OpenGraph g(3, {{0, 1}, {1, 2}}, {0}, {2});
    auto fl = fixtures::flow_of(g);
    sim::Rng rng(8);
    auto p = fixtures::random_pattern(g, rng);
    auto in = sim::sample_haar_state(1, rng);
    const double dp = 0.2;
    auto rho = sim::run_noisy_mbqc(g, fl, p, DensityMatrix::from_pure(in), dp);

    // Oracle: full 3-qubit resource, depolarize everything, then measure with
    // corrections branch by branch (qubit k = node k).
    auto plus = graph::QubitState::plus();
    sim::Vec plus_v(2);
    plus_v << plus.a0, plus.a1;
    auto full = StateVector::product({in.amps, plus_v, plus_v});
    sim::apply_gate(full, Gate{GateKind::cz, 0, 1});
    sim::apply_gate(full, Gate{GateKind::cz, 1, 2});
    DensityMatrix big = DensityMatrix::from_pure(full);
    for (int q = 0; q < 3; ++q) {
        sim::depolarize(big, q, dp);
    }
    sim::Mat out = sim::Mat::Zero(2, 2);
    for (int s0 = 0; s0 < 2; ++s0) {
        for (int s1 = 0; s1 < 2; ++s1) {
            double a0 = p.angles[0];
            double a1 = (s0 ? -1 : 1) * p.angles[1];
            auto bra = [](double a, int s) {
                sim::Vec w(2);
                w << std::sqrt(0.5), (s ? -1.0 : 1.0) * std::sqrt(0.5) * std::polar(1.0, -a);
                return w;
            };
            sim::Vec w0 = bra(a0, s0), w1 = bra(a1, s1);
            // K = <w0|_0 <w1|_1 (acts on qubit 2).
            sim::Mat k(2, 8);
            k.setZero();
            for (int b2 = 0; b2 < 2; ++b2) {
                for (int b0 = 0; b0 < 2; ++b0) {
                    for (int b1 = 0; b1 < 2; ++b1) {
                        k(b2, b0 + 2 * b1 + 4 * b2) = w0(b0) * w1(b1);
                    }
                }
            }
            sim::Mat corr = sim::Mat::Identity(2, 2);
            // s0 -> X on node 1 (flips angle sign, handled) and Z on node 2.
            if (s0) corr = sim::pauli_z() * corr;
            if (s1) corr = sim::pauli_x() * corr;
            sim::Mat term = corr * k * big.rho * k.adjoint() * corr.adjoint();
            out += term;
        }
    }
    EXPECT_LT((rho.rho - out).norm(), 1e-12);
}

TEST(haar, reduced_purity_moment) {
    sim::Rng rng(9);
    double acc = 0;
    const int samples = 2000;
    for (int k = 0; k < samples; ++k) {
        auto s = sim::sample_haar_state(2, rng);
        acc += sim::partial_trace(DensityMatrix::from_pure(s), {0}).purity();
    }
    // E Tr(rho_A^2) = (dA + dB) / (dA dB + 1) for Haar states on A x B.
    EXPECT_NEAR(acc / samples, 4.0 / 5.0, 0.05);
}

TEST(haar, unitary_and_reproducible) {
    sim::Rng a(10), b(10);
    auto u = sim::sample_haar_unitary(1, a);
    EXPECT_LT((u.adjoint() * u - sim::Mat::Identity(2, 2)).norm(), 1e-12);
    EXPECT_TRUE(u.isApprox(sim::sample_haar_unitary(1, b)));
    auto s1 = sim::sample_haar_state(3, a), s2 = sim::sample_haar_state(3, b);
    EXPECT_EQ(s1.amps, s2.amps);
}

TEST(noise, channels_are_trace_preserving) {
    sim::Rng rng(11);
    auto rho = DensityMatrix::from_pure(sim::sample_haar_state(2, rng));
    auto id = rho;
    sim::apply_channel(id, sim::NoiseChannel::depolarizing(0.0));
    EXPECT_LT((id.rho - rho.rho).norm(), 1e-15);
    for (auto ch : {sim::NoiseChannel::depolarizing(0.3), sim::NoiseChannel::bitflip(0.2)}) {
        auto r = rho;
        sim::apply_channel(r, ch);
        EXPECT_NEAR(r.trace(), 1.0, 1e-12);
        EXPECT_TRUE(r.is_valid(1e-10));
    }
    DensityMatrix zero(sim::Mat::Zero(2, 2));
    zero.rho(0, 0) = 1;
    sim::depolarize(zero, 0, 0.75);
    EXPECT_LT((zero.rho - 0.5 * sim::Mat::Identity(2, 2)).norm(), 1e-15);
    EXPECT_THROW(sim::NoiseChannel::bitflip(1.5).validate(), std::invalid_argument);
}

TEST(noise, bit_flip_data) {
    sim::Rng rng(12);
    std::vector<StateVector> labels;
    for (int k = 0; k < 20; ++k) {
        labels.push_back(sim::sample_haar_state(2, rng));
    }
    auto same = sim::apply_data_noise(labels, sim::NoiseChannel::bitflip(0.0), rng);
    auto flipped = sim::apply_data_noise(labels, sim::NoiseChannel::bitflip(1.0), rng);
    for (size_t k = 0; k < labels.size(); ++k) {
        EXPECT_EQ(same[k].amps, labels[k].amps);
        for (int i = 0; i < 4; ++i) {
            EXPECT_EQ(flipped[k].amps(i), labels[k].amps(3 - i));
        }
    }
}

TEST(noise, brownian_vanishes_with_time_step) {
    sim::Rng rng(13);
    std::vector<StateVector> labels;
    for (int k = 0; k < 10; ++k) {
        labels.push_back(sim::sample_haar_state(2, rng));
    }
    double prev = 0.0;
    for (double dt : {0.3, 0.1, 0.01, 0.001}) {
        auto noisy = sim::apply_data_noise(labels, sim::NoiseChannel::brownian(dt, 5), rng);
        double f = 0;
        for (size_t k = 0; k < labels.size(); ++k) {
            f += sim::fidelity(noisy[k], labels[k]) / labels.size();
        }
        EXPECT_GT(f, prev - 1e-3);
        prev = f;
    }
    EXPECT_GT(prev, 0.9999);
    EXPECT_NEAR(sim::brownian_strength(2 * fixtures::kPi, 2, 3), 4.0, 1e-12);
}

TEST(run_instrument, forced_outcomes_give_same_branches) {
    auto t = muta::make_teleport_ansatz();
    const auto &g = t.net.network.graph;
    sim::Rng rng(14);
    std::vector<sim::InstrumentNode> prog(g.num_nodes());
    for (int v = 0; v < g.num_nodes(); ++v) {
        const auto &r = t.net.roles[v];
        auto &node = prog[v];
        node.angle = fixtures::uniform_angle(rng);
        if (r.kind == muta::RoleKind::output) {
            node.kind = sim::InstrumentNode::Kind::unmeasured;
        } else if (r.z_basis) {
            node.kind = sim::InstrumentNode::Kind::z_readout;
        } else if (r.kind == muta::RoleKind::controlled) {
            node.kind = sim::InstrumentNode::Kind::controlled;
            node.controllers = r.controllers;
        }
    }
    auto in = sim::sample_haar_state(1, rng);
    auto base = sim::run_instrument(g, t.flow, prog, in);
    ASSERT_EQ(base.size(), 4u);
    double total = 0;
    for (const auto &b : base) total += b.probability;
    EXPECT_NEAR(total, 1.0, 1e-12);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<int> forced(g.num_nodes());
        std::uniform_int_distribution<int> bit(0, 1);
        for (auto &f : forced) f = bit(rng);
        auto other = sim::run_instrument(g, t.flow, prog, in, &forced);
        ASSERT_EQ(other.size(), base.size());
        for (size_t k = 0; k < base.size(); ++k) {
            EXPECT_EQ(other[k].readouts, base[k].readouts);
            EXPECT_NEAR(other[k].probability, base[k].probability, 1e-12);
            EXPECT_NEAR(overlap(other[k].state, base[k].state), 1.0, 1e-10);
        }
    }
}

TEST(state_io, round_trip) {
    sim::Rng rng(15);
    auto s = sim::sample_haar_state(2, rng);
    auto back = sim::state_from_json(sim::to_json(s));
    EXPECT_EQ(back.amps, s.amps);
}
