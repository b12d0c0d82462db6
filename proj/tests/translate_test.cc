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
#include "mbqml/sim/haar.hpp"
#include "mbqml/sim/state.hpp"
#include "mbqml/translate/circuit.hpp"
#include "mbqml/translate/translate.hpp"
#include "test_util.hpp"

using namespace mbqml;
using translate::Gate;
using translate::GateKind;

namespace {

sim::Mat kron(const sim::Mat &hi, const sim::Mat &lo) {
    sim::Mat out(hi.rows() * lo.rows(), hi.cols() * lo.cols());
    for (Eigen::Index r = 0; r < hi.rows(); ++r) {
        for (Eigen::Index c = 0; c < hi.cols(); ++c) {
            out.block(r * lo.rows(), c * lo.cols(), lo.rows(), lo.cols()) = hi(r, c) * lo;
        }
    }
    return out;
}

sim::Mat xx() {
    sim::Mat x = sim::pauli_x();
    return kron(x, x);
}

}  // namespace

TEST(translate, layer_20_gate_sequence) {
    auto net = fixtures::layer_20();
    auto fl = fixtures::flow_of(net.graph);
    auto c = translate::translate_symbolic(net.graph, fl);
    std::vector<std::string> expected = {
        "rz 0 0 @0", "h 0",       "cz 1 0",    "rz 1 0 @5", "h 1", "rz 1 0 @6", "h 1", "cz 0 1", "rz 0 0 @1", "h 0",
        "rz 0 0 @2", "h 0",       "rz 0 0 @3", "h 0",       "rz 1 0 @7", "h 1", "rz 1 0 @8", "h 1"};
    std::istringstream lines(translate::to_text(c));
    std::string line;
    std::vector<std::string> got;
    while (std::getline(lines, line)) {
        got.push_back(line);
    }
    EXPECT_EQ(got, expected);
    for (const auto &g : c.gates) {
        if (g.kind == GateKind::rz) {
            EXPECT_EQ(g.coeff, -1.0);
        }
    }
    EXPECT_EQ(c.input_nodes, (std::vector<int>{0, 5}));
    EXPECT_EQ(c.output_wires, (std::vector<int>{0, 1}));
}

TEST(translate, euler_wire_pattern) {
    auto net = muta::build_layer({1, std::nullopt, {}, 5});
    auto fl = fixtures::flow_of(net.graph);
    sim::Rng rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        double th = fixtures::uniform_angle(rng), ph = fixtures::uniform_angle(rng), la = fixtures::uniform_angle(rng);
        auto c = translate::translate(net.graph, fl, {{0.0, th, ph, la, 0.0}});
        sim::Mat expected = sim::rx(-la) * sim::rz(-ph) * sim::rx(-th);
        EXPECT_NEAR(translate::trace_overlap(translate::circuit_unitary(c), expected), 1.0, 1e-12);
    }
}

TEST(translate, ising_pattern_matches_matrix_exponential) {
    auto net = fixtures::layer_20();
    auto fl = fixtures::flow_of(net.graph);
    auto p = translate::MeasurementPattern::zeros(10);
    p.angles[6] = fixtures::kPi / 2;
    sim::Mat u = translate::circuit_unitary(translate::translate(net.graph, fl, p));
    sim::Mat oracle = sim::expi_hermitian(xx(), fixtures::kPi / 4);
    EXPECT_NEAR(translate::trace_overlap(u, oracle), 1.0, 1e-12);
    EXPECT_NEAR(translate::trace_overlap(u, sim::ising_xx(-fixtures::kPi / 2)), 1.0, 1e-12);
}

TEST(circuit_unitary, trivial_circuits) {
    translate::GateCircuit empty;
    empty.num_wires = 2;
    EXPECT_TRUE(translate::circuit_unitary(empty).isApprox(sim::Mat::Identity(4, 4)));
    translate::GateCircuit cz = empty;
    cz.gates.push_back(Gate{GateKind::cz, 0, 1});
    sim::Mat diag = sim::Mat::Identity(4, 4);
    diag(3, 3) = -1;
    EXPECT_TRUE(translate::circuit_unitary(cz).isApprox(diag));
    translate::GateCircuit wide;
    wide.num_wires = 13;
    EXPECT_THROW(translate::circuit_unitary(wide), std::length_error);
}

TEST(circuit_unitary, is_unitary) {
    auto net = muta::build_layer({3, 1, {0, 2}, 5});
    auto fl = fixtures::flow_of(net.graph);
    sim::Rng rng(3);
    auto u = translate::circuit_unitary(translate::translate(net.graph, fl, fixtures::random_pattern(net.graph, rng)));
    EXPECT_LT((u.adjoint() * u - sim::Mat::Identity(8, 8)).norm(), 1e-12);
}

TEST(translate, rejects_unequal_io) {
    graph::OpenGraph g(3, {{0, 1}, {1, 2}}, {0}, {1, 2});
    auto fl = graph::find_flow(g);
    ASSERT_TRUE(fl);
    EXPECT_THROW(translate::translate_symbolic(g, *fl), std::invalid_argument);
}

TEST(translate, f_paths_partition_nodes) {
    auto net = muta::concatenate(muta::NetworkSpec::chain({{3, 2, {0, 1}, 5}, {3, 0, {2}, 5}}));
    auto fl = fixtures::flow_of(net.graph);
    auto fp = translate::f_paths(net.graph, fl);
    ASSERT_EQ(fp.paths.size(), 3u);
    size_t total = 0;
    for (const auto &p : fp.paths) {
        total += p.size();
        EXPECT_EQ(p.size(), 9u);
    }
    EXPECT_EQ(total, static_cast<size_t>(net.graph.num_nodes()));
}

TEST(translate, gate_count_is_linear) {
    for (int w = 1; w <= 4; ++w) {
        std::vector<int> conn;
        for (int j = 1; j < w; ++j) conn.push_back(j);
        auto net = muta::build_layer({w, w > 1 ? std::optional<int>(0) : std::nullopt, conn, 5});
        auto c = translate::translate_symbolic(net.graph, fixtures::flow_of(net.graph));
        EXPECT_LE(c.gates.size(), 2 * net.graph.num_nodes() + net.graph.edges().size());
    }
}

TEST(translate, zero_layer_appended_is_identity) {
    sim::Rng rng(5);
    auto one = fixtures::layer_20();
    auto two = muta::concatenate(muta::NetworkSpec::chain({{2, 0, {1}, 5}, {2, 1, {0}, 5}}));
    auto fl1 = fixtures::flow_of(one.graph);
    auto fl2 = fixtures::flow_of(two.graph);
    for (int trial = 0; trial < 10; ++trial) {
        auto p1 = fixtures::random_pattern(one.graph, rng);
        auto p2 = translate::MeasurementPattern::zeros(two.graph.num_nodes());
        for (int r = 0; r < 2; ++r) {
            for (int c = 0; c < 4; ++c) {
                p2.angles[two.node(0, r, c)] = p1.angles[one.node(0, r, c)];
            }
        }
        auto u1 = translate::circuit_unitary(translate::translate(one.graph, fl1, p1));
        auto u2 = translate::circuit_unitary(translate::translate(two.graph, fl2, p2));
        EXPECT_NEAR(translate::trace_overlap(u1, u2), 1.0, 1e-12);
    }
}

TEST(translate, extra_wire_tensors_in) {
    sim::Rng rng(6);
    auto base = fixtures::layer_20();
    auto wide = muta::build_layer({3, 0, {1}, 5});
    auto wire = muta::build_layer({1, std::nullopt, {}, 5});
    auto flb = fixtures::flow_of(base.graph), flw = fixtures::flow_of(wide.graph), flx = fixtures::flow_of(wire.graph);
    auto pw = fixtures::random_pattern(wide.graph, rng);
    auto pb = translate::MeasurementPattern::zeros(10);
    auto px = translate::MeasurementPattern::zeros(5);
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 4; ++c) {
            pb.angles[base.node(0, r, c)] = pw.angles[wide.node(0, r, c)];
        }
    }
    for (int c = 0; c < 4; ++c) {
        px.angles[c] = pw.angles[wide.node(0, 2, c)];
    }
    auto uw = translate::circuit_unitary(translate::translate(wide.graph, flw, pw));
    auto ub = translate::circuit_unitary(translate::translate(base.graph, flb, pb));
    auto ux = translate::circuit_unitary(translate::translate(wire.graph, flx, px));
    EXPECT_NEAR(translate::trace_overlap(uw, kron(ux, ub)), 1.0, 1e-12);
}

TEST(translate, phase_state_preparation_shifts_angle) {
    auto net = fixtures::layer_20();
    auto g = net.graph.with_init(2, graph::QubitState::t_state());
    auto fl = fixtures::flow_of(g);
    sim::Rng rng(8);
    auto p = fixtures::random_pattern(g, rng);
    auto shifted = p;
    shifted.angles[2] += fixtures::kPi / 4;
    auto u = translate::circuit_unitary(translate::translate(g, fl, p));
    auto v = translate::circuit_unitary(translate::translate(net.graph, fl, shifted));
    EXPECT_NEAR(translate::trace_overlap(u, v), 1.0, 1e-12);
    EXPECT_THROW(translate::translate_symbolic(net.graph.with_init(2, graph::QubitState::zero()), fl),
                 std::invalid_argument);
}

TEST(circuit_io, json_round_trip) {
    auto net = fixtures::layer_20();
    sim::Rng rng(9);
    auto c = translate::translate(net.graph, fixtures::flow_of(net.graph), fixtures::random_pattern(net.graph, rng));
    auto back = translate::circuit_from_json(translate::to_json(c));
    EXPECT_EQ(back.gates, c.gates);
    EXPECT_EQ(back.input_nodes, c.input_nodes);
    EXPECT_EQ(back.output_wires, c.output_wires);
}
