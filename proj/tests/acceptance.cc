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


// Acceptance checks 1-13: one PASS/FAIL line per criterion, exit status 1 if any fail.
// Every threshold, seed and size is pinned below; nothing is adapted to the outcome.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "mbqml/expressivity/lie.hpp"
#include "mbqml/expressivity/pauli.hpp"
#include "mbqml/graph/flow.hpp"
#include "mbqml/hea/greedy.hpp"
#include "mbqml/kernel/datasets.hpp"
#include "mbqml/learn/gate_model.hpp"
#include "mbqml/learn/instrument.hpp"
#include "mbqml/learn/qfi.hpp"
#include "mbqml/learn/train.hpp"
#include "mbqml/muta/muta.hpp"
#include "mbqml/muta/teleport.hpp"
#include "mbqml/sim/haar.hpp"
#include "mbqml/sim/mbqc.hpp"
#include "mbqml/sim/state.hpp"
#include "mbqml/translate/translate.hpp"

namespace mbqml::acceptance {
namespace {

constexpr double kPi = std::numbers::pi;
using translate::Gate;
using translate::GateKind;

struct Verdict {
    bool pass = false;
    std::string detail;
};

std::string fmt(const char *f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

double angle(sim::Rng &rng) { return std::uniform_real_distribution<double>(-kPi, kPi)(rng); }

graph::Flow flow_of(const graph::OpenGraph &g) {
    auto fl = graph::find_flow(g);
    if (!fl) {
        throw std::logic_error("graph has no flow");
    }
    return *fl;
}

muta::Network layer_20() { return muta::build_layer({2, 0, {1}, 5}); }

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

double mean(const std::vector<double> &v) { return std::accumulate(v.begin(), v.end(), 0.0) / v.size(); }

// 1. Pattern-to-gate rows on the (2,0) layer.
Verdict table_rows() {
    constexpr double kTol = 1e-10, kSeconds = 1.0;
    const auto t0 = std::chrono::steady_clock::now();
    const auto net = layer_20();
    const auto fl = flow_of(net.graph);
    sim::Rng rng(101);
    double worst = 0;
    for (int t = 0; t < 50; ++t) {
        const double th = angle(rng), ph = angle(rng), la = angle(rng);
        auto p = translate::MeasurementPattern::zeros(net.graph.num_nodes());
        p.angles[1] = th, p.angles[2] = ph, p.angles[3] = la;
        const sim::Mat want = sim::embed(sim::rx(-la) * sim::rz(-ph) * sim::rx(-th), {0}, 2);
        const auto got = translate::circuit_unitary(translate::translate(net.graph, fl, p));
        worst = std::max(worst, 1 - translate::trace_overlap(got, want));
    }
    for (int t = 0; t < 50; ++t) {
        const double ph = angle(rng);
        auto p = translate::MeasurementPattern::zeros(net.graph.num_nodes());
        p.angles[6] = ph;
        const sim::Mat want = sim::ising_xx(-ph);
        const auto got = translate::circuit_unitary(translate::translate(net.graph, fl, p));
        worst = std::max(worst, 1 - translate::trace_overlap(got, want));
    }
    const double secs = seconds_since(t0);
    return {worst <= kTol && secs < kSeconds,
            fmt("max 1-overlap %.2e (tol %.0e) over 100 patterns, %.3f s (limit %.0f s)", worst, kTol, secs, kSeconds)};
}

// 2. Translated circuit vs every measurement branch.
Verdict branches_agree() {
    constexpr double kTol = 1e-10, kSeconds = 30.0;
    const auto t0 = std::chrono::steady_clock::now();
    const std::vector<muta::Network> nets = {
        muta::build_layer({1, std::nullopt, {}, 5}), layer_20(), muta::build_layer({3, 1, {0, 2}, 5}),
        muta::build_layer({3, 2, {0}, 6}),
        muta::concatenate(muta::NetworkSpec::chain({{2, 1, {0}, 5}, {2, 0, {1}, 5}}))};
    sim::Rng rng(202);
    double worst = 0;
    int patterns = 0;
    long branches = 0;
    bool prob_ok = true;
    for (const auto &net : nets) {
        const auto fl = flow_of(net.graph);
        const int n_in = static_cast<int>(net.graph.inputs().size());
        for (int t = 0; t < 40; ++t, ++patterns) {
            auto p = translate::MeasurementPattern::zeros(net.graph.num_nodes());
            for (int v = 0; v < net.graph.num_nodes(); ++v) {
                if (!net.graph.is_output(v)) {
                    p.angles[v] = angle(rng);
                }
            }
            const auto in = sim::sample_haar_state(n_in, rng);
            auto expect = in;
            sim::apply_circuit(expect, translate::translate(net.graph, fl, p));
            const auto res = sim::run_mbqc(net.graph, fl, p, in, sim::MbqcMode::branch_all);
            double total = 0;
            for (const auto &b : res.branches) {
                worst = std::max(worst, 1 - sim::fidelity(b.state, expect));
                total += b.probability;
            }
            prob_ok = prob_ok && std::abs(total - 1) < kTol;
            branches += static_cast<long>(res.branches.size());
        }
    }
    const double secs = seconds_since(t0);
    return {worst <= kTol && prob_ok && secs < kSeconds,
            fmt("%d patterns, %ld branches, max 1-fidelity %.2e (tol %.0e), probabilities sum to 1: %s, %.1f s "
                "(limit %.0f s)",
                patterns, branches, worst, kTol, prob_ok ? "yes" : "no", secs, kSeconds)};
}

// 3. Normalized rotation sequence of the (2,0) layer.
Verdict golden_sequence() {
    const auto net = layer_20();
    const auto form = expressivity::rotation_form(translate::translate_symbolic(net.graph, flow_of(net.graph)));
    translate::GateCircuit tail;
    tail.num_wires = 2;
    tail.gates = form.cliffords;
    const double tail_err = (translate::circuit_unitary(tail) - sim::Mat::Identity(4, 4)).norm();
    auto rot = [](GateKind k, int q0, int q1, int param) {
        Gate g;
        g.kind = k, g.q0 = q0, g.q1 = q1, g.param = param, g.coeff = -1.0;
        return g;
    };
    const std::vector<Gate> want = {rot(GateKind::rz, 0, -1, 0), rot(GateKind::rz, 1, -1, 5),
                                    rot(GateKind::ising_xx, 0, 1, 6), rot(GateKind::rx, 0, -1, 1),
                                    rot(GateKind::rz, 0, -1, 2), rot(GateKind::rx, 0, -1, 3),
                                    rot(GateKind::rz, 1, -1, 7), rot(GateKind::rx, 1, -1, 8)};
    const bool seq_ok = expressivity::normalized_gates(form) == want;
    return {seq_ok && tail_err < 1e-12,
            fmt("sequence Rz0(-a0) Rz1(-a5) XX(-a6) Rx0(-a1) Rz0(-a2) Rx0(-a3) Rz1(-a7) Rx1(-a8) %s, trailing "
                "Clifford deviation from identity %.1e",
                seq_ok ? "matches" : "DIFFERS", tail_err)};
}

// 4. Gate learning on the (2,0) layer.
Verdict gate_learning() {
    constexpr int kSeeds = 20, kNeeded = 18;
    constexpr double kThreshold = 1e-3;
    const muta::NetworkSpec spec{{muta::LayerSpec{2, 0, {1}, 5}}, {}};
    learn::GateTask task;  // N = 10, 7 train / 3 test, 500 Adam steps
    int haar_ok = 0, xx_ok = 0;
    double haar_worst = 0, xx_worst = 0;
    for (int s = 0; s < kSeeds; ++s) {
        sim::Rng rng(s);
        const sim::Mat u = sim::embed(sim::sample_haar_unitary(1, rng), {0}, 2);
        const double l = learn::train_gate(u, spec, task, rng).final_test_loss();
        haar_ok += l < kThreshold;
        haar_worst = std::max(haar_worst, l);
        sim::Rng rng2(s);
        const double m = learn::train_gate(sim::ising_xx(kPi / 2), spec, task, rng2).final_test_loss();
        xx_ok += m < kThreshold;
        xx_worst = std::max(xx_worst, m);
    }
    return {haar_ok >= kNeeded && xx_ok >= kNeeded,
            fmt("test infidelity < %.0e: Haar-1q %d/%d (worst %.1e), IsingXX(pi/2) %d/%d (worst %.1e); need %d/%d",
                kThreshold, haar_ok, kSeeds, haar_worst, xx_ok, kSeeds, xx_worst, kNeeded, kSeeds)};
}

double bitflip_mean_fidelity(double p) {
    const muta::NetworkSpec spec{{muta::LayerSpec{2, 0, {1}, 5}}, {}};
    learn::GateTask task;
    task.n_total = 100;
    task.n_train = 50;
    task.train.steps = 500;
    task.data_noise = sim::NoiseChannel::bitflip(p);
    std::vector<double> fid;
    for (uint64_t s = 1000; s < 1005; ++s) {
        sim::Rng rng(s);
        fid.push_back(1 - learn::train_gate(sim::ising_xx(kPi / 2), spec, task, rng).final_test_loss());
    }
    return mean(fid);
}

// 5. Bit-flip label noise bracket.
Verdict bitflip_bracket() {
    constexpr double kBar = 0.95;
    const double lo = bitflip_mean_fidelity(0.15), hi = bitflip_mean_fidelity(0.45);
    return {lo >= kBar && hi < kBar,
            fmt("mean clean test fidelity %.4f at p=0.15 (need >= %.2f), %.4f at p=0.45 (need < %.2f)", lo, kBar, hi,
                kBar)};
}

// 6. Depolarized resource during training, ideal resource at test.
Verdict depolarized_resource() {
    constexpr double kBar = 0.95;
    const muta::NetworkSpec spec{{muta::LayerSpec{2, 0, {1}, 5}}, {}};
    learn::GateTask task;
    task.n_total = 13;
    task.n_train = 10;
    task.train.steps = 200;
    task.resource_noise = 0.2;
    std::vector<double> fid;
    for (uint64_t s = 0; s < 5; ++s) {
        sim::Rng rng(s);
        fid.push_back(1 - learn::train_gate(sim::ising_xx(kPi / 2), spec, task, rng).final_test_loss());
    }
    const double m = mean(fid), lo = *std::min_element(fid.begin(), fid.end());
    return {m >= kBar, fmt("p=0.2, 5 seeds: mean clean test fidelity %.4f (need >= %.2f), min %.4f", m, kBar, lo)};
}

// 7. QFI classifier.
Verdict qfi_classifier() {
    constexpr double kBar = 0.9;
    learn::QfiConfig cfg;  // 1000 steps, epsilon 0.5, 80/20 split
    std::vector<double> test_acc, haar_acc;
    for (uint64_t s = 0; s < 5; ++s) {
        sim::Rng rng(s);
        const auto data = learn::make_family_dataset(50, 50, learn::kQfiZ, rng);
        const auto run = learn::train_qfi_classifier(data, cfg, rng);
        test_acc.push_back(learn::band_accuracy(run.model, data, run.test).accuracy);
        const auto haar = learn::make_haar_qfi_dataset(500, learn::kQfiZ, rng);
        std::vector<int> all(haar.size());
        std::iota(all.begin(), all.end(), 0);
        haar_acc.push_back(learn::band_accuracy(run.model, haar, all).accuracy);
    }
    sim::Rng rng(707);
    double max_product = 0;
    for (int i = 0; i < 500; ++i) {
        const auto a = sim::sample_haar_state(1, rng), b = sim::sample_haar_state(1, rng);
        max_product = std::max(max_product, learn::qfi_oracle(sim::StateVector::product({a.amps, b.amps}), learn::kQfiZ));
    }
    const double t = mean(test_acc), h = mean(haar_acc);
    return {t >= kBar && h >= kBar && max_product <= 2 + 1e-12,
            fmt("mean band-excluded test accuracy %.3f, Haar-500 accuracy %.3f (need >= %.1f); max QFI over 500 "
                "product states %.4f (need <= 2)",
                t, h, kBar, max_product)};
}

// 8. Teleportation instrument.
Verdict teleportation() {
    constexpr int kNeeded = 8;
    constexpr double kThreshold = 1e-3;
    const auto model = learn::InstrumentModel::from_teleport(muta::make_teleport_ansatz());
    learn::TeleportTask task;  // 10 train / 15 test, 500 steps
    int ok = 0;
    double worst = 0;
    for (uint64_t s = 0; s < 10; ++s) {
        sim::Rng rng(s);
        const double l = learn::train_teleport(model, task, rng).final_test_loss();
        ok += l < kThreshold;
        worst = std::max(worst, l);
    }
    return {ok >= kNeeded, fmt("test infidelity < %.0e in %d/10 seeds (need %d), worst %.1e", kThreshold, ok, kNeeded,
                               worst)};
}

// 9. Kernel SVM on the toy datasets.
Verdict kernel_svm() {
    constexpr double kBar = 0.90, kGap = 0.10;
    const kernel::SvmConfig cfg;  // C = 1, tolerance 1e-3
    auto acc = [&](kernel::DatasetKind k) {
        std::vector<double> a;
        for (uint64_t s = 0; s < 3; ++s) {
            a.push_back(kernel::run_kernel_svm(k, 160, 40, 0.1, cfg, s).test_accuracy);
        }
        return mean(a);
    };
    const double c = acc(kernel::DatasetKind::circles), m = acc(kernel::DatasetKind::moons),
                 b = acc(kernel::DatasetKind::blobs);
    return {c >= kBar && b >= kBar && m <= c - kGap,
            fmt("3-seed mean test accuracy: circles %.3f, blobs %.3f (need >= %.2f), moons %.3f (need <= circles - "
                "%.2f)",
                c, b, kBar, m, kGap)};
}

// 10. Greedy discrete search with magic-state injection.
Verdict hea_search() {
    constexpr int kNeeded = 3;
    constexpr long kBudget = 6561;
    const hea::GreedyConfig cfg;  // epsilon 0, L_max 4, delta 1e-3, 5 resets
    int ok = 0;
    std::string evals;
    for (uint64_t s = 0; s < 5; ++s) {
        sim::Rng rng(s);
        const auto task = hea::make_t_isingxx_task(10, 7, true, rng);
        const hea::DiscreteLoss loss = [&task](const hea::Pattern &x) { return task.train_loss(x); };
        const auto r = hea::greedy_opt(loss, task.space, task.slices, cfg, rng);
        ok += r.success && r.evaluations < kBudget;
        evals += (evals.empty() ? "" : ",") + std::to_string(r.evaluations);
    }
    sim::Rng rng(909);
    const auto injected = hea::make_t_isingxx_task(10, 7, true, rng);
    const auto plain = hea::make_t_isingxx_task(10, 7, false, rng);
    auto loss_of = [](const hea::HeaTask &t) {
        return hea::DiscreteLoss([&t](const hea::Pattern &x) { return t.train_loss(x); });
    };
    const double inj_min = hea::exhaustive_search(loss_of(injected), injected.space).min_loss;
    const double clifford_min = hea::exhaustive_search(loss_of(plain), plain.space, {0, 2}).min_loss;
    const double full_min = hea::exhaustive_search(loss_of(plain), plain.space).min_loss;
    return {ok >= kNeeded && inj_min < 1e-6 && clifford_min > cfg.delta,
            fmt("greedy solved %d/5 seeds within %ld evaluations (need %d; used %s); exhaustive min with |T> %.1e "
                "(need < 1e-6); without injection, Clifford-angle min %.4f (need > %.0e), with pi/4 allowed %.1e",
                ok, kBudget, kNeeded, evals.c_str(), inj_min, clifford_min, cfg.delta, full_min)};
}

// 11. Lie closure and loss variance of the (2,0) layer.
Verdict lie_variance() {
    const auto net = layer_20();
    const auto sym = translate::translate_symbolic(net.graph, flow_of(net.graph));
    const auto lie = expressivity::lie_closure(expressivity::extract_generators(sym));
    sim::Rng rng(1111);
    const auto target = sim::sample_haar_state(2, rng);
    const auto rep = expressivity::variance_probe(sym, target, 2000, rng);
    const double bound = 4.0 / 15.0;
    const bool ok = lie.dim == 15 && rep.variance <= bound + 3 * rep.variance_std_error;
    return {ok, fmt("Lie dimension %d (need 15); variance %.5f +- %.5f over %d samples (need <= %.5f + 3 se)", lie.dim,
                    rep.variance, rep.variance_std_error, rep.samples, bound)};
}

// 12. Reduced purity of IsingXX(-a)|00>.
Verdict purity_sweep() {
    constexpr double kTol = 1e-10;
    double worst = 0;
    for (int k = 0; k < 100; ++k) {
        const double a = -kPi + 2 * kPi * k / 99.0;
        auto s = sim::StateVector::basis(2);
        sim::apply_gate(s, Gate{GateKind::ising_xx, 0, 1, -a});
        const double p = sim::partial_trace(sim::DensityMatrix::from_pure(s), {0}).purity();
        worst = std::max(worst, std::abs(p - (1 + std::cos(a) * std::cos(a)) / 2));
    }
    return {worst <= kTol, fmt("max |purity - (1+cos^2 a)/2| %.2e over 100 angles (tol %.0e)", worst, kTol)};
}

double max_abs_diff(const std::vector<double> &a, const std::vector<double> &b) {
    double d = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        d = std::max(d, std::abs(a[i] - b[i]));
    }
    return a.size() == b.size() ? d : INFINITY;
}

std::vector<double> random_params(int n, sim::Rng &rng) {
    std::vector<double> p(n);
    for (auto &x : p) {
        x = angle(rng);
    }
    return p;
}

// 13. Parameter-shift gradients against central differences.
Verdict gradients() {
    constexpr double kTol = 1e-4;
    sim::Rng rng(1313);
    auto plain = learn::GateModel::all_trainable(layer_20().graph);
    auto tied = plain;
    tied.par.tie = {{0, 5}, {1, 6}, {2, 7}, {3, 8}};
    auto chain = learn::GateModel::from_spec(muta::NetworkSpec::chain({{2, 1, {0}, 5}, {2, 0, {1}, 5}}));
    const auto tele = learn::InstrumentModel::from_teleport(muta::make_teleport_ansatz());
    double worst = 0;
    int configs = 0;
    for (const auto *m : {&plain, &tied, &chain}) {
        for (int t = 0; t < 25; ++t, ++configs) {
            const auto ds = learn::make_unitary_dataset(sim::sample_haar_unitary(2, rng), 5, 5, rng);
            const auto obj = learn::gate_objective(*m, ds);
            const auto p = random_params(m->par.num_params(), rng);
            worst = std::max(worst, max_abs_diff(obj.gradient(p), learn::central_difference(obj.train_loss, p)));
        }
    }
    for (int t = 0; t < 25; ++t, ++configs) {
        const std::vector<sim::StateVector> in = {sim::sample_haar_state(1, rng), sim::sample_haar_state(1, rng)};
        const auto slots_loss = [&](const std::vector<double> &s) { return learn::teleport_infidelity(tele, s, in); };
        const auto loss = [&](const std::vector<double> &p) { return slots_loss(tele.par.expand(p)); };
        const auto p = random_params(tele.par.num_params(), rng);
        worst = std::max(worst, max_abs_diff(learn::parameter_shift(slots_loss, tele.par, p),
                                             learn::central_difference(loss, p)));
    }
    return {worst <= kTol,
            fmt("%d configurations (plain, tied, two-layer chain, teleport): max |shift - central| %.2e (tol %.0e)",
                configs, worst, kTol)};
}

}  // namespace
}  // namespace mbqml::acceptance

int main() {
    using namespace mbqml::acceptance;
    const std::vector<std::pair<const char *, std::function<Verdict()>>> criteria = {
        {"pattern-to-gate rows", table_rows},
        {"branch agreement", branches_agree},
        {"normalized rotation sequence", golden_sequence},
        {"gate learning", gate_learning},
        {"bit-flip bracket", bitflip_bracket},
        {"depolarized resource", depolarized_resource},
        {"QFI classifier", qfi_classifier},
        {"teleportation", teleportation},
        {"kernel SVM", kernel_svm},
        {"greedy discrete search", hea_search},
        {"Lie closure and variance", lie_variance},
        {"reduced purity", purity_sweep},
        {"parameter-shift gradients", gradients},
    };
    int failed = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = criteria[i].second();
        } catch (const std::exception &e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        failed += !v.pass;
        std::printf("%s criterion %zu (%s): %s [%.1f s]\n", v.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                    v.detail.c_str(), seconds_since(t0));
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
