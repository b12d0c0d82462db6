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

#include "mbqml/learn/qfi.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <stdexcept>

#include "mbqml/muta/muta.hpp"

namespace mbqml::learn {

namespace {

constexpr double kSql = 2.0;

std::array<double, QfiModel::kNumBeta> monomials(double pp, double pm) {
    return {1.0, pp, pm, pp * pp, pm * pm, pp * pm};
}

}  // namespace

double qfi_oracle(const sim::StateVector &psi, const QfiGenerator &h) {
    if (psi.n != 2) {
        throw std::invalid_argument("qfi_oracle: expects a 2-qubit state");
    }
    const double norm2 = h[0] * h[0] + h[1] * h[1] + h[2] * h[2];
    if (std::abs(norm2 - 0.25) > 1e-9) {
        throw std::invalid_argument("qfi_oracle: h coefficients must satisfy ax^2 + ay^2 + az^2 = 1/4");
    }
    sim::Mat2 h1 = h[0] * sim::pauli_x() + h[1] * sim::pauli_y() + h[2] * sim::pauli_z();
    sim::Mat big = sim::embed(h1, {0}, 2) + sim::embed(h1, {1}, 2);
    sim::Vec hv = big * psi.amps;
    const double mean = psi.amps.dot(hv).real();
    const double second = hv.squaredNorm();
    return 4.0 * (second - mean * mean);
}

sim::StateVector qfi_family_s1(double theta, double phi) {
    sim::Vec v = sim::Vec::Zero(4);
    v(0) = std::cos(theta);
    v(3) = std::polar(std::sin(theta), phi);
    return sim::StateVector(v);
}

sim::StateVector qfi_family_s2(double theta, double phi) {
    const double r = std::numbers::sqrt2 / 2;
    sim::Vec plus(2), minus(2);
    plus << r, r;
    minus << r, -r;
    sim::Vec pp = sim::StateVector::product({plus, plus}).amps;
    sim::Vec mm = sim::StateVector::product({minus, minus}).amps;
    return sim::StateVector(sim::Vec(std::cos(theta) * pp + std::polar(std::sin(theta), phi) * mm));
}

QfiSample make_qfi_sample(sim::StateVector psi, const QfiGenerator &h) {
    QfiSample s;
    s.qfi = qfi_oracle(psi, h);
    s.label = s.qfi > kSql ? 1 : 0;
    s.state = std::move(psi);
    return s;
}

std::vector<QfiSample> make_family_dataset(int n_s1, int n_s2, const QfiGenerator &h, sim::Rng &rng) {
    std::uniform_real_distribution<double> u(0.0, 2 * std::numbers::pi);
    std::vector<QfiSample> out;
    for (int i = 0; i < n_s1 + n_s2; ++i) {
        double theta = u(rng), phi = u(rng);
        out.push_back(make_qfi_sample(i < n_s1 ? qfi_family_s1(theta, phi) : qfi_family_s2(theta, phi), h));
    }
    return out;
}

std::vector<QfiSample> make_haar_qfi_dataset(int n, const QfiGenerator &h, sim::Rng &rng) {
    std::vector<QfiSample> out;
    for (int i = 0; i < n; ++i) {
        out.push_back(make_qfi_sample(sim::sample_haar_state(2, rng), h));
    }
    return out;
}

QfiModel::QfiModel() : model_(GateModel::all_trainable(muta::build_layer(muta::LayerSpec{2, std::nullopt, {}, 5}).graph)) {
    const int cols = 5;
    model_.par.tie.clear();
    for (int k = 0; k < kNumAngles; ++k) {
        model_.par.tie.push_back({k, cols + k});
    }
}

std::vector<double> QfiModel::params() const {
    std::vector<double> p(alpha.begin(), alpha.end());
    p.insert(p.end(), beta.begin(), beta.end());
    return p;
}

void QfiModel::set_params(std::span<const double> p) {
    if (p.size() != kNumParams) {
        throw std::invalid_argument("QfiModel: expected 10 parameters");
    }
    std::copy(p.begin(), p.begin() + kNumAngles, alpha.begin());
    std::copy(p.begin() + kNumAngles, p.end(), beta.begin());
}

std::pair<double, double> QfiModel::probabilities_from_slots(std::span<const double> slots,
                                                             const sim::StateVector &psi) const {
    if (psi.n != 2) {
        throw std::invalid_argument("QfiModel: expects 2-qubit states");
    }
    sim::Vec out = model_.unitary_from_slots(slots) * psi.amps;
    return {std::norm(out(0)), std::norm(out(3))};
}

std::pair<double, double> QfiModel::probabilities(const sim::StateVector &psi) const {
    return probabilities_from_slots(model_.par.expand(alpha), psi);
}

double QfiModel::polynomial(const std::array<double, kNumBeta> &beta, double pp, double pm) {
    auto m = monomials(pp, pm);
    return std::inner_product(beta.begin(), beta.end(), m.begin(), 0.0);
}

double QfiModel::estimate(const sim::StateVector &psi) const {
    auto [pp, pm] = probabilities(psi);
    return polynomial(beta, pp, pm);
}

double soft_margin_loss(const QfiModel &m, const std::vector<QfiSample> &data, const std::vector<int> &idx) {
    if (idx.empty()) {
        throw std::invalid_argument("soft_margin_loss: empty dataset");
    }
    double loss = 0.0;
    for (int i : idx) {
        const double f = m.estimate(data[i].state);
        loss += data[i].label == 1 ? std::max(0.0, -f + kSql + m.epsilon) : std::max(0.0, f - kSql + m.epsilon);
    }
    return loss / idx.size();
}

std::vector<double> soft_margin_gradient(const QfiModel &m, const std::vector<QfiSample> &data,
                                         const std::vector<int> &idx) {
    if (idx.empty()) {
        throw std::invalid_argument("soft_margin_gradient: empty dataset");
    }
    std::vector<double> grad(QfiModel::kNumParams, 0.0);
    const auto &par = m.model_.par;
    for (int i : idx) {
        const auto &psi = data[i].state;
        auto [pp, pm] = m.probabilities(psi);
        const double f = QfiModel::polynomial(m.beta, pp, pm);
        double dl_df = 0.0;
        if (data[i].label == 1 && -f + kSql + m.epsilon > 0) {
            dl_df = -1.0;
        } else if (data[i].label == 0 && f - kSql + m.epsilon > 0) {
            dl_df = 1.0;
        }
        if (dl_df == 0.0) {
            continue;
        }
        const auto &b = m.beta;
        const double df_dpp = b[1] + 2 * b[3] * pp + b[5] * pm;
        const double df_dpm = b[2] + 2 * b[4] * pm + b[5] * pp;
        auto jac = parameter_shift_jacobian(
            [&](const std::vector<double> &slots) {
                auto [a, c] = m.probabilities_from_slots(slots, psi);
                return std::vector<double>{a, c};
            },
            par, m.alpha);
        for (int k = 0; k < QfiModel::kNumAngles; ++k) {
            grad[k] += dl_df * (df_dpp * jac[k][0] + df_dpm * jac[k][1]);
        }
        auto mono = monomials(pp, pm);
        for (int k = 0; k < QfiModel::kNumBeta; ++k) {
            grad[QfiModel::kNumAngles + k] += dl_df * mono[k];
        }
    }
    for (auto &g : grad) {
        g /= idx.size();
    }
    return grad;
}

QfiAccuracy band_accuracy(const QfiModel &m, const std::vector<QfiSample> &data, const std::vector<int> &idx,
                          double band_lo, double band_hi) {
    QfiAccuracy acc;
    int correct = 0;
    for (int i : idx) {
        const double f = m.estimate(data[i].state);
        if (f > band_lo && f < band_hi) {
            ++acc.excluded;
            continue;
        }
        ++acc.counted;
        correct += (f > kSql ? 1 : 0) == data[i].label;
    }
    acc.accuracy = acc.counted ? static_cast<double>(correct) / acc.counted : 0.0;
    return acc;
}

QfiRun train_qfi_classifier(const std::vector<QfiSample> &data, const QfiConfig &cfg, sim::Rng &rng) {
    if (data.size() < 2) {
        throw std::invalid_argument("train_qfi_classifier: need at least two samples");
    }
    QfiRun out;
    std::vector<int> order(data.size());
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    const int n_train = static_cast<int>(std::lround(cfg.train_fraction * data.size()));
    out.train.assign(order.begin(), order.begin() + n_train);
    out.test.assign(order.begin() + n_train, order.end());

    QfiModel model;
    model.epsilon = cfg.epsilon;
    auto angles = initial_params(QfiModel::kNumAngles, cfg.train.zero_init, rng);
    std::vector<double> init(angles);
    init.resize(QfiModel::kNumParams, 0.0);

    Objective obj;
    obj.num_params = QfiModel::kNumParams;
    auto with = [model](const std::vector<double> &p) {
        QfiModel m = model;
        m.set_params(p);
        return m;
    };
    obj.train_loss = [&](const std::vector<double> &p) { return soft_margin_loss(with(p), data, out.train); };
    if (!out.test.empty()) {
        obj.test_loss = [&](const std::vector<double> &p) { return soft_margin_loss(with(p), data, out.test); };
    }
    obj.gradient = [&](const std::vector<double> &p) { return soft_margin_gradient(with(p), data, out.train); };
    out.run = train(obj, cfg.train, rng, init);
    out.run.config = {{"train", to_json(cfg.train)}, {"epsilon", cfg.epsilon}, {"train_fraction", cfg.train_fraction}};
    out.model = with(out.run.final_params);
    if (!out.test.empty()) {
        out.test_accuracy = band_accuracy(out.model, data, out.test);
    }
    return out;
}

nlohmann::json to_json(const QfiAccuracy &a) {
    return {{"accuracy", a.accuracy}, {"counted", a.counted}, {"excluded", a.excluded}};
}

}  // namespace mbqml::learn
