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

#ifndef MBQML_LEARN_QFI_HPP_
#define MBQML_LEARN_QFI_HPP_

#include <array>
#include <utility>
#include <vector>

#include "json.hpp"
#include "mbqml/learn/gate_model.hpp"
#include "mbqml/learn/train.hpp"
#include "mbqml/sim/haar.hpp"
#include "mbqml/sim/state.hpp"

namespace mbqml::learn {

// Coefficients (ax, ay, az) of h = ax X + ay Y + az Z.
using QfiGenerator = std::array<double, 3>;

// h = Z/2.
inline constexpr QfiGenerator kQfiZ = {0.0, 0.0, 0.5};

// 4 Var(h x 1 + 1 x h) for a 2-qubit pure state.  Throws unless
// ax^2 + ay^2 + az^2 = 1/4 (within 1e-9) and the state has 2 qubits.
double qfi_oracle(const sim::StateVector &psi, const QfiGenerator &h);

// cos t |00> + e^{i phi} sin t |11>.
sim::StateVector qfi_family_s1(double theta, double phi);
// cos t |++> + e^{i phi} sin t |-->.
sim::StateVector qfi_family_s2(double theta, double phi);

struct QfiSample {
    sim::StateVector state;
    // 1 iff F_Q > 2 (above the standard quantum limit).
    int label = 0;
    double qfi = 0.0;
};

QfiSample make_qfi_sample(sim::StateVector psi, const QfiGenerator &h);
// n_s1 states from S1 then n_s2 from S2, theta and phi uniform on (0, 2 pi).
std::vector<QfiSample> make_family_dataset(int n_s1, int n_s2, const QfiGenerator &h, sim::Rng &rng);
std::vector<QfiSample> make_haar_qfi_dataset(int n, const QfiGenerator &h, sim::Rng &rng);

// Column-tied angles on a triangle-free 2-wire layer, followed by a (Z, Z)
// readout: p+ = P(00), p- = P(11).  The estimate is
// beta . [1, p+, p-, p+^2, p-^2, p+ p-].
class QfiModel {
   public:
    static constexpr int kNumAngles = 4;
    static constexpr int kNumBeta = 6;
    static constexpr int kNumParams = kNumAngles + kNumBeta;

    QfiModel();

    std::array<double, kNumAngles> alpha{};
    std::array<double, kNumBeta> beta{};
    double epsilon = 0.5;

    // Parameters laid out as [alpha..., beta...].
    std::vector<double> params() const;
    void set_params(std::span<const double> p);

    std::pair<double, double> probabilities(const sim::StateVector &psi) const;
    double estimate(const sim::StateVector &psi) const;
    static double polynomial(const std::array<double, kNumBeta> &beta, double pp, double pm);

    const GateModel &gate_model() const { return model_; }

   private:
    std::pair<double, double> probabilities_from_slots(std::span<const double> slots,
                                                       const sim::StateVector &psi) const;
    friend std::vector<double> soft_margin_gradient(const QfiModel &m, const std::vector<QfiSample> &data,
                                                    const std::vector<int> &idx);
    GateModel model_;
};

// Mean over idx of y max(0, 2 + eps - F) + (1 - y) max(0, F - 2 + eps).
double soft_margin_loss(const QfiModel &m, const std::vector<QfiSample> &data, const std::vector<int> &idx);
// Chain rule through the hinge (subgradient 0 at the kink) and the
// polynomial; d p+-/d alpha by parameter shift, both tied slots shifted.
std::vector<double> soft_margin_gradient(const QfiModel &m, const std::vector<QfiSample> &data,
                                         const std::vector<int> &idx);

struct QfiAccuracy {
    double accuracy = 0.0;
    int counted = 0;
    // Estimates strictly inside (band_lo, band_hi) are not scored.
    int excluded = 0;
};

QfiAccuracy band_accuracy(const QfiModel &m, const std::vector<QfiSample> &data, const std::vector<int> &idx,
                          double band_lo = 1.9, double band_hi = 2.1);

struct QfiConfig {
    TrainConfig train{1000, {}, false};
    double epsilon = 0.5;
    double train_fraction = 0.8;
};

struct QfiRun {
    QfiModel model;
    TrainRun run;
    std::vector<int> train;
    std::vector<int> test;
    QfiAccuracy test_accuracy;
};

// Shuffles `data`, splits train/test, initializes angles per cfg.train and
// beta at 0, and minimizes the soft-margin loss with Adam.
QfiRun train_qfi_classifier(const std::vector<QfiSample> &data, const QfiConfig &cfg, sim::Rng &rng);

nlohmann::json to_json(const QfiAccuracy &a);

}  // namespace mbqml::learn

#endif  // MBQML_LEARN_QFI_HPP_
