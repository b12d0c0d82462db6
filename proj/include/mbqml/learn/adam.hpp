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

#ifndef MBQML_LEARN_ADAM_HPP_
#define MBQML_LEARN_ADAM_HPP_

#include <span>
#include <vector>

#include "json.hpp"

namespace mbqml::learn {

struct AdamConfig {
    double lr = 0.05;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double eps = 1e-8;
};

nlohmann::json to_json(const AdamConfig &c);
AdamConfig adam_from_json(const nlohmann::json &j);

// Adam with bias-corrected moments.
class Adam {
   public:
    Adam(size_t num_params, AdamConfig cfg = {});

    // params -= lr * mhat / (sqrt(vhat) + eps).  Throws on size mismatch.
    void step(std::span<double> params, std::span<const double> grad);

    int steps_taken() const { return t_; }
    const std::vector<double> &first_moment() const { return m_; }
    const std::vector<double> &second_moment() const { return v_; }
    const AdamConfig &config() const { return cfg_; }

   private:
    AdamConfig cfg_;
    std::vector<double> m_, v_;
    int t_ = 0;
};

}  // namespace mbqml::learn

#endif  // MBQML_LEARN_ADAM_HPP_
