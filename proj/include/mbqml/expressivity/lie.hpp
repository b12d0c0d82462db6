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

#ifndef MBQML_EXPRESSIVITY_LIE_HPP_
#define MBQML_EXPRESSIVITY_LIE_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "json.hpp"
#include "mbqml/expressivity/pauli.hpp"
#include "mbqml/muta/muta.hpp"
#include "mbqml/sim/haar.hpp"
#include "mbqml/translate/circuit.hpp"

namespace mbqml::expressivity {

// Real combination i * sum_P c_P P of unsigned Pauli strings (anti-Hermitian).
struct LieElement {
    int n = 0;
    // PauliString::key() -> coefficient.
    std::map<uint64_t, double> terms;

    static LieElement of(const PauliString &p);
    bool is_monomial() const { return terms.size() == 1; }
    double norm() const;
};

// [a, b] computed symbolically from Pauli products.
LieElement commutator(const LieElement &a, const LieElement &b);

struct LieClosureResult {
    int n = 0;
    std::vector<LieElement> basis;
    int dim = 0;
    // dim == 4^n - 1, i.e. su(2^n).
    bool is_full = false;
};

// Unique unsigned generators of the parameterized rotations (fixed-angle
// rotations and Cliffords excluded), sorted by key.
std::vector<PauliString> extract_generators(const translate::GateCircuit &c);

// Repeated commutators until the real span stabilizes; independence via
// Gram-Schmidt in the 4^n-dimensional coefficient space, tolerance 1e-9.
// Throws std::invalid_argument for an empty set, mixed qubit counts or n > 5.
LieClosureResult lie_closure(const std::vector<PauliString> &gens);

struct VarianceReport {
    std::vector<PauliString> generators;
    int dim = 0;
    bool is_full = false;
    // 2^n / dim, only claimed for the full (simple) algebra.
    std::optional<double> bound;
    int samples = 0;
    double mean_loss = 0.0;
    double variance = 0.0;
    // Monte-Carlo standard error of `variance`.
    double variance_std_error = 0.0;
    uint64_t seed = 0;
};

// Samples every slot of the symbolic circuit uniformly on (-pi, pi], applies
// it to |0...0> and records the infidelity against `target`.  A circuit
// without slots gives a single deterministic loss and zero variance.
VarianceReport variance_probe(const translate::GateCircuit &symbolic, const sim::StateVector &target,
                              int num_samples, sim::Rng &rng);
// Builds, flows and translates `spec` first.  Requires n <= 3.
VarianceReport variance_probe(const muta::NetworkSpec &spec, const sim::StateVector &target, int num_samples,
                              sim::Rng &rng);

nlohmann::json to_json(const VarianceReport &r);

}  // namespace mbqml::expressivity

#endif  // MBQML_EXPRESSIVITY_LIE_HPP_
