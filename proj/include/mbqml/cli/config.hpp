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

#ifndef MBQML_CLI_CONFIG_HPP_
#define MBQML_CLI_CONFIG_HPP_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace mbqml::cli {

enum class ExperimentKind { gate_learn, noise_sweep, depolarizing_sweep, qfi, teleport, kernel_svm, hea, expressivity };

std::optional<ExperimentKind> kind_from_string(const std::string &s);
std::string to_string(ExperimentKind k);

// Raised for configs that fail validation; what() joins the diagnostics.
class ConfigError : public std::runtime_error {
   public:
    explicit ConfigError(std::vector<std::string> diagnostics);
    const std::vector<std::string> &diagnostics() const { return diagnostics_; }

   private:
    std::vector<std::string> diagnostics_;
};

// A validated config with every parameter resolved.  Run r uses seed + r.
struct ExperimentConfig {
    ExperimentKind kind = ExperimentKind::gate_learn;
    uint64_t seed = 0;
    int runs = 1;
    std::string out;
    nlohmann::json params;
};

// Kind-specific parameters with their default values.
nlohmann::json default_params(ExperimentKind k);
int default_runs(ExperimentKind k);

// Problems with a config document, one line each naming the field; empty
// when the document is valid.  Document layout:
//   {"kind": ..., "seed": S, "runs": R, "out": DIR, "params": {...}}
// with "runs" and "params" optional.
std::vector<std::string> validate_config(const nlohmann::json &doc);

// Validates and fills defaults; throws ConfigError.
ExperimentConfig parse_config(const nlohmann::json &doc);

nlohmann::json to_json(const ExperimentConfig &c);

// Throws std::runtime_error when the file cannot be read or parsed.
nlohmann::json read_json_file(const std::filesystem::path &path);

// Writes to a sibling temporary file and renames it into place; throws
// std::runtime_error on failure.
void write_file_atomic(const std::filesystem::path &path, const std::string &content);

}  // namespace mbqml::cli

#endif  // MBQML_CLI_CONFIG_HPP_
