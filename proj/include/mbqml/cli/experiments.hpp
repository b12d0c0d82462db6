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

#ifndef MBQML_CLI_EXPERIMENTS_HPP_
#define MBQML_CLI_EXPERIMENTS_HPP_

#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "mbqml/cli/config.hpp"

namespace mbqml::cli {

// Mean and sample standard deviation (0 for a single value).
struct Stats {
    double mean = 0.0;
    double std = 0.0;
};

Stats summarize(const std::vector<double> &v);

struct RunOutcome {
    nlohmann::json results;
    // One line for stdout.
    std::string summary;
    // Files written, relative to the output directory.
    std::vector<std::string> files;
};

// Runs every seed of the experiment and writes into cfg.out:
//   manifest.json  resolved config plus the list of files;
//   results.json   per-run values and summary statistics;
//   *.csv          plot-ready tables, described in the README.
// Progress goes to `diag`.  Throws std::runtime_error on IO failure.
RunOutcome run_experiment(const ExperimentConfig &cfg, std::ostream &diag);

}  // namespace mbqml::cli

#endif  // MBQML_CLI_EXPERIMENTS_HPP_
