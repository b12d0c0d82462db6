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

// Command-line front end: config-driven experiments plus direct kernel-svm
// and hea entry points.  stdout carries one summary line, stderr the rest.
// Exit codes: 0 done, 1 invalid config or arguments, 2 IO failure.

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "mbqml/cli/config.hpp"
#include "mbqml/cli/experiments.hpp"
#include "mbqml/hea/greedy.hpp"
#include "mbqml/kernel/datasets.hpp"

namespace {

using nlohmann::json;
using namespace mbqml;

constexpr int kInvalid = 1;
constexpr int kIoError = 2;

int report_invalid(const std::vector<std::string> &diagnostics) {
    for (const auto &d : diagnostics) {
        std::cerr << d << "\n";
    }
    std::cout << "invalid: " << diagnostics.size() << " problem(s)\n";
    return kInvalid;
}

// Writes a single output file, creating its directory first.
void write_output(const std::string &path, const std::string &content) {
    const auto parent = std::filesystem::path(path).parent_path();
    std::error_code ec;
    if (!parent.empty() && !std::filesystem::create_directories(parent, ec) && ec) {
        throw std::runtime_error("cannot create " + parent.string() + ": " + ec.message());
    }
    cli::write_file_atomic(path, content);
}

int cmd_validate(const std::string &path) {
    json doc;
    try {
        doc = cli::read_json_file(path);
    } catch (const std::exception &e) {
        std::cerr << e.what() << "\n";
        return kIoError;
    }
    const auto d = cli::validate_config(doc);
    if (!d.empty()) {
        return report_invalid(d);
    }
    std::cout << "valid\n";
    return 0;
}

int cmd_run(const std::string &path, std::optional<uint64_t> seed, std::optional<std::string> out) {
    json doc;
    try {
        doc = cli::read_json_file(path);
    } catch (const std::exception &e) {
        std::cerr << e.what() << "\n";
        return kIoError;
    }
    if (doc.is_object()) {
        if (seed) {
            doc["seed"] = *seed;
        }
        if (out) {
            doc["out"] = *out;
        }
    }
    const auto d = cli::validate_config(doc);
    if (!d.empty()) {
        return report_invalid(d);
    }
    try {
        const auto outcome = cli::run_experiment(cli::parse_config(doc), std::cerr);
        std::cout << outcome.summary << "\n";
    } catch (const std::runtime_error &e) {
        std::cerr << e.what() << "\n";
        return kIoError;
    }
    return 0;
}

struct KernelArgs {
    std::string dataset = "circles";
    int n_train = 160;
    int n_test = 40;
    double noise = 0.1;
    double c = 1.0;
    uint64_t seed = 0;
    std::string out;
};

int cmd_kernel(const KernelArgs &a) {
    kernel::DatasetKind kind;
    try {
        kind = kernel::dataset_kind_from_string(a.dataset);
    } catch (const std::invalid_argument &e) {
        std::cerr << e.what() << "\n";
        return kInvalid;
    }
    kernel::SvmConfig cfg;
    cfg.c = a.c;
    kernel::KernelSvmReport rep;
    try {
        rep = kernel::run_kernel_svm(kind, a.n_train, a.n_test, a.noise, cfg, a.seed);
    } catch (const std::invalid_argument &e) {
        std::cerr << e.what() << "\n";
        return kInvalid;
    }
    json j = kernel::to_json(rep);
    j["config"] = kernel::to_json(cfg);
    j["noise"] = a.noise;
    try {
        write_output(a.out, j.dump(2) + "\n");
    } catch (const std::runtime_error &e) {
        std::cerr << e.what() << "\n";
        return kIoError;
    }
    std::cout << "kernel-svm " << a.dataset << " seed " << a.seed << ": train accuracy " << rep.train_accuracy
              << ", test accuracy " << rep.test_accuracy << "\n";
    return 0;
}

struct HeaArgs {
    std::string target = "t-isingxx";
    double epsilon = 0.0;
    int l_max = 4;
    double delta = 1e-3;
    int resets = 5;
    uint64_t seed = 0;
    std::string out;
};

int cmd_hea(const HeaArgs &a) {
    if (a.target != "t-isingxx") {
        std::cerr << "unknown target " << a.target << " (supported: t-isingxx)\n";
        return kInvalid;
    }
    hea::GreedyConfig cfg;
    cfg.epsilon = a.epsilon;
    cfg.l_max = a.l_max;
    cfg.delta = a.delta;
    cfg.n_reset = a.resets;
    sim::Rng rng(a.seed);
    const auto task = hea::make_t_isingxx_task(10, 7, true, rng);
    hea::SearchResult r;
    try {
        r = hea::greedy_opt([&task](const hea::Pattern &p) { return task.train_loss(p); }, task.space, task.slices,
                            cfg, rng);
    } catch (const std::invalid_argument &e) {
        std::cerr << e.what() << "\n";
        return kInvalid;
    }
    try {
        write_output(a.out, hea::log_csv(r));
    } catch (const std::runtime_error &e) {
        std::cerr << e.what() << "\n";
        return kIoError;
    }
    std::cerr << "best pattern:";
    for (int v : task.space.trainable) {
        std::cerr << " " << v << "=" << hea::kAngles[r.best_pattern[v]];
    }
    std::cerr << "\n";
    std::cout << "hea seed " << a.seed << ": " << (r.success ? "success" : "no success") << " after "
              << r.evaluations << " evaluations, best loss " << r.best_loss << "\n";
    return 0;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"mbqml: measurement-based quantum machine learning experiments"};
    app.require_subcommand(1);

    std::string config_path;
    std::optional<uint64_t> seed;
    std::optional<std::string> out;
    auto *run = app.add_subcommand("run", "Run an experiment config");
    run->add_option("config", config_path, "JSON config file")->required();
    run->add_option("--seed", seed, "Override the base seed");
    run->add_option("--out", out, "Override the output directory");

    std::string validate_path;
    auto *validate = app.add_subcommand("validate", "Check a config without running it");
    validate->add_option("config", validate_path, "JSON config file")->required();

    KernelArgs ka;
    auto *ks = app.add_subcommand("kernel-svm", "Train and score the quantum-kernel SVM once");
    ks->add_option("--dataset", ka.dataset, "circles | moons | blobs")->capture_default_str();
    ks->add_option("--n-train", ka.n_train)->capture_default_str();
    ks->add_option("--n-test", ka.n_test)->capture_default_str();
    ks->add_option("--noise", ka.noise, "Gaussian jitter per coordinate")->capture_default_str();
    ks->add_option("--c", ka.c, "Soft-margin regularization")->capture_default_str();
    ks->add_option("--seed", ka.seed)->capture_default_str();
    ks->add_option("--out", ka.out, "Results JSON path")->required();

    HeaArgs ha;
    auto *hs = app.add_subcommand("hea", "Run the slice-wise greedy search once");
    hs->add_option("--target", ha.target)->capture_default_str();
    hs->add_option("--epsilon", ha.epsilon)->capture_default_str();
    hs->add_option("--lmax", ha.l_max)->capture_default_str();
    hs->add_option("--delta", ha.delta)->capture_default_str();
    hs->add_option("--resets", ha.resets)->capture_default_str();
    hs->add_option("--seed", ha.seed)->capture_default_str();
    hs->add_option("--out", ha.out, "Evaluation log CSV path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e, std::cerr, std::cerr);
        return kInvalid;
    }

    if (*run) {
        return cmd_run(config_path, seed, out);
    }
    if (*validate) {
        return cmd_validate(validate_path);
    }
    if (*ks) {
        return cmd_kernel(ka);
    }
    return cmd_hea(ha);
}
