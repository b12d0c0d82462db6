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

#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "mbqml/cli/config.hpp"
#include "mbqml/cli/experiments.hpp"

namespace mbqml::cli {
namespace {

using nlohmann::json;

std::filesystem::path scratch_dir(const std::string &name) {
    const auto d = std::filesystem::temp_directory_path() / ("mbqml_cli_test_" + name);
    std::filesystem::remove_all(d);
    return d;
}

std::string slurp(const std::filesystem::path &p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json base(const std::string &kind) { return {{"kind", kind}, {"seed", 7}, {"out", "unused"}}; }

TEST(Validate, CompleteConfigHasNoDiagnostics) {
    for (const char *k : {"gate-learn", "noise-sweep", "depolarizing-sweep", "qfi", "teleport", "kernel-svm", "hea",
                          "expressivity"}) {
        EXPECT_TRUE(validate_config(base(k)).empty()) << k;
    }
}

TEST(Validate, MissingSeedNamesTheField) {
    json doc = base("qfi");
    doc.erase("seed");
    const auto d = validate_config(doc);
    ASSERT_EQ(d.size(), 1u);
    EXPECT_EQ(d[0].rfind("seed", 0), 0u);
}

TEST(Validate, BitflipProbabilityOutOfRange) {
    json doc = base("noise-sweep");
    doc["params"] = {{"channel", "bitflip"}, {"p", {0.1, 1.5}}};
    const auto d = validate_config(doc);
    ASSERT_EQ(d.size(), 1u);
    EXPECT_NE(d[0].find("params.p"), std::string::npos);
    EXPECT_NE(d[0].find("1.5"), std::string::npos);
}

TEST(Validate, UnknownKindAndFields) {
    json doc = base("gate-learn");
    doc["kind"] = "dqn";
    EXPECT_EQ(validate_config(doc).size(), 1u);
    doc = base("hea");
    doc["params"] = {{"lmax", 3}};
    doc["extra"] = 1;
    EXPECT_EQ(validate_config(doc).size(), 2u);
    EXPECT_EQ(validate_config(json::array()).size(), 1u);
}

TEST(Validate, TypeAndConsistencyChecks) {
    json doc = base("gate-learn");
    doc["params"] = {{"n_total", 5}, {"n_train", 5}, {"steps", 1.5}, {"target", "isingxx"},
                     {"layers", json::array({{{"width", 1}}})}};
    const auto d = validate_config(doc);
    EXPECT_EQ(d.size(), 3u);
    doc = base("kernel-svm");
    doc["params"] = {{"dataset", "spirals"}, {"c", 0.0}};
    EXPECT_EQ(validate_config(doc).size(), 2u);
    doc = base("teleport");
    doc["seed"] = -1;
    doc["runs"] = 0;
    EXPECT_EQ(validate_config(doc).size(), 2u);
}

TEST(Parse, FillsDefaultsAndThrows) {
    json doc = base("hea");
    doc["params"] = {{"epsilon", 0.1}};
    const auto c = parse_config(doc);
    EXPECT_EQ(c.kind, ExperimentKind::hea);
    EXPECT_EQ(c.seed, 7u);
    EXPECT_EQ(c.runs, default_runs(ExperimentKind::hea));
    EXPECT_EQ(c.params["epsilon"], 0.1);
    EXPECT_EQ(c.params["l_max"], 4);
    EXPECT_EQ(to_json(c)["kind"], "hea");
    doc.erase("out");
    EXPECT_THROW(parse_config(doc), ConfigError);
    for (auto k : {ExperimentKind::gate_learn, ExperimentKind::kernel_svm}) {
        EXPECT_EQ(kind_from_string(to_string(k)), k);
    }
}

TEST(Files, AtomicWriteAndReadErrors) {
    const auto d = scratch_dir("atomic");
    std::filesystem::create_directories(d);
    write_file_atomic(d / "a.json", "{\"x\": 1}");
    EXPECT_EQ(read_json_file(d / "a.json")["x"], 1);
    EXPECT_FALSE(std::filesystem::exists(d / "a.json.tmp"));
    EXPECT_THROW(write_file_atomic(d / "missing" / "b.json", "x"), std::runtime_error);
    EXPECT_THROW(read_json_file(d / "nope.json"), std::runtime_error);
    write_file_atomic(d / "bad.json", "{");
    EXPECT_THROW(read_json_file(d / "bad.json"), std::runtime_error);
    std::filesystem::remove_all(d);
}

TEST(Stats, MeanAndSampleStd) {
    const auto s = summarize({1.0, 2.0, 3.0, 4.0});
    EXPECT_DOUBLE_EQ(s.mean, 2.5);
    EXPECT_NEAR(s.std, std::sqrt(5.0 / 3.0), 1e-15);
    EXPECT_EQ(summarize({3.0}).std, 0.0);
}

// Small versions of each experiment: files present, reruns byte-identical.
class RunTest : public ::testing::TestWithParam<json> {};

TEST_P(RunTest, WritesManifestAndIsDeterministic) {
    json doc = GetParam();
    const std::string kind = doc["kind"];
    const auto d1 = scratch_dir(kind + "_1"), d2 = scratch_dir(kind + "_2");
    std::ostringstream diag;
    doc["out"] = d1.string();
    const auto o1 = run_experiment(parse_config(doc), diag);
    doc["out"] = d2.string();
    const auto o2 = run_experiment(parse_config(doc), diag);
    EXPECT_FALSE(o1.summary.empty());
    EXPECT_EQ(o1.summary.find('\n'), std::string::npos);
    ASSERT_EQ(o1.files, o2.files);
    const auto manifest = read_json_file(d1 / "manifest.json");
    EXPECT_EQ(manifest["config"]["kind"], kind);
    EXPECT_TRUE(manifest["config"]["params"].is_object());
    for (const auto &f : o1.files) {
        EXPECT_TRUE(std::filesystem::exists(d1 / f)) << f;
        if (f != "manifest.json") {
            EXPECT_EQ(slurp(d1 / f), slurp(d2 / f)) << f;
        }
    }
    EXPECT_EQ(read_json_file(d1 / "results.json")["kind"], kind);
    std::filesystem::remove_all(d1);
    std::filesystem::remove_all(d2);
}

INSTANTIATE_TEST_SUITE_P(
    Kinds, RunTest,
    ::testing::Values(
        json{{"kind", "gate-learn"}, {"seed", 1}, {"runs", 2}, {"params", {{"steps", 5}}}},
        json{{"kind", "noise-sweep"}, {"seed", 1}, {"runs", 2},
             {"params", {{"p", {0.0, 0.3}}, {"n_total", 10}, {"n_train", 5}, {"steps", 3}}}},
        json{{"kind", "noise-sweep"}, {"seed", 1}, {"runs", 1},
             {"params", {{"channel", "brownian"}, {"dt", {0.1}}, {"n_total", 6}, {"n_train", 3}, {"steps", 2}}}},
        json{{"kind", "depolarizing-sweep"}, {"seed", 1}, {"runs", 1},
             {"params", {{"p", {0.2}}, {"n_total", 4}, {"n_train", 2}, {"steps", 2}}}},
        json{{"kind", "qfi"}, {"seed", 1}, {"runs", 2},
             {"params", {{"n_s1", 10}, {"n_s2", 10}, {"haar_states", 20}, {"steps", 5}}}},
        json{{"kind", "teleport"}, {"seed", 1}, {"runs", 1}, {"params", {{"n_train", 2}, {"n_test", 2}, {"steps", 2}}}},
        json{{"kind", "kernel-svm"}, {"seed", 1}, {"runs", 2}, {"params", {{"n_train", 30}, {"n_test", 10}}}},
        json{{"kind", "hea"}, {"seed", 1}, {"runs", 2}, {"params", {{"random_budget", 50}}}},
        json{{"kind", "expressivity"}, {"seed", 1}, {"runs", 1}, {"params", {{"samples", 50}}}}));

TEST(Run, UnwritableOutputIsAnIoError) {
    const auto d = scratch_dir("blocked");
    std::filesystem::create_directories(d);
    write_file_atomic(d / "file", "x");
    json doc = base("expressivity");
    doc["out"] = (d / "file" / "sub").string();
    doc["params"] = {{"samples", 5}};
    std::ostringstream diag;
    EXPECT_THROW(run_experiment(parse_config(doc), diag), std::runtime_error);
    std::filesystem::remove_all(d);
}

}  // namespace
}  // namespace mbqml::cli
