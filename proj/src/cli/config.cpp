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

#include "mbqml/cli/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <numbers>
#include <sstream>

#include "mbqml/muta/muta.hpp"
#include "mbqml/muta/network_io.hpp"

namespace mbqml::cli {

using nlohmann::json;

namespace {

enum class Type { number, integer, boolean, choice, number_list, layers };

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Field {
    std::string name;
    Type type;
    json def;
    double lo = -kInf;
    double hi = kInf;
    // Excludes `lo` itself.
    bool lo_open = false;
    std::vector<std::string> choices = {};
};

json layer_20() { return muta::to_json(muta::LayerSpec{2, 0, {1}, 5}); }

json p_grid(double step, int count, double first) {
    json a = json::array();
    for (int i = 0; i < count; ++i) {
        a.push_back(std::round((first + step * i) * 1e9) / 1e9);
    }
    return a;
}

const std::map<ExperimentKind, std::vector<Field>> &schemas() {
    const double pi = std::numbers::pi;
    static const std::map<ExperimentKind, std::vector<Field>> s = {
        {ExperimentKind::gate_learn,
         {{"target", Type::choice, "haar-1q", -kInf, kInf, false, {"haar-1q", "isingxx"}},
          {"angle", Type::number, pi / 2},
          {"layers", Type::layers, json::array({layer_20()})},
          {"n_total", Type::integer, 10, 2, 100000},
          {"n_train", Type::integer, 7, 1, 100000},
          {"steps", Type::integer, 500, 0, 1e7},
          {"lr", Type::number, 0.05, 0, kInf, true}}},
        {ExperimentKind::noise_sweep,
         {{"channel", Type::choice, "bitflip", -kInf, kInf, false, {"bitflip", "brownian"}},
          {"p", Type::number_list, p_grid(0.05, 11, 0.0), 0, 1},
          {"dt", Type::number_list, p_grid(0.1, 10, 0.1), 0, kInf, true},
          {"r", Type::integer, 1, 1, 1000},
          {"angle", Type::number, pi / 2},
          {"n_total", Type::integer, 100, 2, 100000},
          {"n_train", Type::integer, 50, 1, 100000},
          {"steps", Type::integer, 500, 0, 1e7},
          {"lr", Type::number, 0.05, 0, kInf, true}}},
        {ExperimentKind::depolarizing_sweep,
         {{"p", Type::number_list, p_grid(0.1, 5, 0.0), 0, 1},
          {"angle", Type::number, pi / 2},
          {"n_total", Type::integer, 13, 2, 100000},
          {"n_train", Type::integer, 10, 1, 100000},
          {"steps", Type::integer, 200, 0, 1e7},
          {"lr", Type::number, 0.05, 0, kInf, true}}},
        {ExperimentKind::qfi,
         {{"n_s1", Type::integer, 50, 1, 100000},
          {"n_s2", Type::integer, 50, 1, 100000},
          {"haar_states", Type::integer, 500, 0, 1000000},
          {"steps", Type::integer, 1000, 0, 1e7},
          {"lr", Type::number, 0.05, 0, kInf, true},
          {"epsilon", Type::number, 0.5, 0, kInf, true},
          {"train_fraction", Type::number, 0.8, 0, 1, true},
          {"band_lo", Type::number, 1.9, 0, 4},
          {"band_hi", Type::number, 2.1, 0, 4}}},
        {ExperimentKind::teleport,
         {{"n_train", Type::integer, 10, 1, 100000},
          {"n_test", Type::integer, 15, 1, 100000},
          {"steps", Type::integer, 500, 0, 1e7},
          {"lr", Type::number, 0.05, 0, kInf, true}}},
        {ExperimentKind::kernel_svm,
         {{"dataset", Type::choice, "circles", -kInf, kInf, false, {"circles", "moons", "blobs"}},
          {"n_train", Type::integer, 160, 1, 100000},
          {"n_test", Type::integer, 40, 1, 100000},
          {"noise", Type::number, 0.1, 0, kInf},
          {"c", Type::number, 1.0, 0, kInf, true},
          {"tolerance", Type::number, 1e-3, 0, kInf, true}}},
        {ExperimentKind::hea,
         {{"target", Type::choice, "t-isingxx", -kInf, kInf, false, {"t-isingxx"}},
          {"epsilon", Type::number, 0.0, 0, 1},
          {"l_max", Type::integer, 4, 1, 7},
          {"delta", Type::number, 1e-3, 0, kInf, true},
          {"n_reset", Type::integer, 5, 1, 100000},
          {"n_total", Type::integer, 10, 2, 100000},
          {"n_train", Type::integer, 7, 1, 100000},
          {"random_budget", Type::integer, 6561, 0, 1e8}}},
        {ExperimentKind::expressivity,
         {{"layers", Type::layers, json::array({layer_20()})}, {"samples", Type::integer, 2000, 1, 1e8}}},
    };
    return s;
}

const std::map<std::string, ExperimentKind> &kind_names() {
    static const std::map<std::string, ExperimentKind> m = {
        {"gate-learn", ExperimentKind::gate_learn},
        {"noise-sweep", ExperimentKind::noise_sweep},
        {"depolarizing-sweep", ExperimentKind::depolarizing_sweep},
        {"qfi", ExperimentKind::qfi},
        {"teleport", ExperimentKind::teleport},
        {"kernel-svm", ExperimentKind::kernel_svm},
        {"hea", ExperimentKind::hea},
        {"expressivity", ExperimentKind::expressivity},
    };
    return m;
}

std::string range_text(const Field &f) {
    std::ostringstream os;
    os << (f.lo_open ? "(" : "[") << f.lo << ", " << f.hi << "]";
    return os.str();
}

bool in_range(const Field &f, double v) {
    return std::isfinite(v) && (f.lo_open ? v > f.lo : v >= f.lo) && v <= f.hi;
}

// Wire count of the chained network, or a diagnostic.
std::optional<int> network_wires(const json &layers, std::string &error) {
    try {
        std::vector<muta::LayerSpec> specs;
        for (const auto &l : layers) {
            specs.push_back(muta::layer_from_json(l));
        }
        if (specs.empty()) {
            error = "needs at least one layer";
            return std::nullopt;
        }
        return static_cast<int>(muta::concatenate(muta::NetworkSpec::chain(specs)).graph.inputs().size());
    } catch (const std::exception &e) {
        error = e.what();
        return std::nullopt;
    }
}

void check_field(const Field &f, const json &v, const std::string &where, std::vector<std::string> &out) {
    auto bad = [&](const std::string &why) { out.push_back(where + ": " + why); };
    switch (f.type) {
        case Type::number:
            if (!v.is_number()) {
                bad("expected a number");
            } else if (!in_range(f, v.get<double>())) {
                bad("value " + v.dump() + " outside " + range_text(f));
            }
            break;
        case Type::integer:
            if (!v.is_number_integer()) {
                bad("expected an integer");
            } else if (!in_range(f, v.get<double>())) {
                bad("value " + v.dump() + " outside " + range_text(f));
            }
            break;
        case Type::boolean:
            if (!v.is_boolean()) {
                bad("expected true or false");
            }
            break;
        case Type::choice: {
            if (!v.is_string()) {
                bad("expected a string");
                break;
            }
            bool ok = false;
            std::string list;
            for (const auto &c : f.choices) {
                ok = ok || v.get<std::string>() == c;
                list += (list.empty() ? "" : ", ") + c;
            }
            if (!ok) {
                bad("unknown value " + v.dump() + " (one of " + list + ")");
            }
            break;
        }
        case Type::number_list:
            if (!v.is_array() || v.empty()) {
                bad("expected a non-empty list of numbers");
                break;
            }
            for (size_t i = 0; i < v.size(); ++i) {
                if (!v[i].is_number()) {
                    bad("entry " + std::to_string(i) + " is not a number");
                } else if (!in_range(f, v[i].get<double>())) {
                    bad("entry " + std::to_string(i) + " value " + v[i].dump() + " outside " + range_text(f));
                }
            }
            break;
        case Type::layers: {
            if (!v.is_array()) {
                bad("expected a list of layer objects");
                break;
            }
            std::string err;
            const auto wires = network_wires(v, err);
            if (!wires) {
                bad(err);
            } else if (*wires > 3) {
                bad("networks wider than 3 wires are not supported");
            }
            break;
        }
    }
}

// Cross-field constraints on resolved parameters.
void check_consistency(ExperimentKind kind, const json &p, std::vector<std::string> &out) {
    if (p.contains("n_total") && p.contains("n_train") && p["n_train"].is_number() && p["n_total"].is_number() &&
        p["n_train"].get<double>() >= p["n_total"].get<double>()) {
        out.push_back("params.n_train: must be smaller than params.n_total");
    }
    if (kind == ExperimentKind::gate_learn && p["target"] == "isingxx" && p["layers"].is_array()) {
        std::string err;
        const auto wires = network_wires(p["layers"], err);
        if (wires && *wires < 2) {
            out.push_back("params.layers: target isingxx needs at least 2 wires");
        }
    }
    if (kind == ExperimentKind::qfi && p["band_lo"].is_number() && p["band_hi"].is_number() &&
        p["band_lo"].get<double>() > p["band_hi"].get<double>()) {
        out.push_back("params.band_lo: must not exceed params.band_hi");
    }
}

}  // namespace

std::optional<ExperimentKind> kind_from_string(const std::string &s) {
    const auto it = kind_names().find(s);
    if (it == kind_names().end()) {
        return std::nullopt;
    }
    return it->second;
}

std::string to_string(ExperimentKind k) {
    for (const auto &[name, kind] : kind_names()) {
        if (kind == k) {
            return name;
        }
    }
    return "?";
}

ConfigError::ConfigError(std::vector<std::string> diagnostics)
    : std::runtime_error([&] {
          std::string s = "invalid config";
          for (const auto &d : diagnostics) {
              s += "\n  " + d;
          }
          return s;
      }()),
      diagnostics_(std::move(diagnostics)) {}

json default_params(ExperimentKind k) {
    json p = json::object();
    for (const auto &f : schemas().at(k)) {
        p[f.name] = f.def;
    }
    return p;
}

int default_runs(ExperimentKind k) {
    switch (k) {
        case ExperimentKind::gate_learn:
            return 20;
        case ExperimentKind::noise_sweep:
        case ExperimentKind::depolarizing_sweep:
        case ExperimentKind::qfi:
        case ExperimentKind::hea:
            return 5;
        case ExperimentKind::teleport:
            return 10;
        case ExperimentKind::kernel_svm:
            return 3;
        case ExperimentKind::expressivity:
            return 1;
    }
    return 1;
}

std::vector<std::string> validate_config(const json &doc) {
    std::vector<std::string> out;
    if (!doc.is_object()) {
        return {"config: expected a JSON object"};
    }
    static const std::vector<std::string> top = {"kind", "seed", "runs", "out", "params"};
    for (const auto &[key, value] : doc.items()) {
        if (std::find(top.begin(), top.end(), key) == top.end()) {
            out.push_back(key + ": unknown field");
        }
    }
    if (!doc.contains("seed")) {
        out.push_back("seed: missing required field");
    } else if (!doc["seed"].is_number_unsigned() &&
               !(doc["seed"].is_number_integer() && doc["seed"].get<int64_t>() >= 0)) {
        out.push_back("seed: expected a non-negative integer");
    }
    if (!doc.contains("out")) {
        out.push_back("out: missing required field");
    } else if (!doc["out"].is_string() || doc["out"].get<std::string>().empty()) {
        out.push_back("out: expected a non-empty path string");
    }
    if (doc.contains("runs") && !(doc["runs"].is_number_integer() && doc["runs"].get<long>() >= 1)) {
        out.push_back("runs: expected an integer >= 1");
    }
    std::optional<ExperimentKind> kind;
    if (!doc.contains("kind")) {
        out.push_back("kind: missing required field");
    } else if (!doc["kind"].is_string() || !(kind = kind_from_string(doc["kind"].get<std::string>()))) {
        std::string list;
        for (const auto &[name, k] : kind_names()) {
            list += (list.empty() ? "" : ", ") + name;
        }
        out.push_back("kind: unknown experiment kind " + doc["kind"].dump() + " (one of " + list + ")");
    }
    if (doc.contains("params") && !doc["params"].is_object()) {
        out.push_back("params: expected an object");
        return out;
    }
    if (!kind) {
        return out;
    }
    const json given = doc.value("params", json::object());
    json resolved = default_params(*kind);
    const auto &fields = schemas().at(*kind);
    for (const auto &[key, value] : given.items()) {
        const auto it = std::find_if(fields.begin(), fields.end(), [&](const Field &f) { return f.name == key; });
        if (it == fields.end()) {
            out.push_back("params." + key + ": unknown field for kind " + to_string(*kind));
            continue;
        }
        check_field(*it, value, "params." + key, out);
        resolved[key] = value;
    }
    check_consistency(*kind, resolved, out);
    return out;
}

ExperimentConfig parse_config(const json &doc) {
    auto diagnostics = validate_config(doc);
    if (!diagnostics.empty()) {
        throw ConfigError(std::move(diagnostics));
    }
    ExperimentConfig c;
    c.kind = *kind_from_string(doc["kind"].get<std::string>());
    c.seed = doc["seed"].get<uint64_t>();
    c.runs = doc.value("runs", default_runs(c.kind));
    c.out = doc["out"].get<std::string>();
    c.params = default_params(c.kind);
    const json given = doc.value("params", json::object());
    for (const auto &[key, value] : given.items()) {
        c.params[key] = value;
    }
    return c;
}

json to_json(const ExperimentConfig &c) {
    return {{"kind", to_string(c.kind)}, {"seed", c.seed}, {"runs", c.runs}, {"out", c.out}, {"params", c.params}};
}

json read_json_file(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot read " + path.string());
    }
    try {
        return json::parse(in);
    } catch (const json::parse_error &e) {
        throw std::runtime_error("malformed JSON in " + path.string() + ": " + e.what());
    }
}

void write_file_atomic(const std::filesystem::path &path, const std::string &content) {
    const auto tmp = std::filesystem::path(path.string() + ".tmp");
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw std::runtime_error("cannot write " + tmp.string());
        }
        out << content;
        out.flush();
        if (!out) {
            throw std::runtime_error("write failed for " + tmp.string());
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw std::runtime_error("cannot move " + tmp.string() + " to " + path.string());
    }
}

}  // namespace mbqml::cli
