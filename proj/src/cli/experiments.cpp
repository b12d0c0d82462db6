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

#include "mbqml/cli/experiments.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "mbqml/expressivity/lie.hpp"
#include "mbqml/hea/greedy.hpp"
#include "mbqml/kernel/datasets.hpp"
#include "mbqml/learn/instrument.hpp"
#include "mbqml/learn/qfi.hpp"
#include "mbqml/learn/train.hpp"
#include "mbqml/muta/network_io.hpp"
#include "mbqml/muta/teleport.hpp"

namespace mbqml::cli {

using nlohmann::json;

namespace {

// Collects the files of one experiment directory.
class Output {
   public:
    explicit Output(const std::filesystem::path &dir) : dir_(dir) {
        std::error_code ec;
        std::filesystem::create_directories(dir_, ec);
        if (ec || !std::filesystem::is_directory(dir_)) {
            throw std::runtime_error("cannot create output directory " + dir_.string());
        }
    }

    void write(const std::string &name, const std::string &content) {
        write_file_atomic(dir_ / name, content);
        files_.push_back(name);
    }

    const std::vector<std::string> &files() const { return files_; }

   private:
    std::filesystem::path dir_;
    std::vector<std::string> files_;
};

// CSV rows with full double precision.
class Csv {
   public:
    explicit Csv(const std::string &header) {
        os_.precision(17);
        os_ << header << '\n';
    }

    template <typename... Ts>
    void row(const Ts &...values) {
        bool first = true;
        ((os_ << (first ? "" : ",") << values, first = false), ...);
        os_ << '\n';
    }

    std::string str() const { return os_.str(); }

   private:
    std::ostringstream os_;
};

json stats_json(const Stats &s) { return {{"mean", s.mean}, {"std", s.std}}; }

learn::TrainConfig train_config(const json &p) {
    learn::TrainConfig t;
    t.steps = p["steps"].get<int>();
    t.adam.lr = p["lr"].get<double>();
    return t;
}

muta::NetworkSpec chain_of(const json &layers) {
    std::vector<muta::LayerSpec> specs;
    for (const auto &l : layers) {
        specs.push_back(muta::layer_from_json(l));
    }
    return muta::NetworkSpec::chain(specs);
}

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(4);
    os << v;
    return os.str();
}

std::string seed_file(const std::string &stem, uint64_t seed) { return stem + "_seed" + std::to_string(seed) + ".csv"; }

// Per-step mean/std over runs of equal length.
std::string curve_summary_csv(const std::vector<learn::TrainRun> &runs) {
    Csv csv("step,train_mean,train_std,test_mean,test_std");
    if (runs.empty()) {
        return csv.str();
    }
    for (size_t t = 0; t < runs.front().train_loss.size(); ++t) {
        std::vector<double> tr, te;
        for (const auto &r : runs) {
            tr.push_back(r.train_loss[t]);
            te.push_back(r.test_loss[t]);
        }
        const auto a = summarize(tr), b = summarize(te);
        csv.row(t, a.mean, a.std, b.mean, b.std);
    }
    return csv.str();
}

RunOutcome gate_learn(const ExperimentConfig &cfg, Output &out, std::ostream &diag) {
    const auto &p = cfg.params;
    const auto spec = chain_of(p["layers"]);
    const int wires = static_cast<int>(muta::concatenate(spec).graph.inputs().size());
    learn::GateTask task;
    task.n_total = p["n_total"];
    task.n_train = p["n_train"];
    task.train = train_config(p);
    const bool haar = p["target"] == "haar-1q";

    std::vector<learn::TrainRun> runs;
    json per_run = json::array();
    std::vector<double> finals;
    int below = 0;
    for (int r = 0; r < cfg.runs; ++r) {
        const uint64_t seed = cfg.seed + r;
        sim::Rng rng(seed);
        const sim::Mat target = haar ? sim::embed(sim::sample_haar_unitary(1, rng), {0}, wires)
                                     : sim::embed(sim::ising_xx(p["angle"].get<double>()), {0, 1}, wires);
        auto run = learn::train_gate(target, spec, task, rng);
        run.seed = seed;
        out.write(seed_file("curve", seed), learn::curve_csv(run));
        finals.push_back(run.final_test_loss());
        below += run.final_test_loss() < 1e-3;
        per_run.push_back(learn::to_json(run));
        diag << "gate-learn seed " << seed << ": test infidelity " << run.final_test_loss() << "\n";
        runs.push_back(std::move(run));
    }
    out.write("curve_summary.csv", curve_summary_csv(runs));
    const auto s = summarize(finals);
    RunOutcome o;
    o.results = {{"runs", per_run}, {"final_test_infidelity", stats_json(s)}, {"runs_below_1e-3", below}};
    o.summary = "gate-learn: " + std::to_string(cfg.runs) + " runs, final test infidelity " + fmt(s.mean) + " +- " +
                fmt(s.std) + ", " + std::to_string(below) + " below 1e-3";
    return o;
}

RunOutcome noise_sweep(const ExperimentConfig &cfg, Output &out, std::ostream &diag) {
    const auto &p = cfg.params;
    const bool bitflip = p["channel"] == "bitflip";
    const muta::NetworkSpec spec{{muta::LayerSpec{2, 0, {1}, 5}}, {}};
    const sim::Mat target = sim::ising_xx(p["angle"].get<double>());
    learn::GateTask task;
    task.n_total = p["n_total"];
    task.n_train = p["n_train"];
    task.train = train_config(p);
    const auto values = (bitflip ? p["p"] : p["dt"]).get<std::vector<double>>();
    const int r_steps = p["r"];

    Csv csv(bitflip ? "p,fidelity_mean,fidelity_std" : "dt,strength,fidelity_mean,fidelity_std");
    json points = json::array();
    std::string line;
    for (double v : values) {
        task.data_noise = bitflip ? sim::NoiseChannel::bitflip(v) : sim::NoiseChannel::brownian(v, r_steps);
        std::vector<double> fid;
        json per_run = json::array();
        for (int r = 0; r < cfg.runs; ++r) {
            const uint64_t seed = cfg.seed + r;
            sim::Rng rng(seed);
            auto run = learn::train_gate(target, spec, task, rng);
            fid.push_back(1.0 - run.final_test_loss());
            per_run.push_back({{"seed", seed},
                               {"clean_test_fidelity", fid.back()},
                               {"final_train_loss", run.final_train_loss()},
                               {"final_params", run.final_params}});
        }
        const auto s = summarize(fid);
        diag << "noise-sweep " << (bitflip ? "p " : "dt ") << v << ": fidelity " << s.mean << "\n";
        json pt = {{bitflip ? "p" : "dt", v}, {"clean_test_fidelity", stats_json(s)}, {"runs", per_run}};
        if (bitflip) {
            csv.row(v, s.mean, s.std);
        } else {
            const double strength = sim::brownian_strength(v, r_steps, 2);
            pt["strength"] = strength;
            csv.row(v, strength, s.mean, s.std);
        }
        points.push_back(pt);
        line += (line.empty() ? "" : " ") + fmt(v) + ":" + fmt(s.mean);
    }
    out.write("sweep.csv", csv.str());
    RunOutcome o;
    o.results = {{"channel", p["channel"]}, {"points", points}};
    o.summary = "noise-sweep " + p["channel"].get<std::string>() + ": clean test fidelity " + line;
    return o;
}

RunOutcome depolarizing_sweep(const ExperimentConfig &cfg, Output &out, std::ostream &diag) {
    const auto &p = cfg.params;
    const muta::NetworkSpec spec{{muta::LayerSpec{2, 0, {1}, 5}}, {}};
    const sim::Mat target = sim::ising_xx(p["angle"].get<double>());
    learn::GateTask task;
    task.n_total = p["n_total"];
    task.n_train = p["n_train"];
    task.train = train_config(p);

    Csv csv("p,noisy_train_loss_mean,noisy_train_loss_std,clean_fidelity_mean,clean_fidelity_std");
    json points = json::array();
    std::string line;
    for (double v : p["p"].get<std::vector<double>>()) {
        task.resource_noise = v;
        std::vector<double> fid, noisy;
        json per_run = json::array();
        for (int r = 0; r < cfg.runs; ++r) {
            const uint64_t seed = cfg.seed + r;
            sim::Rng rng(seed);
            auto run = learn::train_gate(target, spec, task, rng);
            fid.push_back(1.0 - run.final_test_loss());
            noisy.push_back(run.final_train_loss());
            per_run.push_back({{"seed", seed},
                               {"clean_test_fidelity", fid.back()},
                               {"noisy_train_loss", noisy.back()},
                               {"final_params", run.final_params}});
        }
        const auto f = summarize(fid), n = summarize(noisy);
        diag << "depolarizing-sweep p " << v << ": clean fidelity " << f.mean << "\n";
        csv.row(v, n.mean, n.std, f.mean, f.std);
        points.push_back({{"p", v}, {"clean_test_fidelity", stats_json(f)}, {"noisy_train_loss", stats_json(n)},
                          {"runs", per_run}});
        line += (line.empty() ? "" : " ") + fmt(v) + ":" + fmt(f.mean);
    }
    out.write("sweep.csv", csv.str());
    RunOutcome o;
    o.results = {{"points", points}};
    o.summary = "depolarizing-sweep: clean test fidelity " + line;
    return o;
}

RunOutcome qfi(const ExperimentConfig &cfg, Output &out, std::ostream &diag) {
    const auto &p = cfg.params;
    learn::QfiConfig qc;
    qc.train = train_config(p);
    qc.epsilon = p["epsilon"];
    qc.train_fraction = p["train_fraction"];
    const double lo = p["band_lo"], hi = p["band_hi"];
    const int n_haar = p["haar_states"];

    Csv csv("seed,test_accuracy,test_counted,haar_accuracy,haar_counted");
    json per_run = json::array();
    std::vector<double> test_acc, haar_acc;
    std::vector<learn::TrainRun> runs;
    for (int r = 0; r < cfg.runs; ++r) {
        const uint64_t seed = cfg.seed + r;
        sim::Rng rng(seed);
        const auto data = learn::make_family_dataset(p["n_s1"], p["n_s2"], learn::kQfiZ, rng);
        auto run = learn::train_qfi_classifier(data, qc, rng);
        run.run.seed = seed;
        const auto test = learn::band_accuracy(run.model, data, run.test, lo, hi);
        learn::QfiAccuracy haar;
        if (n_haar > 0) {
            const auto hd = learn::make_haar_qfi_dataset(n_haar, learn::kQfiZ, rng);
            std::vector<int> all(n_haar);
            std::iota(all.begin(), all.end(), 0);
            haar = learn::band_accuracy(run.model, hd, all, lo, hi);
            haar_acc.push_back(haar.accuracy);
        }
        test_acc.push_back(test.accuracy);
        csv.row(seed, test.accuracy, test.counted, haar.accuracy, haar.counted);
        out.write(seed_file("curve", seed), learn::curve_csv(run.run));
        per_run.push_back({{"seed", seed},
                           {"test", learn::to_json(test)},
                           {"haar", learn::to_json(haar)},
                           {"alpha", run.model.alpha},
                           {"beta", run.model.beta},
                           {"final_train_loss", run.run.final_train_loss()}});
        diag << "qfi seed " << seed << ": test accuracy " << test.accuracy << "\n";
        runs.push_back(std::move(run.run));
    }
    out.write("results.csv", csv.str());
    out.write("curve_summary.csv", curve_summary_csv(runs));
    const auto t = summarize(test_acc), h = summarize(haar_acc);
    RunOutcome o;
    o.results = {{"runs", per_run}, {"test_accuracy", stats_json(t)}, {"haar_accuracy", stats_json(h)}};
    o.summary = "qfi: band-excluded test accuracy " + fmt(t.mean) + " +- " + fmt(t.std) +
                (n_haar > 0 ? ", haar accuracy " + fmt(h.mean) + " +- " + fmt(h.std) : "");
    return o;
}

RunOutcome teleport(const ExperimentConfig &cfg, Output &out, std::ostream &diag) {
    const auto &p = cfg.params;
    const auto model = learn::InstrumentModel::from_teleport(muta::make_teleport_ansatz());
    learn::TeleportTask task;
    task.n_train = p["n_train"];
    task.n_test = p["n_test"];
    task.train = train_config(p);

    json per_run = json::array();
    std::vector<double> finals;
    std::vector<learn::TrainRun> runs;
    int below = 0;
    for (int r = 0; r < cfg.runs; ++r) {
        const uint64_t seed = cfg.seed + r;
        sim::Rng rng(seed);
        auto run = learn::train_teleport(model, task, rng);
        run.seed = seed;
        out.write(seed_file("curve", seed), learn::curve_csv(run));
        finals.push_back(run.final_test_loss());
        below += run.final_test_loss() < 1e-3;
        per_run.push_back(learn::to_json(run));
        diag << "teleport seed " << seed << ": test infidelity " << run.final_test_loss() << "\n";
        runs.push_back(std::move(run));
    }
    out.write("curve_summary.csv", curve_summary_csv(runs));
    const auto s = summarize(finals);
    RunOutcome o;
    o.results = {{"runs", per_run}, {"final_test_infidelity", stats_json(s)}, {"runs_below_1e-3", below}};
    o.summary = "teleport: " + std::to_string(cfg.runs) + " runs, final test infidelity " + fmt(s.mean) + ", " +
                std::to_string(below) + " below 1e-3";
    return o;
}

RunOutcome kernel_svm(const ExperimentConfig &cfg, Output &out, std::ostream &diag) {
    const auto &p = cfg.params;
    const auto kind = kernel::dataset_kind_from_string(p["dataset"]);
    kernel::SvmConfig sc;
    sc.c = p["c"];
    sc.tolerance = p["tolerance"];

    Csv csv("seed,train_accuracy,test_accuracy,num_support");
    json per_run = json::array();
    std::vector<double> acc;
    for (int r = 0; r < cfg.runs; ++r) {
        const uint64_t seed = cfg.seed + r;
        const auto rep = kernel::run_kernel_svm(kind, p["n_train"], p["n_test"], p["noise"], sc, seed);
        Csv dec("x0,x1,label,decision");
        for (size_t i = 0; i < rep.test_points.size(); ++i) {
            dec.row(rep.test_points[i][0], rep.test_points[i][1], rep.test_labels[i], rep.test_decision[i]);
        }
        out.write(seed_file("decision", seed), dec.str());
        csv.row(seed, rep.train_accuracy, rep.test_accuracy, rep.num_support);
        acc.push_back(rep.test_accuracy);
        per_run.push_back(kernel::to_json(rep));
        diag << "kernel-svm seed " << seed << ": test accuracy " << rep.test_accuracy << "\n";
    }
    out.write("results.csv", csv.str());
    const auto s = summarize(acc);
    RunOutcome o;
    o.results = {{"runs", per_run}, {"test_accuracy", stats_json(s)}};
    o.summary = "kernel-svm " + p["dataset"].get<std::string>() + ": test accuracy " + fmt(s.mean) + " +- " + fmt(s.std);
    return o;
}

RunOutcome hea_search(const ExperimentConfig &cfg, Output &out, std::ostream &diag) {
    const auto &p = cfg.params;
    hea::GreedyConfig gc;
    gc.epsilon = p["epsilon"];
    gc.l_max = p["l_max"];
    gc.delta = p["delta"];
    gc.n_reset = p["n_reset"];
    const long budget = p["random_budget"];

    Csv csv("seed,success,evaluations,best_train_loss,best_test_loss,random_best_loss");
    json per_run = json::array();
    int solved = 0;
    for (int r = 0; r < cfg.runs; ++r) {
        const uint64_t seed = cfg.seed + r;
        sim::Rng rng(seed);
        const auto task = hea::make_t_isingxx_task(p["n_total"], p["n_train"], true, rng);
        const hea::DiscreteLoss loss = [&task](const hea::Pattern &x) { return task.train_loss(x); };
        const auto g = hea::greedy_opt(loss, task.space, task.slices, gc, rng);
        out.write(seed_file("greedy", seed), hea::log_csv(g));
        json rj = {{"seed", seed}, {"greedy", hea::to_json(g)}, {"test_loss", task.test_loss(g.best_pattern)}};
        double random_best = std::nan("");
        if (budget > 0) {
            const auto rs = hea::random_search(loss, task.space, budget, rng);
            out.write(seed_file("random", seed), hea::log_csv(rs));
            random_best = rs.best_loss;
            rj["random"] = hea::to_json(rs);
        }
        solved += g.success;
        csv.row(seed, g.success ? 1 : 0, g.evaluations, g.best_loss, task.test_loss(g.best_pattern), random_best);
        per_run.push_back(rj);
        diag << "hea seed " << seed << ": success " << g.success << " after " << g.evaluations << " evaluations\n";
    }
    out.write("results.csv", csv.str());
    RunOutcome o;
    o.results = {{"runs", per_run}, {"solved", solved}};
    o.summary = "hea: " + std::to_string(solved) + "/" + std::to_string(cfg.runs) + " runs reached loss < " +
                fmt(gc.delta);
    return o;
}

RunOutcome expressivity_probe(const ExperimentConfig &cfg, Output &out, std::ostream &diag) {
    const auto &p = cfg.params;
    const auto spec = chain_of(p["layers"]);
    const auto model = learn::GateModel::from_spec(spec);
    const auto gens = expressivity::extract_generators(model.symbolic);
    const auto closure = expressivity::lie_closure(gens);
    json gj = json::array();
    for (const auto &g : gens) {
        gj.push_back(g.letters());
    }

    Csv csv("seed,mean_loss,variance,variance_std_error,bound");
    json per_run = json::array();
    for (int r = 0; r < cfg.runs; ++r) {
        const uint64_t seed = cfg.seed + r;
        sim::Rng rng(seed);
        const auto target = sim::sample_haar_state(model.symbolic.num_wires, rng);
        auto rep = expressivity::variance_probe(model.symbolic, target, p["samples"], rng);
        rep.seed = seed;
        csv.row(seed, rep.mean_loss, rep.variance, rep.variance_std_error,
                rep.bound ? *rep.bound : std::nan(""));
        per_run.push_back(expressivity::to_json(rep));
        diag << "expressivity seed " << seed << ": variance " << rep.variance << "\n";
    }
    out.write("results.csv", csv.str());
    RunOutcome o;
    o.results = {{"generators", gj}, {"dim", closure.dim}, {"is_full", closure.is_full}, {"runs", per_run}};
    o.summary = "expressivity: " + std::to_string(gens.size()) + " generators, Lie algebra dim " +
                std::to_string(closure.dim) + (closure.is_full ? " (full)" : "");
    return o;
}

}  // namespace

Stats summarize(const std::vector<double> &v) {
    Stats s;
    if (v.empty()) {
        return s;
    }
    s.mean = std::accumulate(v.begin(), v.end(), 0.0) / v.size();
    if (v.size() > 1) {
        double ss = 0.0;
        for (double x : v) {
            ss += (x - s.mean) * (x - s.mean);
        }
        s.std = std::sqrt(ss / (v.size() - 1));
    }
    return s;
}

RunOutcome run_experiment(const ExperimentConfig &cfg, std::ostream &diag) {
    Output out(cfg.out);
    RunOutcome o;
    switch (cfg.kind) {
        case ExperimentKind::gate_learn:
            o = gate_learn(cfg, out, diag);
            break;
        case ExperimentKind::noise_sweep:
            o = noise_sweep(cfg, out, diag);
            break;
        case ExperimentKind::depolarizing_sweep:
            o = depolarizing_sweep(cfg, out, diag);
            break;
        case ExperimentKind::qfi:
            o = qfi(cfg, out, diag);
            break;
        case ExperimentKind::teleport:
            o = teleport(cfg, out, diag);
            break;
        case ExperimentKind::kernel_svm:
            o = kernel_svm(cfg, out, diag);
            break;
        case ExperimentKind::hea:
            o = hea_search(cfg, out, diag);
            break;
        case ExperimentKind::expressivity:
            o = expressivity_probe(cfg, out, diag);
            break;
    }
    o.results["kind"] = to_string(cfg.kind);
    out.write("results.json", o.results.dump(2) + "\n");
    auto files = out.files();
    files.push_back("manifest.json");
    const json manifest = {{"config", to_json(cfg)}, {"files", files}, {"summary", o.summary}};
    out.write("manifest.json", manifest.dump(2) + "\n");
    o.files = out.files();
    return o;
}

}  // namespace mbqml::cli
