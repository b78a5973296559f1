// Copyright 2026 The bosonval Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// bosonval command-line driver.

#include <fmt/chrono.h>
#include <fmt/format.h>

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "bosonval/circuit.h"
#include "bosonval/errors.h"
#include "bosonval/experiment.h"
#include "bosonval/io.h"
#include "bosonval/parallel.h"
#include "bosonval/validators.h"

#ifndef BOSONVAL_VERSION
#define BOSONVAL_VERSION "0.0.0"
#endif

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace bosonval;

namespace {

enum ExitCode : int {
    kFirstHypothesis = 0,
    kUsageError = 1,
    kDataError = 2,
    kAlternative = 3,
    kInconclusive = 4,
};

// Raised for bad flags or configuration; everything else that escapes a
// command is a data error.
struct UsageFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

template <typename Fn>
auto as_usage(Fn &&fn) -> decltype(fn()) {
    try {
        return fn();
    } catch (const UsageFailure &) {
        throw;
    } catch (const std::exception &e) {
        throw UsageFailure(e.what());
    }
}

std::string utc_now() {
    return fmt::format("{:%Y-%m-%dT%H:%M:%SZ}",
                       std::chrono::floor<std::chrono::seconds>(std::chrono::system_clock::now()));
}

std::vector<std::size_t> parse_size_list(const std::string &text, const char *flag) {
    std::vector<std::size_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            const long long v = std::stoll(item, &used);
            if (used != item.size() || v < 0) {
                throw std::invalid_argument(item);
            }
            out.push_back(static_cast<std::size_t>(v));
        } catch (const std::logic_error &) {
            throw UsageFailure(fmt::format("{}: expected a comma-separated list of integers, got '{}'", flag, text));
        }
    }
    if (out.empty()) {
        throw UsageFailure(fmt::format("{}: empty list", flag));
    }
    return out;
}

class Manifest {
   public:
    Manifest(std::string command, const std::vector<std::string> &argv) : started_(utc_now()) {
        doc_["command"] = std::move(command);
        doc_["argv"] = argv;
        doc_["version"] = BOSONVAL_VERSION;
        doc_["parameters"] = json::object();
    }

    template <typename T>
    void param(const std::string &key, const T &value) {
        doc_["parameters"][key] = value;
    }
    void seed(std::uint64_t s) { doc_["seed"] = s; }
    void result(const std::string &key, const json &value) { doc_["results"][key] = value; }

    void write(const fs::path &path, std::string_view contents) {
        io::write_file(path, contents);
        files_.push_back(path.string());
    }

    void finish(const fs::path &manifest_path) {
        doc_["files"] = files_;
        doc_["started"] = started_;
        doc_["finished"] = utc_now();
        io::write_file(manifest_path, doc_.dump(2) + "\n");
        fmt::print("manifest: {}\n", manifest_path.string());
    }

   private:
    json doc_;
    std::string started_;
    std::vector<std::string> files_;
};

fs::path sibling(const fs::path &out, const std::string &suffix) {
    fs::path p = out;
    p.replace_extension();
    return fs::path(p.string() + suffix);
}

fs::path manifest_for(const fs::path &out) { return fs::path(out.string() + ".manifest.json"); }

Interferometer load_unitary(const std::string &path) {
    return io::unitary_from_json(io::read_file(path), path);
}

struct Options {
    std::string config;
    std::optional<std::size_t> modes;
    std::optional<std::size_t> photons;
    std::string input;
    std::string kind = "haar";
    std::optional<std::size_t> layers;
    std::string source = "indistinguishable";
    std::size_t events = 0;
    std::optional<std::uint64_t> seed;
    std::optional<double> k1;
    std::optional<double> k2;
    std::optional<std::size_t> trials;
    std::string set_sizes;
    std::optional<std::size_t> unitaries;
    std::optional<std::size_t> exclusion_cap;
    std::optional<double> success_threshold;
    std::string sweep_modes;
    std::string out;
    std::string circuit_out;
    std::string distribution_out;
    std::string from;
    std::string unitary;
    std::string log;
    std::string test = "aa";
    std::string manifest;
};

// ---------------------------------------------------------------------------

int cmd_gen_unitary(const Options &o, const std::vector<std::string> &argv) {
    const fs::path out = o.out;
    Manifest manifest("gen-unitary", argv);
    manifest.param("kind", o.kind);
    const std::uint64_t seed = o.seed.value_or(0);
    if (o.kind == "haar" || o.kind == "random-phases") {
        if (!o.modes || *o.modes == 0) {
            throw UsageFailure("--modes must be a positive integer for --kind " + o.kind);
        }
        manifest.param("modes", *o.modes);
        manifest.seed(seed);
    }
    if (o.kind == "haar") {
        const auto u = haar_unitary(*o.modes, seed);
        manifest.write(out, io::unitary_to_json(u));
        fmt::print("wrote {} ({} modes, {})\n", out.string(), u.modes(), u.provenance().to_string());
        fmt::print("unitarity residual: {:.3e}\n", unitarity_residual(u.matrix()));
    } else if (o.kind == "random-phases") {
        if (!o.layers || *o.layers == 0) {
            throw UsageFailure("--layers must be a positive integer for --kind random-phases");
        }
        manifest.param("layers", *o.layers);
        const auto circuit = random_phase_network(*o.modes, *o.layers, seed);
        const auto u = compose(circuit);
        const fs::path circuit_out = o.circuit_out.empty() ? sibling(out, ".circuit.json") : fs::path(o.circuit_out);
        manifest.write(circuit_out, io::circuit_to_json(circuit));
        manifest.write(out, io::unitary_to_json(u));
        fmt::print("wrote {} ({} couplers) and {}\n", circuit_out.string(), circuit.coupler_count(), out.string());
        fmt::print("unitarity residual: {:.3e}\n", unitarity_residual(u.matrix()));
    } else if (o.kind == "reck-of") {
        if (o.from.empty()) {
            throw UsageFailure("--from is required for --kind reck-of");
        }
        manifest.param("from", o.from);
        const auto source = load_unitary(o.from);
        const auto circuit = reck_decompose(source);
        const auto u = compose(circuit);
        const fs::path circuit_out = o.circuit_out.empty() ? sibling(out, ".circuit.json") : fs::path(o.circuit_out);
        manifest.write(circuit_out, io::circuit_to_json(circuit));
        manifest.write(out, io::unitary_to_json(u));
        fmt::print("wrote {} ({} couplers) and {}\n", circuit_out.string(), circuit.coupler_count(), out.string());
        fmt::print("unitarity residual: {:.3e}\n", unitarity_residual(u.matrix()));
        fmt::print("recomposition error: {:.3e}\n", max_abs_diff(u.matrix(), source.matrix()));
    } else {
        throw UsageFailure("--kind must be one of haar, random-phases, reck-of");
    }
    manifest.finish(manifest_for(out));
    return kFirstHypothesis;
}

int cmd_sample(const Options &o, const std::vector<std::string> &argv) {
    const auto source = as_usage([&] { return parse_source(o.source); });
    if (o.events == 0) {
        throw UsageFailure("--events must be a positive integer");
    }
    const auto u = load_unitary(o.unitary);
    const auto s = as_usage([&] { return io::parse_input(o.input, u.modes()); });
    const std::uint64_t seed = o.seed.value_or(0);

    Manifest manifest("sample", argv);
    manifest.param("unitary", o.unitary);
    manifest.param("input", s.to_string());
    manifest.param("source", to_string(source));
    manifest.param("events", o.events);
    manifest.seed(seed);

    const auto d = build_distribution(u, s, source);
    const auto log = sample_events(d, o.events, seed, u.provenance().to_string());
    std::ostringstream csv;
    io::write_event_log(csv, log);
    manifest.write(o.out, csv.str());
    if (!o.distribution_out.empty()) {
        std::ostringstream dist;
        io::write_distribution(dist, d);
        manifest.write(o.distribution_out, dist.str());
    }
    fmt::print("wrote {} events ({}, input {}) to {}\n", log.events.size(), to_string(source), s.to_string(), o.out);
    manifest.finish(manifest_for(o.out));
    return kFirstHypothesis;
}

int exit_code_for(Verdict v) {
    switch (v) {
        case Verdict::boson_sampler:
        case Verdict::indistinguishable:
            return kFirstHypothesis;
        case Verdict::uniform:
        case Verdict::distinguishable:
            return kAlternative;
        case Verdict::inconclusive:
            return kInconclusive;
    }
    return kDataError;
}

int cmd_validate(const Options &o, const std::vector<std::string> &argv) {
    if (o.test != "aa" && o.test != "lr") {
        throw UsageFailure("--test must be aa or lr");
    }
    LrThresholds thresholds;
    thresholds.k1 = o.k1.value_or(thresholds.k1);
    thresholds.k2 = o.k2.value_or(thresholds.k2);
    as_usage([&] { thresholds.validate(); });

    const auto u = load_unitary(o.unitary);
    const auto s = as_usage([&] { return io::parse_input(o.input, u.modes()); });
    std::ifstream in(o.log);
    if (!in) {
        throw FormatError("cannot open '" + o.log + "' for reading");
    }
    const auto log = io::read_event_log(in, s, o.log);

    Manifest manifest("validate", argv);
    manifest.param("test", o.test);
    manifest.param("unitary", o.unitary);
    manifest.param("input", s.to_string());
    manifest.param("events_file", o.log);
    if (o.test == "lr") {
        manifest.param("k1", thresholds.k1);
        manifest.param("k2", thresholds.k2);
    }

    const auto report = [&] {
        if (o.test == "aa") {
            return aa_report(u, s, log);
        }
        const auto p = build_distribution(u, s, Source::indistinguishable);
        const auto q = build_distribution(u, s, Source::distinguishable);
        return lr_verdict(u, s, log, p, q, thresholds);
    }();
    std::ostringstream csv;
    io::write_verdict_report(csv, report);
    manifest.write(o.out, csv.str());
    manifest.result("verdict", to_string(report.verdict));
    manifest.result("cumulative", report.final_cumulative);
    fmt::print("verdict: {} (cumulative {} over {} events)\n", to_string(report.verdict), report.final_cumulative,
               report.rows.size());
    manifest.finish(manifest_for(o.out));
    return exit_code_for(report.verdict);
}

ExperimentConfig resolve_config(const Options &o) {
    return as_usage([&] {
        ExperimentConfig cfg = o.config.empty() ? ExperimentConfig{} : io::config_from_json(io::read_file(o.config));
        if (o.modes) cfg.m = *o.modes;
        if (o.photons) cfg.n = *o.photons;
        if (!o.set_sizes.empty()) cfg.set_sizes = parse_size_list(o.set_sizes, "--set-sizes");
        if (o.trials) cfg.trials_per_point = *o.trials;
        if (o.unitaries) cfg.unitary_count = *o.unitaries;
        if (o.exclusion_cap) cfg.exclusion_cap = *o.exclusion_cap;
        if (o.success_threshold) cfg.success_threshold = *o.success_threshold;
        if (o.seed) cfg.master_seed = *o.seed;
        if (o.k1) cfg.lr.k1 = *o.k1;
        if (o.k2) cfg.lr.k2 = *o.k2;
        if (!o.input.empty()) {
            cfg.input = io::parse_input(o.input, cfg.m);
        } else if (cfg.input && cfg.input->ambient_modes() != cfg.m) {
            cfg.input.reset();
        }
        cfg.validate();
        return cfg;
    });
}

template <typename Writer>
std::string render(Writer &&w) {
    std::ostringstream out;
    w(out);
    return out.str();
}

int cmd_experiment(const std::string &sub, const Options &o, const std::vector<std::string> &argv) {
    const auto cfg = resolve_config(o);
    const fs::path dir = o.out;
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) {
        throw FormatError("cannot create output directory '" + dir.string() + "': " + ec.message());
    }
    Manifest manifest("experiment " + sub, argv);
    manifest.param("config", json::parse(io::config_to_json(cfg)));
    manifest.seed(cfg.master_seed);
    manifest.write(dir / "config.json", io::config_to_json(cfg));
    const auto m = cfg.m;
    const auto n = cfg.n;

    std::optional<Interferometer> fixed;
    if (!o.unitary.empty()) {
        if (sub != "success-curve" && sub != "lr-curve") {
            throw UsageFailure("--unitary applies only to success-curve and lr-curve");
        }
        fixed = load_unitary(o.unitary);
        if (fixed->modes() != m) {
            throw UsageFailure(fmt::format("--unitary has {} modes but the configuration has m = {}", fixed->modes(), m));
        }
        manifest.param("unitary", o.unitary);
    }
    const auto unitary = [&] { return fixed ? *fixed : haar_unitary(m, unitary_seed(cfg.master_seed, 0)); };

    if (sub == "success-curve") {
        const auto u = unitary();
        const auto s = cfg.input_modes();
        const std::vector<SuccessCurve> bs{success_curve(u, s, Source::indistinguishable, cfg)};
        const std::vector<SuccessCurve> un{success_curve(u, s, Source::uniform, cfg)};
        manifest.write(dir / "curves_bs.csv", render([&](auto &out) { io::write_curves(out, m, n, bs); }));
        manifest.write(dir / "curves_uniform.csv", render([&](auto &out) { io::write_curves(out, m, n, un); }));
        manifest.result("converging", *bs[0].converging);
        fmt::print("unitary {}: converging = {}\n", u.provenance().to_string(), *bs[0].converging ? "yes" : "no");
    } else if (sub == "haar-average") {
        const auto r = haar_ensemble_curve(cfg);
        manifest.write(dir / "curves_bs.csv", render([&](auto &out) { io::write_curves(out, m, n, r.bs_curves); }));
        manifest.write(dir / "curves_uniform.csv",
                       render([&](auto &out) { io::write_curves(out, m, n, r.uniform_curves); }));
        manifest.write(dir / "ensemble_bs.csv",
                       render([&](auto &out) { io::write_ensemble(out, m, n, r.bs_ensemble); }));
        manifest.write(dir / "ensemble_uniform.csv",
                       render([&](auto &out) { io::write_ensemble(out, m, n, r.uniform_ensemble); }));
        manifest.write(dir / "summary.csv",
                       fmt::format("m,n,unitaries,converging,converging_fraction\n{},{},{},{},{}\n", m, n,
                                   cfg.unitary_count, r.converging_count, io::format_real(r.converging_fraction())));
        manifest.result("converging", r.converging_count);
        manifest.result("converging_fraction", r.converging_fraction());
        fmt::print("converging unitaries: {} of {} ({:.3f})\n", r.converging_count, cfg.unitary_count,
                   r.converging_fraction());
    } else if (sub == "nmin") {
        std::vector<std::size_t> sweep{m};
        if (!o.sweep_modes.empty()) {
            sweep = as_usage([&] { return parse_size_list(o.sweep_modes, "--sweep-modes"); });
            if (cfg.input) {
                throw UsageFailure("--sweep-modes cannot be combined with an explicit input configuration");
            }
        }
        std::vector<NminResult> rows;
        std::string summary = "m,n,unitaries,converging,reached,mean_n_min\n";
        for (const auto mm : sweep) {
            ExperimentConfig point = cfg;
            point.m = mm;
            as_usage([&] { point.validate(); });
            const auto r = nmin_haar(point);
            rows.insert(rows.end(), r.per_unitary.begin(), r.per_unitary.end());
            summary += fmt::format("{},{},{},{},{},{}\n", mm, n, point.unitary_count, r.converging, r.reached,
                                   r.mean_n_min ? io::format_real(*r.mean_n_min) : "");
            fmt::print("m = {}: mean N_min = {} ({} of {} converging unitaries reached)\n", mm,
                       r.mean_n_min ? fmt::format("{:.1f}", *r.mean_n_min) : "n/a", r.reached, r.converging);
        }
        manifest.write(dir / "nmin.csv", render([&](auto &out) { io::write_nmin(out, rows); }));
        manifest.write(dir / "nmin_summary.csv", summary);
    } else if (sub == "lr-curve") {
        LrEnsembleResult r;
        if (fixed) {
            auto pair = lr_success_curve(*fixed, cfg.input_modes(), cfg);
            r.pooled_indistinguishable = pair.indistinguishable_data.points;
            r.pooled_distinguishable = pair.distinguishable_data.points;
            r.per_unitary.push_back(std::move(pair));
        } else {
            r = lr_haar_curve(cfg);
        }
        std::vector<SuccessCurve> ind, dis;
        for (const auto &p : r.per_unitary) {
            ind.push_back(p.indistinguishable_data);
            dis.push_back(p.distinguishable_data);
        }
        manifest.write(dir / "lr_indistinguishable.csv", render([&](auto &out) { io::write_curves(out, m, n, ind); }));
        manifest.write(dir / "lr_distinguishable.csv", render([&](auto &out) { io::write_curves(out, m, n, dis); }));
        manifest.write(dir / "lr_pooled_indistinguishable.csv",
                       render([&](auto &out) { io::write_pooled(out, m, n, r.pooled_indistinguishable); }));
        manifest.write(dir / "lr_pooled_distinguishable.csv",
                       render([&](auto &out) { io::write_pooled(out, m, n, r.pooled_distinguishable); }));
    } else {
        throw UsageFailure("unknown experiment '" + sub + "'");
    }
    manifest.finish(dir / "manifest.json");
    return kFirstHypothesis;
}

int run(const std::vector<std::string> &argv);

int cmd_rerun(const Options &o) {
    const auto doc = json::parse(io::read_file(o.manifest), nullptr, false);
    if (doc.is_discarded() || !doc.contains("argv") || !doc["argv"].is_array()) {
        throw FormatError(o.manifest + ": not a run manifest");
    }
    const auto argv = doc["argv"].get<std::vector<std::string>>();
    if (!argv.empty() && argv.front() == "rerun") {
        throw FormatError(o.manifest + ": refusing to rerun a rerun");
    }
    return run(argv);
}

int run(const std::vector<std::string> &argv) {
    CLI::App app{"bosonval: boson sampling simulation and validation"};
    app.set_version_flag("--version", BOSONVAL_VERSION);
    app.require_subcommand(1);
    Options o;

    auto add_out = [&](CLI::App *c, const char *what) { c->add_option("--out", o.out, what)->required(); };
    auto add_seed = [&](CLI::App *c) { c->add_option("--seed", o.seed, "Master seed (default 0)"); };

    auto *gen = app.add_subcommand("gen-unitary", "Generate an interferometer");
    gen->add_option("--modes", o.modes, "Number of modes m");
    gen->add_option("--kind", o.kind, "haar | random-phases | reck-of")
        ->check(CLI::IsMember({"haar", "random-phases", "reck-of"}));
    gen->add_option("--layers", o.layers, "Coupler layers for random-phases");
    gen->add_option("--from", o.from, "Unitary file to decompose (reck-of)");
    gen->add_option("--circuit-out", o.circuit_out, "Circuit file (default: <out stem>.circuit.json)");
    add_seed(gen);
    add_out(gen, "Unitary file to write");

    auto *sample = app.add_subcommand("sample", "Sample an event log");
    sample->add_option("--unitary", o.unitary, "Unitary file")->required();
    sample->add_option("--input", o.input, "Input modes: '0 1 2' or occupation '1,1,1,0,0'")->required();
    sample->add_option("--source", o.source, "indistinguishable | distinguishable | uniform");
    sample->add_option("--events", o.events, "Number of events")->required();
    sample->add_option("--distribution-out", o.distribution_out, "Also write the exact distribution");
    add_seed(sample);
    add_out(sample, "Event log CSV to write");

    auto *validate = app.add_subcommand("validate", "Run a validation test on an event log");
    validate->add_option("--test", o.test, "aa | lr")->check(CLI::IsMember({"aa", "lr"}));
    validate->add_option("--unitary", o.unitary, "Unitary file")->required();
    validate->add_option("--input", o.input, "Input modes")->required();
    validate->add_option("--log", o.log, "Event log CSV")->required();
    validate->add_option("--k1", o.k1, "Lower likelihood-ratio threshold (default 0.9)");
    validate->add_option("--k2", o.k2, "Upper likelihood-ratio threshold (default 1.5)");
    add_out(validate, "Verdict report CSV to write");

    auto *experiment = app.add_subcommand("experiment", "Run a Monte-Carlo experiment");
    experiment->require_subcommand(1);
    std::string experiment_name;
    for (const char *name : {"success-curve", "haar-average", "nmin", "lr-curve"}) {
        auto *c = experiment->add_subcommand(name);
        c->add_option("--config", o.config, "JSON configuration file");
        c->add_option("--modes", o.modes, "Number of modes m");
        c->add_option("--photons", o.photons, "Number of photons n");
        c->add_option("--input", o.input, "Input modes (default: centered block)");
        c->add_option("--trials", o.trials, "Trials per set size");
        c->add_option("--set-sizes", o.set_sizes, "Comma-separated set sizes");
        c->add_option("--unitaries", o.unitaries, "Number of Haar unitaries");
        c->add_option("--exclusion-cap", o.exclusion_cap, "Set size used for the convergence check");
        c->add_option("--success-threshold", o.success_threshold, "Success threshold (default 0.95)");
        c->add_option("--k1", o.k1, "Lower likelihood-ratio threshold");
        c->add_option("--k2", o.k2, "Upper likelihood-ratio threshold");
        if (std::string(name) == "success-curve" || std::string(name) == "lr-curve") {
            c->add_option("--unitary", o.unitary, "Use this unitary instead of a seeded Haar draw");
        }
        if (std::string(name) == "nmin") {
            c->add_option("--sweep-modes", o.sweep_modes, "Comma-separated list of m values");
        }
        add_seed(c);
        add_out(c, "Output directory");
        c->callback([&experiment_name, name] { experiment_name = name; });
    }

    auto *rerun = app.add_subcommand("rerun", "Repeat the run recorded in a manifest");
    rerun->add_option("manifest", o.manifest, "Manifest JSON")->required();

    try {
        std::vector<std::string> reversed(argv.rbegin(), argv.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kUsageError;
    }

    try {
        if (gen->parsed()) return cmd_gen_unitary(o, argv);
        if (sample->parsed()) return cmd_sample(o, argv);
        if (validate->parsed()) return cmd_validate(o, argv);
        if (experiment->parsed()) return cmd_experiment(experiment_name, o, argv);
        if (rerun->parsed()) return cmd_rerun(o);
    } catch (const UsageFailure &e) {
        fmt::print(stderr, "bosonval: error: {}\n", e.what());
        return kUsageError;
    } catch (const std::exception &e) {
        fmt::print(stderr, "bosonval: error: {}\n", e.what());
        return kDataError;
    }
    return kUsageError;
}

}  // namespace

int main(int argc, char **argv) { return run(std::vector<std::string>(argv + 1, argv + argc)); }
