// Copyright 2026 The gatedisc Authors
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


// Command-line front end. Exit codes: 0 success, 1 usage error,
// 2 synthesis or validation failure, 3 I/O failure.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gatedisc/harness.hpp"
#include "gatedisc/qasm.hpp"

using namespace gatedisc;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitFailure = 2;
constexpr int kExitIo = 3;

/// Raised for bad command-line values so they map to the usage exit code.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Unitary2 gate_arg(const std::string &spec) {
    try {
        return parse_gate(spec);
    } catch (const Error &e) {
        throw UsageError(e.what());
    }
}

std::vector<SchemeKind> schemes_arg(const std::string &name) {
    if (name == "both") {
        return {SchemeKind::Parallel, SchemeKind::Sequential};
    }
    try {
        return {parse_scheme(name)};
    } catch (const Error &e) {
        throw UsageError(e.what());
    }
}

std::vector<int> map_arg(const std::string &text) {
    std::vector<int> out;
    std::string cur;
    for (char c : text + ",") {
        if (c != ',') {
            cur += c;
            continue;
        }
        try {
            size_t used = 0;
            out.push_back(std::stoi(cur, &used));
            if (used != cur.size()) {
                throw std::invalid_argument(cur);
            }
        } catch (const std::exception &) {
            throw UsageError("qubit map must be a comma list of integers, got '" + text + "'");
        }
        cur.clear();
    }
    return out;
}

Guess truth_arg(const std::string &s) {
    if (s == "first" || s == "u") {
        return Guess::FirstGate;
    }
    if (s == "second" || s == "v") {
        return Guess::SecondGate;
    }
    throw UsageError("--truth must be first, second, u or v");
}

KeyValueFile load_kv(const std::string &path) {
    return KeyValueFile::load(path);
}

void print_stats(const std::string &name, const BoxStats &b) {
    std::printf("%s: min %.4f  q25 %.4f  median %.4f  q75 %.4f  max %.4f  mean %.4f  stddev %.4f\n", name.c_str(),
                b.min, b.q25, b.median, b.q75, b.max, b.mean, b.stddev);
}

void print_counts(const ShotCounts &counts) {
    for (const auto &[bits, n] : counts.counts) {
        std::printf("  %s %d\n", bits.c_str(), n);
    }
}

int cmd_analyze(const std::string &u_spec, const std::string &v_spec) {
    const Unitary2 u = gate_arg(u_spec);
    const Unitary2 v = gate_arg(v_spec);
    const DistinguishabilityReport r = analyze(u, v);
    std::printf("spread %.10f\n", r.spread);
    std::printf("perfectly_distinguishable %s\n", r.perfectly_distinguishable ? "yes" : "no");
    if (r.perfectly_distinguishable) {
        std::printf("min_parallel_copies %d\n", r.min_parallel_copies);
        std::printf("sequential_one_aux %s\n", r.spread >= std::acos(-1.0) / 2 - 1e-12 ? "yes" : "no");
    }
    return 0;
}

int cmd_synthesize(const std::string &scheme, const std::string &u_spec, const std::string &v_spec,
                   const std::string &dir, int device_qubits, const std::string &map_text) {
    const Unitary2 u = gate_arg(u_spec);
    const Unitary2 v = gate_arg(v_spec);
    const std::vector<int> map = map_arg(map_text);
    const auto kinds = schemes_arg(scheme);

    std::vector<std::pair<std::filesystem::path, std::string>> files;
    for (SchemeKind kind : kinds) {
        const CompiledScheme compiled = build_scheme(kind, u, v);
        const std::string name(scheme_name(kind));
        std::printf("%s: first %zu gates, second %zu gates, %d qubit(s)\n", name.c_str(),
                    compiled.first.gates().size(), compiled.second.gates().size(), compiled.first.num_qubits());
        if (!dir.empty()) {
            const size_t width = size_t(compiled.first.num_qubits());
            if (map.size() < width) {
                throw UsageError("--qubit-map needs " + std::to_string(width) + " entries for the " + name +
                                 " scheme");
            }
            const std::span<const int> used(map.data(), width);
            files.emplace_back(std::filesystem::path(dir) / (name + "_first.qasm"),
                               qasm::emit(compiled.first, device_qubits, used));
            files.emplace_back(std::filesystem::path(dir) / (name + "_second.qasm"),
                               qasm::emit(compiled.second, device_qubits, used));
        }
    }
    if (!dir.empty()) {
        std::error_code ec;
        std::filesystem::create_directories(dir, ec);
        for (const auto &[path, text] : files) {
            std::ofstream out(path);
            out << text;
            if (!out) {
                throw Error(ErrorCode::Io, "cannot write " + path.string());
            }
            std::printf("wrote %s\n", path.string().c_str());
        }
    }
    return 0;
}

int cmd_simulate(const ExperimentConfig &base, const std::optional<std::string> &truth_text,
                 const std::string &noise_path) {
    ExperimentConfig config = base;
    gate_arg(config.gate_u);
    gate_arg(config.gate_v);
    if (!noise_path.empty()) {
        config.noise = noise_from_kv(load_kv(noise_path));
    }
    config.validate();
    const CompiledScheme scheme = build_scheme(config);
    const std::uint64_t rs = round_seed(config.seed, 0);
    const Guess truth = truth_text ? truth_arg(*truth_text) : draw_truth(rs);
    const RoundResult r = run_round(config, scheme, truth, mix_seed(rs, 0x73686f7473ULL));
    std::printf("scheme %s\n", std::string(scheme_name(config.scheme)).c_str());
    std::printf("truth %s\n", std::string(guess_name(r.truth)).c_str());
    std::printf("shots %d\n", config.shots);
    std::printf("success_count %d\n", r.success_count);
    std::printf("success_rate %.4f\n", r.success_rate);
    std::printf("counts\n");
    print_counts(r.counts);
    return 0;
}

int cmd_experiment(const std::string &config_path, const std::string &out_path) {
    const ExperimentPlan plan = config_path.empty() ? ExperimentPlan{} : plan_from_kv(load_kv(config_path));
    const ExperimentReport report = run_experiment(plan);
    report_to_kv(report).save(out_path);
    for (const SchemeReport &sr : report.schemes) {
        print_stats(std::string(scheme_name(sr.scheme)), sr.stats);
    }
    std::printf("wrote %s\n", out_path.c_str());
    return 0;
}

int cmd_fit(const std::string &targets_path, const std::string &out_path, int shots, long long seed) {
    const FitTargets targets = targets_from_kv(load_kv(targets_path));
    FitOptions options;
    options.shots = shots;
    options.seed = std::uint64_t(seed);
    const FitResult fit = fit_noise(targets, options);

    KeyValueFile kv;
    kv.add_comment("fitted noise model");
    noise_to_kv(kv, fit.model);
    kv.set("rms", fit.rms);
    for (size_t i = 0; i < kScenarios.size(); ++i) {
        kv.set("rate." + std::string(scenario_key(kScenarios[i])), fit.rates[i]);
    }
    kv.save(out_path);
    std::printf("p1 %g\np2 %g\nreadout_eps %g\nrms %.5f\n", fit.model.p1, fit.model.p2, fit.model.readout_eps,
                fit.rms);
    for (size_t i = 0; i < kScenarios.size(); ++i) {
        std::printf("%s target %.4f fitted %.4f\n", std::string(scenario_key(kScenarios[i])).c_str(),
                    targets.rates[i], fit.rates[i]);
    }
    std::printf("wrote %s\n", out_path.c_str());
    return 0;
}

int cmd_report(const std::string &in_path, bool csv) {
    const ExperimentReport report = report_from_kv(load_kv(in_path));
    if (csv) {
        std::printf("scheme,round,truth,success_count,success_rate\n");
        for (const SchemeReport &sr : report.schemes) {
            for (size_t r = 0; r < sr.rounds.size(); ++r) {
                std::printf("%s,%zu,%s,%d,%.6f\n", std::string(scheme_name(sr.scheme)).c_str(), r,
                            std::string(guess_name(sr.rounds[r].truth)).c_str(), sr.rounds[r].success_count,
                            sr.rounds[r].success_rate);
            }
        }
        return 0;
    }
    for (const SchemeReport &sr : report.schemes) {
        print_stats(std::string(scheme_name(sr.scheme)), sr.stats);
        std::vector<double> rates;
        for (const RoundResult &r : sr.rounds) {
            rates.push_back(r.success_rate);
        }
        std::fputs(rate_histogram(rates).c_str(), stdout);
    }
    return 0;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"gatedisc: perfect discrimination of single-qubit gates"};
    app.require_subcommand(1);

    std::string u_spec = "r(2*pi/3)";
    std::string v_spec = "id";

    auto *analyze_cmd = app.add_subcommand("analyze", "phase spread and minimal copy count");
    analyze_cmd->add_option("--u", u_spec, "first gate");
    analyze_cmd->add_option("--v", v_spec, "second gate");

    std::string scheme = "parallel";
    std::string qasm_dir;
    int device_qubits = 5;
    std::string map_text = "0,1";
    auto *synth_cmd = app.add_subcommand("synthesize", "compile a scheme and optionally export QASM");
    synth_cmd->add_option("--scheme", scheme, "parallel, sequential or both");
    synth_cmd->add_option("--u", u_spec, "first gate");
    synth_cmd->add_option("--v", v_spec, "second gate");
    synth_cmd->add_option("--emit-qasm", qasm_dir, "directory for <scheme>_first.qasm and <scheme>_second.qasm");
    synth_cmd->add_option("--device-qubits", device_qubits, "register width of the exported programs");
    synth_cmd->add_option("--qubit-map", map_text, "physical qubit per logical qubit, e.g. 0,1");

    ExperimentConfig sim;
    std::string sim_scheme = "parallel";
    std::optional<std::string> truth_text;
    std::string noise_path;
    std::string sim_map = "0,1";
    long long sim_seed = 2018;
    auto *sim_cmd = app.add_subcommand("simulate", "run one round of shots");
    sim_cmd->add_option("--scheme", sim_scheme, "parallel or sequential");
    sim_cmd->add_option("--u", sim.gate_u, "first gate");
    sim_cmd->add_option("--v", sim.gate_v, "second gate");
    sim_cmd->add_option("--truth", truth_text, "first|second (or u|v); drawn at random when omitted");
    sim_cmd->add_option("--shots", sim.shots, "shots per round");
    sim_cmd->add_option("--noise", noise_path, "noise model file");
    sim_cmd->add_option("--seed", sim_seed, "random seed");
    sim_cmd->add_option("--device-qubits", sim.device_qubits, "width of reported bitstrings");
    sim_cmd->add_option("--qubit-map", sim_map, "physical qubit per logical qubit");

    std::string config_path;
    std::string out_path;
    auto *exp_cmd = app.add_subcommand("experiment", "run rounds for every scheme and write a report");
    exp_cmd->add_option("--config", config_path, "plan file (defaults used when omitted)");
    exp_cmd->add_option("--out", out_path, "report file")->required();

    std::string targets_path;
    std::string fit_out;
    int fit_shots = FitOptions{}.shots;
    long long fit_seed = (long long)FitOptions{}.seed;
    auto *fit_cmd = app.add_subcommand("fit-noise", "grid-search a noise model against target success rates");
    fit_cmd->add_option("--targets", targets_path, "targets file")->required();
    fit_cmd->add_option("--out", fit_out, "noise model file")->required();
    fit_cmd->add_option("--shots", fit_shots, "shots per scenario and candidate");
    fit_cmd->add_option("--seed", fit_seed, "random seed");

    std::string report_in;
    bool csv = false;
    auto *report_cmd = app.add_subcommand("report", "summarize a report file");
    report_cmd->add_option("--in", report_in, "report file")->required();
    report_cmd->add_flag("--csv", csv, "per-round CSV instead of statistics");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*analyze_cmd) {
            return cmd_analyze(u_spec, v_spec);
        }
        if (*synth_cmd) {
            return cmd_synthesize(scheme, u_spec, v_spec, qasm_dir, device_qubits, map_text);
        }
        if (*sim_cmd) {
            sim.scheme = schemes_arg(sim_scheme).front();
            if (sim_scheme == "both") {
                throw UsageError("simulate takes a single scheme");
            }
            sim.qubit_map = map_arg(sim_map);
            sim.seed = std::uint64_t(sim_seed);
            return cmd_simulate(sim, truth_text, noise_path);
        }
        if (*exp_cmd) {
            return cmd_experiment(config_path, out_path);
        }
        if (*fit_cmd) {
            return cmd_fit(targets_path, fit_out, fit_shots, fit_seed);
        }
        if (*report_cmd) {
            return cmd_report(report_in, csv);
        }
    } catch (const UsageError &e) {
        std::cerr << "usage error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == ErrorCode::Io ? kExitIo : kExitFailure;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitUsage;
}
