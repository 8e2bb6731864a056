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


// Experiment orchestration: random oracle choice, shot execution, outcome
// sorting, multi-round statistics and noise-model fitting.

#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gatedisc/kvfile.hpp"
#include "gatedisc/sim.hpp"
#include "gatedisc/synthesis.hpp"

namespace gatedisc {

enum class SchemeKind { Parallel, Sequential };

std::string_view scheme_name(SchemeKind kind);
SchemeKind parse_scheme(std::string_view name);

/// Gate grammar: id | h | x | z | r(angle) | u3(theta, phi, lam), where
/// r(a) = diag(1, e^{ia}) and angles accept expressions such as 2*pi/3.
/// Unknown names throw UnsupportedGate.
Unitary2 parse_gate(std::string_view spec);

struct ExperimentConfig {
    std::string gate_u = "r(2*pi/3)";
    std::string gate_v = "id";
    SchemeKind scheme = SchemeKind::Parallel;
    int shots = 1024;
    int rounds = 10;
    std::uint64_t seed = 2018;
    NoiseModel noise;
    int device_qubits = 5;
    /// Physical qubit per scheme qubit; only the first `width` entries are
    /// used by a scheme that needs `width` qubits.
    std::vector<int> qubit_map = {0, 1};

    void validate() const;
};

struct RoundResult {
    Guess truth = Guess::FirstGate;
    ShotCounts counts;  // device-width bitstrings
    int success_count = 0;
    double success_rate = 0;
};

struct BoxStats {
    double min = 0;
    double q25 = 0;
    double median = 0;
    double q75 = 0;
    double max = 0;
    double mean = 0;
    double stddev = 0;
};

CompiledScheme build_scheme(SchemeKind kind, const Unitary2 &u, const Unitary2 &v);
CompiledScheme build_scheme(const ExperimentConfig &config);

/// Places logical clbit i at device position qubit_map[i]; other positions
/// read 0.
ShotCounts widen_counts(const ShotCounts &logical, int device_qubits, std::span<const int> qubit_map);
/// Keeps only the positions listed in qubit_map, in that order.
ShotCounts project_counts(const ShotCounts &device, std::span<const int> qubit_map);

std::uint64_t round_seed(std::uint64_t seed, int round_index);
/// Fair coin on its own stream, independent of shot randomness.
Guess draw_truth(std::uint64_t round_seed);

RoundResult run_round(const ExperimentConfig &config, std::uint64_t round_seed);
/// One round with an explicit truth and shot seed, reusing compiled circuits.
RoundResult run_round(const ExperimentConfig &config, const CompiledScheme &scheme, Guess truth,
                      std::uint64_t shot_seed);

/// Nearest-rank quartiles (0-based index floor(p*n)), midpoint median for
/// even counts, population standard deviation.
BoxStats aggregate_rates(std::span<const double> rates);
BoxStats aggregate(std::span<const RoundResult> results);

enum class Scenario { ParallelFirst, ParallelSecond, SequentialFirst, SequentialSecond };
inline constexpr std::array<Scenario, 4> kScenarios = {Scenario::ParallelFirst, Scenario::ParallelSecond,
                                                       Scenario::SequentialFirst, Scenario::SequentialSecond};
std::string_view scenario_key(Scenario s);

struct FitTargets {
    std::array<double, 4> rates{};  // indexed like kScenarios
    std::string gate_u = "r(2*pi/3)";
    std::string gate_v = "id";
};

struct FitOptions {
    int shots = 10000;
    std::uint64_t seed = 7;
};

struct FitResult {
    NoiseModel model;
    double rms = 0;
    std::array<double, 4> rates{};
};

/// Success rates of the four scenarios under `noise`. Each scenario uses a
/// fixed shot seed derived from `seed`, so different noise models see the
/// same random numbers.
std::array<double, 4> scenario_rates(const CompiledScheme &parallel, const CompiledScheme &sequential,
                                     const NoiseModel &noise, int shots, std::uint64_t seed);

/// Exhaustive grid: p1 in {0, .001, ..., .01}, p2 in {0, .005, ..., .05},
/// readout_eps in {0, .01, ..., .08}. Returns the first candidate with the
/// smallest RMS error.
FitResult fit_noise(const FitTargets &targets, const FitOptions &options = {});

struct ExperimentPlan {
    ExperimentConfig base;
    std::vector<SchemeKind> schemes = {SchemeKind::Parallel, SchemeKind::Sequential};

    ExperimentConfig config_for(SchemeKind kind) const;
};

struct SchemeReport {
    SchemeKind scheme = SchemeKind::Parallel;
    std::vector<RoundResult> rounds;
    BoxStats stats;
};

struct ExperimentReport {
    ExperimentPlan plan;
    std::vector<SchemeReport> schemes;
};

ExperimentReport run_experiment(const ExperimentPlan &plan);

NoiseModel noise_from_kv(const KeyValueFile &kv, const std::string &prefix = "");
void noise_to_kv(KeyValueFile &kv, const NoiseModel &noise, const std::string &prefix = "");
ExperimentPlan plan_from_kv(const KeyValueFile &kv);
void plan_to_kv(KeyValueFile &kv, const ExperimentPlan &plan);
FitTargets targets_from_kv(const KeyValueFile &kv);
KeyValueFile report_to_kv(const ExperimentReport &report);
ExperimentReport report_from_kv(const KeyValueFile &kv);

/// Text histogram of success rates, one line per bin.
std::string rate_histogram(std::span<const double> rates, int bins = 10);

}  // namespace gatedisc
