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


#include "gatedisc/harness.hpp"

#include "gtest/gtest.h"

#include "test_util.test.h"

using namespace gatedisc;
using namespace gatedisc::testing;

namespace {

ExperimentPlan small_plan() {
    ExperimentPlan plan;
    plan.base.shots = 256;
    plan.base.rounds = 4;
    plan.base.seed = 99;
    plan.base.noise = {0.004, 0.02, 0.03};
    return plan;
}

}  // namespace

TEST(harness, parse_gate) {
    EXPECT_TRUE(is_identity_up_to_phase(parse_gate("id")));
    EXPECT_TRUE(is_identity_up_to_phase(parse_gate(" I ")));
    EXPECT_LT((parse_gate("r(2*pi/3)").matrix() - phase_r()).cwiseAbs().maxCoeff(), 1e-15);
    EXPECT_LT((parse_gate("r(2.0943951023931953)").matrix() - phase_r()).cwiseAbs().maxCoeff(), 1e-15);
    EXPECT_LT((parse_gate("z").matrix() - phase_gate(M_PI)).cwiseAbs().maxCoeff(), 1e-15);
    EXPECT_NEAR(std::abs(parse_gate("h")(1, 1) + 1 / std::sqrt(2.0)), 0, 1e-15);
    EXPECT_NEAR(std::abs(parse_gate("x")(0, 1)), 1, 1e-15);
    EXPECT_LT((parse_gate("u3(0.3, 1.1, -0.4)").matrix() - u3_matrix(0.3, 1.1, -0.4)).cwiseAbs().maxCoeff(),
              1e-15);
    EXPECT_EQ(error_of([] { parse_gate("foo"); }), ErrorCode::UnsupportedGate);
    EXPECT_EQ(error_of([] { parse_gate("r(1,2)"); }), ErrorCode::UnsupportedGate);
    EXPECT_EQ(error_of([] { parse_gate("r(2*)"); }), ErrorCode::SyntaxError);
}

TEST(harness, scheme_names) {
    EXPECT_EQ(parse_scheme("Parallel"), SchemeKind::Parallel);
    EXPECT_EQ(scheme_name(SchemeKind::Sequential), "sequential");
    EXPECT_EQ(error_of([] { parse_scheme("serial"); }), ErrorCode::InvalidArgument);
}

TEST(harness, config_validation) {
    ExperimentConfig c;
    EXPECT_FALSE(error_of([&] { c.validate(); }).has_value());
    c.shots = 0;
    EXPECT_EQ(error_of([&] { c.validate(); }), ErrorCode::InvalidArgument);
    c = {};
    c.qubit_map = {0, 0};
    EXPECT_EQ(error_of([&] { c.validate(); }), ErrorCode::MapOutOfRange);
    c = {};
    c.qubit_map = {0, 5};
    EXPECT_EQ(error_of([&] { c.validate(); }), ErrorCode::MapOutOfRange);
    c = {};
    c.gate_v = "cz";
    EXPECT_EQ(error_of([&] { c.validate(); }), ErrorCode::UnsupportedGate);
    c = {};
    c.noise.readout_eps = 2;
    EXPECT_EQ(error_of([&] { c.validate(); }), ErrorCode::InvalidArgument);
}

TEST(harness, widen_and_project) {
    ShotCounts logical;
    logical.total = 3;
    logical.counts = {{"01", 2}, {"10", 1}};
    const std::vector<int> map = {3, 1};
    const ShotCounts wide = widen_counts(logical, 5, map);
    EXPECT_EQ(wide.get("01000"), 2);
    EXPECT_EQ(wide.get("00010"), 1);
    const ShotCounts back = project_counts(wide, map);
    EXPECT_EQ(back.counts, logical.counts);
}

TEST(harness, projection_ignores_unused_bits) {
    ShotCounts device;
    device.total = 10;
    device.counts = {{"01000", 3}, {"10100", 2}, {"00011", 4}, {"11111", 1}};
    const std::vector<int> map = {0, 1};
    const int base = count_successes(project_counts(device, map), OutcomeRule::parity(), Guess::FirstGate);
    ShotCounts scrambled;
    scrambled.total = 10;
    for (const auto &[bits, n] : device.counts) {
        std::string b = bits;
        std::reverse(b.begin() + 2, b.end());
        b[2] = b[2] == '0' ? '1' : '0';
        scrambled.counts[b] += n;
    }
    EXPECT_EQ(count_successes(project_counts(scrambled, map), OutcomeRule::parity(), Guess::FirstGate), base);
    EXPECT_EQ(base, 5);
}

TEST(harness, coin_is_fair) {
    int first = 0;
    const int n = 10000;
    for (int r = 0; r < n; ++r) {
        first += draw_truth(round_seed(2018, r)) == Guess::FirstGate ? 1 : 0;
    }
    EXPECT_NEAR(first, n / 2.0, 3 * std::sqrt(n * 0.25));
}

TEST(harness, aggregate_rates) {
    const std::vector<double> one = {0.9};
    const BoxStats s = aggregate_rates(one);
    EXPECT_EQ(s.min, 0.9);
    EXPECT_EQ(s.q25, 0.9);
    EXPECT_EQ(s.median, 0.9);
    EXPECT_EQ(s.max, 0.9);
    EXPECT_EQ(s.mean, 0.9);
    EXPECT_EQ(s.stddev, 0);

    const std::vector<double> four = {0.4, 0.1, 0.3, 0.2};
    const BoxStats f = aggregate_rates(four);
    EXPECT_DOUBLE_EQ(f.median, 0.25);
    EXPECT_EQ(f.q25, 0.2);
    EXPECT_EQ(f.q75, 0.4);
    EXPECT_DOUBLE_EQ(f.stddev, std::sqrt(0.0125));

    const std::vector<double> ten = {0.8583, 0.9863, 0.90, 0.93, 0.88, 0.95, 0.97, 0.91, 0.87, 0.96};
    const BoxStats t = aggregate_rates(ten);
    EXPECT_EQ(t.min, 0.8583);
    EXPECT_EQ(t.max, 0.9863);
    EXPECT_LE(t.min, t.q25);
    EXPECT_LE(t.q25, t.median);
    EXPECT_LE(t.median, t.q75);
    EXPECT_LE(t.q75, t.max);

    EXPECT_EQ(error_of([] { aggregate_rates({}); }), ErrorCode::EmptyInput);
}

TEST(harness, noiseless_round_is_perfect) {
    ExperimentConfig c;
    for (SchemeKind kind : {SchemeKind::Parallel, SchemeKind::Sequential}) {
        c.scheme = kind;
        for (int r = 0; r < 6; ++r) {
            const RoundResult result = run_round(c, round_seed(c.seed, r));
            EXPECT_EQ(result.success_count, c.shots);
            EXPECT_EQ(result.success_rate, 1.0);
            EXPECT_EQ(result.counts.total, c.shots);
            EXPECT_EQ(result.counts.counts.begin()->first.size(), 5u);
        }
    }
}

TEST(harness, mapped_round_reports_device_bits) {
    ExperimentConfig c;
    c.qubit_map = {4, 2};
    const CompiledScheme s = build_scheme(c);
    const RoundResult r = run_round(c, s, Guess::FirstGate, 17);
    for (const auto &[bits, n] : r.counts.counts) {
        EXPECT_EQ(bits[0], '0');
        EXPECT_EQ(bits[1], '0');
        EXPECT_EQ(bits[3], '0');
        EXPECT_NE(bits[4], bits[2]);  // odd parity on the mapped pair
    }
    c.qubit_map = {4};
    EXPECT_EQ(error_of([&] { run_round(c, s, Guess::FirstGate, 17); }), ErrorCode::MapOutOfRange);
}

TEST(harness, experiment_is_deterministic) {
    const ExperimentPlan plan = small_plan();
    const std::string a = report_to_kv(run_experiment(plan)).to_string();
    const std::string b = report_to_kv(run_experiment(plan)).to_string();
    EXPECT_EQ(a, b);
    ExperimentPlan other = plan;
    other.base.seed = 100;
    EXPECT_NE(a, report_to_kv(run_experiment(other)).to_string());
}

TEST(harness, truth_sequence_independent_of_noise) {
    ExperimentPlan a = small_plan();
    ExperimentPlan b = small_plan();
    b.base.noise = {};
    const ExperimentReport ra = run_experiment(a);
    const ExperimentReport rb = run_experiment(b);
    for (size_t s = 0; s < ra.schemes.size(); ++s) {
        for (size_t r = 0; r < ra.schemes[s].rounds.size(); ++r) {
            EXPECT_EQ(ra.schemes[s].rounds[r].truth, rb.schemes[s].rounds[r].truth);
        }
    }
}

TEST(harness, report_round_trip) {
    const ExperimentReport report = run_experiment(small_plan());
    const KeyValueFile kv = report_to_kv(report);
    const KeyValueFile reparsed = KeyValueFile::parse(kv.to_string());
    const ExperimentReport back = report_from_kv(reparsed);
    EXPECT_EQ(report_to_kv(back).to_string(), kv.to_string());
    ASSERT_EQ(back.schemes.size(), 2u);
    EXPECT_EQ(back.schemes[1].stats.mean, report.schemes[1].stats.mean);

    KeyValueFile bad = KeyValueFile::parse("gate_u = id\n");
    EXPECT_EQ(error_of([&] { report_from_kv(bad); }), ErrorCode::InvalidArgument);
}

TEST(harness, plan_from_kv) {
    const ExperimentPlan plan = plan_from_kv(KeyValueFile::parse(
        "gate_u = z\nschemes = sequential\nshots = 100\nrounds = 3\nseed = 5\n"
        "noise.p1 = 0.01\ndevice_qubits = 3\nqubit_map = 2, 0\n"));
    EXPECT_EQ(plan.schemes, (std::vector<SchemeKind>{SchemeKind::Sequential}));
    EXPECT_EQ(plan.base.gate_u, "z");
    EXPECT_EQ(plan.base.gate_v, "id");
    EXPECT_EQ(plan.base.qubit_map, (std::vector<int>{2, 0}));
    EXPECT_EQ(plan.base.noise.p1, 0.01);
    EXPECT_EQ(plan.base.device_qubits, 3);
    EXPECT_EQ(error_of([] { plan_from_kv(KeyValueFile::parse("schemes = diagonal\n")); }),
              ErrorCode::InvalidArgument);
    EXPECT_EQ(error_of([] { plan_from_kv(KeyValueFile::parse("qubit_map = 0,9\n")); }), ErrorCode::MapOutOfRange);
}

TEST(harness, fit_perfect_targets_gives_zero_noise) {
    FitTargets t;
    t.rates = {1, 1, 1, 1};
    const FitResult fit = fit_noise(t, {2000, 3});
    EXPECT_TRUE(fit.model.noiseless());
    EXPECT_EQ(fit.rms, 0);
}

TEST(harness, fit_half_targets_takes_noisiest_model) {
    FitTargets t;
    t.rates = {0.5, 0.5, 0.5, 0.5};
    const FitResult fit = fit_noise(t, {2000, 3});
    EXPECT_EQ(fit.model, (NoiseModel{0.01, 0.05, 0.08}));
    EXPECT_GT(fit.rms, 0.1);
}

TEST(harness, fit_rejects_bad_targets) {
    FitTargets t;
    t.rates = {1, 0, 1, 1};
    EXPECT_EQ(error_of([&] { fit_noise(t); }), ErrorCode::InvalidArgument);
}

TEST(harness, targets_from_kv) {
    const FitTargets t = targets_from_kv(KeyValueFile::parse(
        "parallel.first = 0.8\nparallel.second = 0.85\nsequential.first = 0.83\nsequential.second = 0.98\n"));
    EXPECT_EQ(t.rates, (std::array<double, 4>{0.8, 0.85, 0.83, 0.98}));
    EXPECT_EQ(t.gate_u, "r(2*pi/3)");
}

TEST(harness, histogram) {
    const std::vector<double> rates = {0.80, 0.82, 0.90, 0.90};
    const std::string h = rate_histogram(rates, 2);
    EXPECT_EQ(h, "  [0.8000, 0.8500)   2 ##\n  [0.8500, 0.9000]   2 ##\n");
    const std::vector<double> flat = {0.5, 0.5};
    EXPECT_EQ(rate_histogram(flat), "  [0.5000, 0.5000]   2 ##\n");
}
