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


// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "gatedisc/harness.hpp"
#include "gatedisc/qasm.hpp"
#include "test_util.test.h"

using namespace gatedisc;
using namespace gatedisc::testing;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char *format, double a = 0, double b = 0, double c = 0, double d = 0) {
    char buf[256];
    std::snprintf(buf, sizeof(buf), format, a, b, c, d);
    return buf;
}

const Unitary2 kId = Unitary2::identity();

NoiseModel g_fitted;
bool g_have_fit = false;

Outcome scheme_correctness() {
    const auto t0 = Clock::now();
    const Unitary2 r(phase_r());
    const CompiledScheme par = build_scheme(SchemeKind::Parallel, r, kId);
    const CompiledScheme seq = build_scheme(SchemeKind::Sequential, r, kId);
    const auto rates = scenario_rates(par, seq, {}, 10000, 1);
    const double elapsed = seconds_since(t0);
    bool ok = elapsed < 5;
    for (double x : rates) {
        ok = ok && x == 1.0;
    }
    return {ok, fmt("rates %.4f %.4f %.4f %.4f", rates[0], rates[1], rates[2], rates[3]) + fmt(", %.2fs", elapsed)};
}

Outcome reference_states() {
    const Eigen::VectorXcd psi = reference_psi().amplitudes();
    const double orth = std::abs(psi.dot(tensor_power(Unitary2(phase_r()), 2) * psi));
    const SequentialScheme s = synthesize_sequential(kId, Unitary2(phase_r()));
    const double x_err = (s.rotation.matrix() - reference_x()).cwiseAbs().maxCoeff();
    const Eigen::Matrix2cd w = s.rotation.matrix().adjoint() * phase_r() * s.rotation.matrix() * phase_r();
    const double w_err = (w - reference_w()).cwiseAbs().maxCoeff();
    const double trace = std::abs(w.trace());
    const bool ok = orth <= 1e-12 && x_err <= 1e-10 && w_err <= 1e-10 && trace <= 1e-12;
    return {ok, fmt("|<psi|R(x)R|psi>| %.1e, X err %.1e, W err %.1e, |Tr W| %.1e", orth, x_err, w_err, trace)};
}

Outcome minimal_copies() {
    const auto t0 = Clock::now();
    const auto report = analyze(kId, Unitary2(phase_r()));
    // Brute force over 100 x 100 Bloch-sphere points for a one-copy input.
    double best = 1;
    const Eigen::Matrix2cd r = phase_r();
    for (int i = 0; i < 100; ++i) {
        const double theta = M_PI * i / 99;
        for (int j = 0; j < 100; ++j) {
            const Eigen::Vector2cd v(std::cos(theta / 2), std::polar(std::sin(theta / 2), 2 * M_PI * j / 100));
            best = std::min(best, std::abs(v.dot(r * v)));
        }
    }
    const double elapsed = seconds_since(t0);
    const bool ok = report.min_parallel_copies == 2 && best > 0.49 && elapsed < 10;
    return {ok, fmt("N = %.0f, one-copy grid min |overlap| %.4f, %.2fs", report.min_parallel_copies, best, elapsed)};
}

Outcome fitted_statistics() {
    const auto t0 = Clock::now();
    FitTargets targets;
    targets.rates = {834 / 1024.0, 875 / 1024.0, 857 / 1024.0, 1007 / 1024.0};
    const FitResult fit = fit_noise(targets);
    const double elapsed = seconds_since(t0);
    g_fitted = fit.model;
    g_have_fit = true;
    const double seq_i = fit.rates[size_t(Scenario::SequentialSecond)];
    bool highest = true;
    for (double x : fit.rates) {
        highest = highest && x <= seq_i;
    }
    const bool ok = fit.rms <= 0.05 && highest && elapsed < 600;
    return {ok, fmt("p1 %.3f p2 %.3f eps %.2f, rms %.4f", fit.model.p1, fit.model.p2, fit.model.readout_eps, fit.rms) +
                    fmt(", rates %.4f %.4f %.4f %.4f", fit.rates[0], fit.rates[1], fit.rates[2], fit.rates[3]) +
                    (highest ? ", sequential-second highest" : ", sequential-second NOT highest") +
                    fmt(", %.1fs", elapsed)};
}

Outcome variability() {
    if (!g_have_fit) {
        return {false, "no fitted model"};
    }
    ExperimentPlan plan;
    plan.base.noise = g_fitted;
    plan.base.rounds = 10;
    plan.base.shots = 1024;
    double par = 0, seq = 0;
    const int repeats = 20;
    for (int k = 0; k < repeats; ++k) {
        plan.base.seed = 1000 + std::uint64_t(k);
        const ExperimentReport report = run_experiment(plan);
        par += report.schemes[0].stats.stddev / repeats;
        seq += report.schemes[1].stats.stddev / repeats;
    }
    return {seq > par, fmt("mean stddev parallel %.4f, sequential %.4f", par, seq)};
}

Outcome walgate() {
    const auto t0 = Clock::now();
    auto &rng = shared_rng();
    const OutcomeRule rule = OutcomeRule::parity();
    double worst = 0;
    for (int k = 0; k < 100; ++k) {
        const Eigen::MatrixXcd q = random_unitary(rng, 4);
        const PureState a(Eigen::VectorXcd(q.col(0)));
        const PureState b(Eigen::VectorXcd(q.col(1)));
        const Circuit c = walgate_measurement_circuit(a, b, rule);
        const Circuit body = c.unitary_part();
        for (const auto &[state, accept] : {std::pair{a, rule.accept_u}, std::pair{b, rule.accept_v}}) {
            const PureState out = apply_circuit(state, body);
            double wrong = 0;
            for (int i = 0; i < 4; ++i) {
                const std::string bits = {char('0' + (i >> 1)), char('0' + (i & 1))};
                if (!accept.contains(bits)) {
                    wrong += std::norm(out[i]);
                }
            }
            worst = std::max(worst, wrong);
        }
    }
    const double elapsed = seconds_since(t0);
    return {worst <= 1e-9 && elapsed < 5, fmt("worst misclassification %.1e, %.2fs", worst, elapsed)};
}

Outcome qasm_round_trip() {
    auto &rng = shared_rng();
    std::uniform_int_distribution<int> width(1, 3);
    std::uniform_int_distribution<int> length(0, 16);
    int failures = 0;
    int nondeterministic = 0;
    for (int k = 0; k < 1000; ++k) {
        const int n = width(rng);
        const Circuit c = random_circuit(rng, n, length(rng), true);
        std::vector<int> map(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) {
            map[size_t(i)] = 2 * i;
        }
        const std::string text = qasm::emit(c, 5, map);
        nondeterministic += text == qasm::emit(c, 5, map) ? 0 : 1;
        const qasm::Program p = qasm::parse(text);
        failures += same_gates(c, p.circuit, 1e-12) && p.qubit_map == map ? 0 : 1;
    }
    return {failures == 0 && nondeterministic == 0,
            fmt("%.0f of 1000 mismatched, %.0f nondeterministic", failures, nondeterministic)};
}

Outcome numerics() {
    const auto t0 = Clock::now();
    auto &rng = shared_rng();
    double unitarity = 0, norm = 0, schmidt = 0, u3 = 0;
    for (int k = 0; k < 1000; ++k) {
        const Unitary2 u = random_unitary(rng);
        const U3Params p = u3_params(u);
        unitarity = std::max(unitarity, unitarity_defect(p.unitary()));
        u3 = std::max(u3, (std::polar(1.0, p.global_phase) * p.matrix() - u.matrix()).cwiseAbs().maxCoeff());

        const PureState s = random_state(rng, 2);
        schmidt = std::max(schmidt, phase_aligned_distance(s.amplitudes(), schmidt_decompose(s).reassemble().amplitudes()));

        const int n = 1 + k % 3;
        const PureState out = apply_circuit(random_state(rng, n), random_circuit(rng, n, 100, false));
        norm = std::max(norm, std::abs(out.amplitudes().norm() - 1));
    }
    const double elapsed = seconds_since(t0);
    const bool ok = unitarity <= 1e-10 && u3 <= 1e-10 && schmidt <= 1e-10 && norm <= 1e-12 && elapsed < 10;
    return {ok, fmt("unitarity %.1e, u3 %.1e, schmidt %.1e, norm %.1e", unitarity, u3, schmidt, norm) +
                    fmt(", %.2fs", elapsed)};
}

}  // namespace

int main() {
    const std::vector<std::pair<const char *, std::function<Outcome()>>> criteria = {
        {"1 scheme correctness", scheme_correctness},
        {"2 reference-state validation", reference_states},
        {"3 minimal copies", minimal_copies},
        {"4 noise-model fit", fitted_statistics},
        {"5 variability ordering", variability},
        {"6 walgate synthesis", walgate},
        {"7 qasm round-trip", qasm_round_trip},
        {"8 numerics suite", numerics},
    };
    int failed = 0;
    for (const auto &[name, check] : criteria) {
        Outcome o;
        try {
            o = check();
        } catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += o.pass ? 0 : 1;
        std::printf("%s  %-28s %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", int(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
