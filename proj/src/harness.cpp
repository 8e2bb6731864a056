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

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <set>

#include "gatedisc/qasm.hpp"

namespace gatedisc {

namespace {

constexpr std::uint64_t kTruthStream = 0x7472757468ULL;
constexpr std::uint64_t kShotStream = 0x73686f7473ULL;

std::string lower(std::string_view s) {
    std::string out;
    for (char c : s) {
        if (!std::isspace(static_cast<unsigned char>(c))) {
            out += char(std::tolower(static_cast<unsigned char>(c)));
        }
    }
    return out;
}

/// Splits "a,b,c" into trimmed parts.
std::vector<std::string> split_list(std::string_view s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    if (!cur.empty() || !out.empty()) {
        out.push_back(cur);
    }
    return out;
}

/// Arguments of "name(a, b, c)"; top-level commas only.
std::vector<std::string> call_args(std::string_view body) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char c : body) {
        if (c == '(') {
            ++depth;
        } else if (c == ')') {
            --depth;
        }
        if (c == ',' && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::vector<int> scheme_map(const ExperimentConfig &config, int width) {
    if (int(config.qubit_map.size()) < width) {
        throw Error(ErrorCode::MapOutOfRange, "qubit_map lists " + std::to_string(config.qubit_map.size()) +
                                                  " qubits; the scheme needs " + std::to_string(width));
    }
    return {config.qubit_map.begin(), config.qubit_map.begin() + width};
}

const Circuit &circuit_for(const CompiledScheme &scheme, Guess truth) {
    return truth == Guess::FirstGate ? scheme.first : scheme.second;
}

Guess parse_truth(std::string_view s) {
    if (s == "first") {
        return Guess::FirstGate;
    }
    if (s == "second") {
        return Guess::SecondGate;
    }
    throw Error(ErrorCode::InvalidArgument, "truth must be 'first' or 'second', got '" + std::string(s) + "'");
}

std::string counts_to_string(const ShotCounts &counts) {
    std::string out;
    for (const auto &[bits, n] : counts.counts) {
        if (!out.empty()) {
            out += ' ';
        }
        out += bits + ":" + std::to_string(n);
    }
    return out;
}

ShotCounts counts_from_string(std::string_view s) {
    ShotCounts out;
    size_t pos = 0;
    while (pos < s.size()) {
        while (pos < s.size() && s[pos] == ' ') {
            ++pos;
        }
        if (pos >= s.size()) {
            break;
        }
        const size_t end = std::min(s.find(' ', pos), s.size());
        const std::string_view item = s.substr(pos, end - pos);
        const size_t colon = item.find(':');
        if (colon == std::string_view::npos) {
            throw Error(ErrorCode::SyntaxError, "malformed counts entry '" + std::string(item) + "'");
        }
        const int n = std::stoi(std::string(item.substr(colon + 1)));
        out.counts[std::string(item.substr(0, colon))] += n;
        out.total += n;
        pos = end;
    }
    return out;
}

}  // namespace

std::string_view scheme_name(SchemeKind kind) {
    return kind == SchemeKind::Parallel ? "parallel" : "sequential";
}

SchemeKind parse_scheme(std::string_view name) {
    const std::string n = lower(name);
    if (n == "parallel") {
        return SchemeKind::Parallel;
    }
    if (n == "sequential") {
        return SchemeKind::Sequential;
    }
    throw Error(ErrorCode::InvalidArgument, "unknown scheme '" + std::string(name) + "'");
}

Unitary2 parse_gate(std::string_view spec) {
    const std::string s = lower(spec);
    if (s == "id" || s == "i") {
        return Unitary2::identity();
    }
    const double r = 1 / std::sqrt(2.0);
    Eigen::Matrix2cd m;
    if (s == "h") {
        m << r, r, r, -r;
        return Unitary2(m);
    }
    if (s == "x") {
        m << 0, 1, 1, 0;
        return Unitary2(m);
    }
    if (s == "z") {
        m << 1, 0, 0, -1;
        return Unitary2(m);
    }
    const auto open = s.find('(');
    if (open != std::string::npos && s.back() == ')') {
        const std::string name = s.substr(0, open);
        const auto args = call_args(std::string_view(s).substr(open + 1, s.size() - open - 2));
        if (name == "r" && args.size() == 1) {
            m << 1, 0, 0, std::polar(1.0, qasm::parse_angle(args[0]));
            return Unitary2(m);
        }
        if (name == "u3" && args.size() == 3) {
            return Unitary2::from_u3(qasm::parse_angle(args[0]), qasm::parse_angle(args[1]),
                                     qasm::parse_angle(args[2]));
        }
    }
    throw Error(ErrorCode::UnsupportedGate,
                "unknown gate '" + std::string(spec) + "' (expected id, h, x, z, r(angle) or u3(theta,phi,lam))");
}

void ExperimentConfig::validate() const {
    if (shots < 1 || rounds < 1) {
        throw Error(ErrorCode::InvalidArgument, "shots and rounds must be positive");
    }
    if (device_qubits < 1) {
        throw Error(ErrorCode::InvalidArgument, "device_qubits must be positive");
    }
    std::set<int> seen;
    for (int q : qubit_map) {
        if (q < 0 || q >= device_qubits || !seen.insert(q).second) {
            throw Error(ErrorCode::MapOutOfRange, "qubit_map entry " + std::to_string(q) + " is out of range or repeated");
        }
    }
    noise.validate();
    parse_gate(gate_u);
    parse_gate(gate_v);
}

CompiledScheme build_scheme(SchemeKind kind, const Unitary2 &u, const Unitary2 &v) {
    if (kind == SchemeKind::Parallel) {
        return compile_parallel(synthesize_parallel(u, v), u, v);
    }
    return compile_sequential(synthesize_sequential(u, v), u, v);
}

CompiledScheme build_scheme(const ExperimentConfig &config) {
    return build_scheme(config.scheme, parse_gate(config.gate_u), parse_gate(config.gate_v));
}

ShotCounts widen_counts(const ShotCounts &logical, int device_qubits, std::span<const int> qubit_map) {
    ShotCounts out;
    out.total = logical.total;
    for (const auto &[bits, n] : logical.counts) {
        if (bits.size() > qubit_map.size()) {
            throw Error(ErrorCode::MapOutOfRange, "bitstring wider than qubit_map");
        }
        std::string wide(size_t(device_qubits), '0');
        for (size_t i = 0; i < bits.size(); ++i) {
            const int p = qubit_map[i];
            if (p < 0 || p >= device_qubits) {
                throw Error(ErrorCode::MapOutOfRange, "qubit_map entry outside the device");
            }
            wide[size_t(p)] = bits[i];
        }
        out.counts[wide] += n;
    }
    return out;
}

ShotCounts project_counts(const ShotCounts &device, std::span<const int> qubit_map) {
    ShotCounts out;
    out.total = device.total;
    for (const auto &[bits, n] : device.counts) {
        std::string narrow;
        for (int p : qubit_map) {
            if (p < 0 || p >= int(bits.size())) {
                throw Error(ErrorCode::MapOutOfRange, "qubit_map entry outside the bitstring");
            }
            narrow += bits[size_t(p)];
        }
        out.counts[narrow] += n;
    }
    return out;
}

std::uint64_t round_seed(std::uint64_t seed, int round_index) {
    return mix_seed(seed, std::uint64_t(round_index));
}

Guess draw_truth(std::uint64_t round_seed) {
    SplitMix64 coin(round_seed, kTruthStream);
    return coin.uniform() < 0.5 ? Guess::FirstGate : Guess::SecondGate;
}

RoundResult run_round(const ExperimentConfig &config, std::uint64_t round_seed) {
    config.validate();
    return run_round(config, build_scheme(config), draw_truth(round_seed), mix_seed(round_seed, kShotStream));
}

RoundResult run_round(const ExperimentConfig &config, const CompiledScheme &scheme, Guess truth,
                      std::uint64_t shot_seed) {
    const Circuit &circuit = circuit_for(scheme, truth);
    const std::vector<int> map = scheme_map(config, circuit.num_clbits());
    const ShotCounts logical = run_shots(circuit, config.shots, config.noise, shot_seed);

    RoundResult r;
    r.truth = truth;
    r.counts = widen_counts(logical, config.device_qubits, map);
    r.success_count = count_successes(project_counts(r.counts, map), scheme.rule, truth);
    r.success_rate = double(r.success_count) / config.shots;
    return r;
}

BoxStats aggregate_rates(std::span<const double> rates) {
    if (rates.empty()) {
        throw Error(ErrorCode::EmptyInput, "no rounds to aggregate");
    }
    std::vector<double> s(rates.begin(), rates.end());
    std::sort(s.begin(), s.end());
    const size_t n = s.size();
    auto nearest_rank = [&](double p) { return s[std::min(n - 1, size_t(std::floor(p * double(n))))]; };

    BoxStats b;
    b.min = s.front();
    b.max = s.back();
    b.q25 = nearest_rank(0.25);
    b.q75 = nearest_rank(0.75);
    b.median = n % 2 == 1 ? s[n / 2] : (s[n / 2 - 1] + s[n / 2]) / 2;
    b.mean = std::accumulate(s.begin(), s.end(), 0.0) / double(n);
    double var = 0;
    for (double x : s) {
        var += (x - b.mean) * (x - b.mean);
    }
    b.stddev = std::sqrt(var / double(n));
    return b;
}

BoxStats aggregate(std::span<const RoundResult> results) {
    std::vector<double> rates;
    rates.reserve(results.size());
    for (const auto &r : results) {
        rates.push_back(r.success_rate);
    }
    return aggregate_rates(rates);
}

std::string_view scenario_key(Scenario s) {
    switch (s) {
        case Scenario::ParallelFirst:
            return "parallel.first";
        case Scenario::ParallelSecond:
            return "parallel.second";
        case Scenario::SequentialFirst:
            return "sequential.first";
        case Scenario::SequentialSecond:
            return "sequential.second";
    }
    return "";
}

std::array<double, 4> scenario_rates(const CompiledScheme &parallel, const CompiledScheme &sequential,
                                     const NoiseModel &noise, int shots, std::uint64_t seed) {
    std::array<double, 4> out{};
    for (size_t i = 0; i < kScenarios.size(); ++i) {
        const Scenario s = kScenarios[i];
        const bool is_parallel = s == Scenario::ParallelFirst || s == Scenario::ParallelSecond;
        const Guess truth =
            (s == Scenario::ParallelFirst || s == Scenario::SequentialFirst) ? Guess::FirstGate : Guess::SecondGate;
        const CompiledScheme &scheme = is_parallel ? parallel : sequential;
        out[i] = success_probability(circuit_for(scheme, truth), scheme.rule, truth, shots, noise, mix_seed(seed, i));
    }
    return out;
}

FitResult fit_noise(const FitTargets &targets, const FitOptions &options) {
    for (double t : targets.rates) {
        if (!(t > 0 && t <= 1)) {
            throw Error(ErrorCode::InvalidArgument, "fit targets must lie in (0, 1]");
        }
    }
    const Unitary2 u = parse_gate(targets.gate_u);
    const Unitary2 v = parse_gate(targets.gate_v);
    const CompiledScheme parallel = build_scheme(SchemeKind::Parallel, u, v);
    const CompiledScheme sequential = build_scheme(SchemeKind::Sequential, u, v);

    FitResult best;
    best.rms = INFINITY;
    for (int i1 = 0; i1 <= 10; ++i1) {
        for (int i2 = 0; i2 <= 10; ++i2) {
            for (int i3 = 0; i3 <= 8; ++i3) {
                const NoiseModel noise{i1 / 1000.0, i2 / 200.0, i3 / 100.0};
                const auto rates = scenario_rates(parallel, sequential, noise, options.shots, options.seed);
                double sq = 0;
                for (size_t k = 0; k < rates.size(); ++k) {
                    sq += (rates[k] - targets.rates[k]) * (rates[k] - targets.rates[k]);
                }
                const double rms = std::sqrt(sq / double(rates.size()));
                if (rms < best.rms) {
                    best = {noise, rms, rates};
                }
            }
        }
    }
    return best;
}

ExperimentConfig ExperimentPlan::config_for(SchemeKind kind) const {
    ExperimentConfig c = base;
    c.scheme = kind;
    return c;
}

ExperimentReport run_experiment(const ExperimentPlan &plan) {
    ExperimentReport report;
    report.plan = plan;
    for (SchemeKind kind : plan.schemes) {
        const ExperimentConfig config = plan.config_for(kind);
        config.validate();
        const CompiledScheme scheme = build_scheme(config);
        SchemeReport sr;
        sr.scheme = kind;
        for (int r = 0; r < config.rounds; ++r) {
            const std::uint64_t rs = round_seed(config.seed, r);
            sr.rounds.push_back(run_round(config, scheme, draw_truth(rs), mix_seed(rs, kShotStream)));
        }
        sr.stats = aggregate(sr.rounds);
        report.schemes.push_back(std::move(sr));
    }
    return report;
}

NoiseModel noise_from_kv(const KeyValueFile &kv, const std::string &prefix) {
    NoiseModel n{kv.get_double(prefix + "p1", 0), kv.get_double(prefix + "p2", 0),
                 kv.get_double(prefix + "readout_eps", 0)};
    n.validate();
    return n;
}

void noise_to_kv(KeyValueFile &kv, const NoiseModel &noise, const std::string &prefix) {
    kv.set(prefix + "p1", noise.p1);
    kv.set(prefix + "p2", noise.p2);
    kv.set(prefix + "readout_eps", noise.readout_eps);
}

ExperimentPlan plan_from_kv(const KeyValueFile &kv) {
    ExperimentPlan plan;
    ExperimentConfig &c = plan.base;
    c.gate_u = kv.find("gate_u").value_or(c.gate_u);
    c.gate_v = kv.find("gate_v").value_or(c.gate_v);
    c.shots = int(kv.get_int("shots", c.shots));
    c.rounds = int(kv.get_int("rounds", c.rounds));
    c.seed = std::uint64_t(kv.get_int("seed", (long long)c.seed));
    c.noise = noise_from_kv(kv, "noise.");
    c.device_qubits = int(kv.get_int("device_qubits", c.device_qubits));
    if (auto m = kv.find("qubit_map")) {
        c.qubit_map.clear();
        for (const auto &part : split_list(*m)) {
            try {
                c.qubit_map.push_back(std::stoi(part));
            } catch (const std::exception &) {
                throw Error(ErrorCode::InvalidArgument, "qubit_map entries must be integers");
            }
        }
    }
    if (auto s = kv.find("schemes")) {
        plan.schemes.clear();
        for (const auto &part : split_list(*s)) {
            if (part == "both") {
                plan.schemes = {SchemeKind::Parallel, SchemeKind::Sequential};
            } else {
                plan.schemes.push_back(parse_scheme(part));
            }
        }
    }
    if (plan.schemes.empty()) {
        throw Error(ErrorCode::InvalidArgument, "plan lists no schemes");
    }
    c.scheme = plan.schemes.front();
    c.validate();
    return plan;
}

void plan_to_kv(KeyValueFile &kv, const ExperimentPlan &plan) {
    const ExperimentConfig &c = plan.base;
    kv.set("gate_u", c.gate_u);
    kv.set("gate_v", c.gate_v);
    std::string schemes;
    for (SchemeKind k : plan.schemes) {
        schemes += (schemes.empty() ? "" : ",") + std::string(scheme_name(k));
    }
    kv.set("schemes", schemes);
    kv.set("shots", (long long)c.shots);
    kv.set("rounds", (long long)c.rounds);
    kv.set("seed", std::to_string(c.seed));
    noise_to_kv(kv, c.noise, "noise.");
    kv.set("device_qubits", (long long)c.device_qubits);
    std::string map;
    for (int q : c.qubit_map) {
        map += (map.empty() ? "" : ",") + std::to_string(q);
    }
    kv.set("qubit_map", map);
}

FitTargets targets_from_kv(const KeyValueFile &kv) {
    FitTargets t;
    for (size_t i = 0; i < kScenarios.size(); ++i) {
        t.rates[i] = kv.get_double(std::string(scenario_key(kScenarios[i])));
    }
    t.gate_u = kv.find("gate_u").value_or(t.gate_u);
    t.gate_v = kv.find("gate_v").value_or(t.gate_v);
    return t;
}

KeyValueFile report_to_kv(const ExperimentReport &report) {
    KeyValueFile kv;
    kv.add_comment("gatedisc experiment report");
    kv.set("format", "gatedisc-report-1");
    plan_to_kv(kv, report.plan);
    for (const SchemeReport &sr : report.schemes) {
        const std::string name(scheme_name(sr.scheme));
        kv.add_comment(name + " scheme");
        for (size_t r = 0; r < sr.rounds.size(); ++r) {
            const RoundResult &rr = sr.rounds[r];
            const std::string key = name + ".round." + std::to_string(r) + ".";
            kv.set(key + "truth", std::string(guess_name(rr.truth)));
            kv.set(key + "success_count", (long long)rr.success_count);
            kv.set(key + "success_rate", rr.success_rate);
            kv.set(key + "counts", counts_to_string(rr.counts));
        }
        const BoxStats &b = sr.stats;
        const std::string sk = name + ".stats.";
        kv.set(sk + "min", b.min);
        kv.set(sk + "q25", b.q25);
        kv.set(sk + "median", b.median);
        kv.set(sk + "q75", b.q75);
        kv.set(sk + "max", b.max);
        kv.set(sk + "mean", b.mean);
        kv.set(sk + "stddev", b.stddev);
    }
    return kv;
}

ExperimentReport report_from_kv(const KeyValueFile &kv) {
    if (kv.find("format").value_or("") != "gatedisc-report-1") {
        throw Error(ErrorCode::InvalidArgument, "not a gatedisc report (missing format = gatedisc-report-1)");
    }
    ExperimentReport report;
    report.plan = plan_from_kv(kv);
    for (SchemeKind kind : report.plan.schemes) {
        const std::string name(scheme_name(kind));
        SchemeReport sr;
        sr.scheme = kind;
        for (int r = 0; r < report.plan.base.rounds; ++r) {
            const std::string key = name + ".round." + std::to_string(r) + ".";
            RoundResult rr;
            rr.truth = parse_truth(kv.get(key + "truth"));
            rr.success_count = int(kv.get_int(key + "success_count"));
            rr.success_rate = kv.get_double(key + "success_rate");
            rr.counts = counts_from_string(kv.get(key + "counts"));
            sr.rounds.push_back(std::move(rr));
        }
        sr.stats = aggregate(sr.rounds);
        report.schemes.push_back(std::move(sr));
    }
    return report;
}

std::string rate_histogram(std::span<const double> rates, int bins) {
    if (rates.empty()) {
        return "";
    }
    const auto [lo_it, hi_it] = std::minmax_element(rates.begin(), rates.end());
    const double lo = *lo_it;
    const double hi = *hi_it;
    if (hi - lo < 1e-12 || bins < 2) {
        bins = 1;
    }
    const double width = bins == 1 ? 0 : (hi - lo) / bins;
    std::vector<int> hist(size_t(bins), 0);
    for (double r : rates) {
        const int b = bins == 1 ? 0 : std::min(bins - 1, int((r - lo) / width));
        ++hist[size_t(b)];
    }
    std::string out;
    char buf[64];
    for (int b = 0; b < bins; ++b) {
        const double left = lo + b * width;
        const double right = bins == 1 ? hi : left + width;
        const int n = hist[size_t(b)];
        std::snprintf(buf, sizeof(buf), "  [%.4f, %.4f%c %3d", left, right, b == bins - 1 ? ']' : ')', n);
        out += buf;
        if (n > 0) {
            out += " " + std::string(size_t(n), '#');
        }
        out += "\n";
    }
    return out;
}

}  // namespace gatedisc
