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


#include "gatedisc/sim.hpp"

#include <array>
#include <vector>

namespace gatedisc {

namespace {

constexpr int kMaxQubits = 3;
using Amps = std::array<std::complex<double>, 1 << kMaxQubits>;

struct Op {
    bool is_cx = false;
    std::array<std::complex<double>, 4> m{};
    int a = 0;  // target, or control for CX
    int b = 0;  // CX target
};

struct Kernel {
    int n;
    int dim;

    int mask(int q) const {
        return 1 << (n - 1 - q);
    }

    void apply_1q(Amps &s, int q, const std::array<std::complex<double>, 4> &m) const {
        const int bit = mask(q);
        for (int i = 0; i < dim; ++i) {
            if (i & bit) {
                continue;
            }
            const auto a0 = s[size_t(i)];
            const auto a1 = s[size_t(i | bit)];
            s[size_t(i)] = m[0] * a0 + m[1] * a1;
            s[size_t(i | bit)] = m[2] * a0 + m[3] * a1;
        }
    }

    void apply_cx(Amps &s, int control, int target) const {
        const int cbit = mask(control);
        const int tbit = mask(target);
        for (int i = 0; i < dim; ++i) {
            if ((i & cbit) && !(i & tbit)) {
                std::swap(s[size_t(i)], s[size_t(i | tbit)]);
            }
        }
    }

    /// 0 = X, 1 = Y, 2 = Z
    void apply_pauli(Amps &s, int q, int which) const {
        const int bit = mask(q);
        const std::complex<double> i1(0, 1);
        for (int i = 0; i < dim; ++i) {
            if (which == 2) {
                if (i & bit) {
                    s[size_t(i)] = -s[size_t(i)];
                }
                continue;
            }
            if (i & bit) {
                continue;
            }
            const auto a0 = s[size_t(i)];
            const auto a1 = s[size_t(i | bit)];
            if (which == 0) {
                s[size_t(i)] = a1;
                s[size_t(i | bit)] = a0;
            } else {
                s[size_t(i)] = -i1 * a1;
                s[size_t(i | bit)] = i1 * a0;
            }
        }
    }
};

std::vector<Op> compile_ops(const Circuit &circuit) {
    std::vector<Op> ops;
    for (const auto &g : circuit.gates()) {
        if (const auto *u = std::get_if<U3Gate>(&g)) {
            const Eigen::Matrix2cd m = u->params.matrix();
            ops.push_back({false, {m(0, 0), m(0, 1), m(1, 0), m(1, 1)}, u->target, 0});
        } else if (const auto *c = std::get_if<CxGate>(&g)) {
            ops.push_back({true, {}, c->control, c->target});
        }
    }
    return ops;
}

void check_width(const Circuit &circuit) {
    if (circuit.num_qubits() < 1 || circuit.num_qubits() > kMaxQubits) {
        throw Error(ErrorCode::DimensionMismatch, "simulator supports 1 to 3 qubits");
    }
}

void run_unitary(const Kernel &k, const std::vector<Op> &ops, Amps &s) {
    for (const auto &op : ops) {
        if (op.is_cx) {
            k.apply_cx(s, op.a, op.b);
        } else {
            k.apply_1q(s, op.a, op.m);
        }
    }
}

}  // namespace

void NoiseModel::validate() const {
    for (double p : {p1, p2, readout_eps}) {
        if (!(p >= 0 && p <= 1)) {
            throw Error(ErrorCode::InvalidArgument, "noise rates must lie in [0, 1]");
        }
    }
}

std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
    std::uint64_t z = a ^ (b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2));
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

SplitMix64::SplitMix64(std::uint64_t seed, std::uint64_t index) : state_(mix_seed(seed, index)) {
}

std::uint64_t SplitMix64::next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double SplitMix64::uniform() {
    return double(next() >> 11) * 0x1.0p-53;
}

PureState apply_circuit(const PureState &state, const Circuit &circuit) {
    if (state.num_qubits() != circuit.num_qubits()) {
        throw Error(ErrorCode::DimensionMismatch, "state has " + std::to_string(state.num_qubits()) +
                                                      " qubits, circuit has " +
                                                      std::to_string(circuit.num_qubits()));
    }
    if (circuit.has_measurements()) {
        throw Error(ErrorCode::InvalidArgument, "apply_circuit takes measurement-free circuits");
    }
    check_width(circuit);
    const Kernel k{circuit.num_qubits(), 1 << circuit.num_qubits()};
    Amps s{};
    for (int i = 0; i < k.dim; ++i) {
        s[size_t(i)] = state[i];
    }
    run_unitary(k, compile_ops(circuit), s);
    Eigen::VectorXcd out(k.dim);
    for (int i = 0; i < k.dim; ++i) {
        out(i) = s[size_t(i)];
    }
    return PureState(out);
}

Eigen::MatrixXcd circuit_unitary(const Circuit &circuit) {
    check_width(circuit);
    const Kernel k{circuit.num_qubits(), 1 << circuit.num_qubits()};
    const auto ops = compile_ops(circuit);
    Eigen::MatrixXcd u(k.dim, k.dim);
    for (int col = 0; col < k.dim; ++col) {
        Amps s{};
        s[size_t(col)] = 1;
        run_unitary(k, ops, s);
        for (int row = 0; row < k.dim; ++row) {
            u(row, col) = s[size_t(row)];
        }
    }
    return u;
}

ShotCounts run_shots(const Circuit &circuit, int shots, const NoiseModel &noise, std::uint64_t seed) {
    noise.validate();
    if (shots < 1) {
        throw Error(ErrorCode::InvalidArgument, "shots must be positive");
    }
    if (!circuit.has_measurements()) {
        throw Error(ErrorCode::NoMeasurement, "circuit has no measure gates");
    }
    check_width(circuit);

    const Kernel k{circuit.num_qubits(), 1 << circuit.num_qubits()};
    const auto ops = compile_ops(circuit);
    std::vector<MeasureGate> measures;
    for (const auto &g : circuit.gates()) {
        if (const auto *m = std::get_if<MeasureGate>(&g)) {
            measures.push_back(*m);
        }
    }
    const int nc = circuit.num_clbits();
    std::vector<int> tally(size_t(1) << nc, 0);

    for (int shot = 0; shot < shots; ++shot) {
        SplitMix64 rng(seed, std::uint64_t(shot));
        Amps s{};
        s[0] = 1;
        for (const auto &op : ops) {
            if (op.is_cx) {
                k.apply_cx(s, op.a, op.b);
                for (int q : {op.a, op.b}) {
                    const double u = rng.uniform();
                    if (u < noise.p2) {
                        k.apply_pauli(s, q, std::min(2, int(3 * u / noise.p2)));
                    }
                }
            } else {
                k.apply_1q(s, op.a, op.m);
                const double u = rng.uniform();
                if (u < noise.p1) {
                    k.apply_pauli(s, op.a, std::min(2, int(3 * u / noise.p1)));
                }
            }
        }

        const double pick = rng.uniform();
        double acc = 0;
        int outcome = -1;
        int last_nonzero = 0;
        for (int i = 0; i < k.dim; ++i) {
            const double p = std::norm(s[size_t(i)]);
            if (p > 0) {
                last_nonzero = i;
            }
            acc += p;
            if (pick < acc) {
                outcome = i;
                break;
            }
        }
        if (outcome < 0) {
            outcome = last_nonzero;
        }

        int bits = 0;
        for (const auto &m : measures) {
            int bit = (outcome >> (k.n - 1 - m.qubit)) & 1;
            if (rng.uniform() < noise.readout_eps) {
                bit ^= 1;
            }
            const int pos = nc - 1 - m.clbit;
            bits = (bits & ~(1 << pos)) | (bit << pos);
        }
        ++tally[size_t(bits)];
    }

    ShotCounts out;
    out.total = shots;
    for (size_t i = 0; i < tally.size(); ++i) {
        if (tally[i] == 0) {
            continue;
        }
        std::string key(size_t(nc), '0');
        for (int c = 0; c < nc; ++c) {
            if ((i >> (nc - 1 - c)) & 1) {
                key[size_t(c)] = '1';
            }
        }
        out.counts[key] = tally[i];
    }
    return out;
}

int count_successes(const ShotCounts &counts, const OutcomeRule &rule, Guess truth) {
    int n = 0;
    for (const auto &[bits, c] : counts.counts) {
        if (classify(bits, rule) == truth) {
            n += c;
        }
    }
    return n;
}

double success_probability(const Circuit &circuit, const OutcomeRule &rule, Guess truth, int shots,
                           const NoiseModel &noise, std::uint64_t seed) {
    const ShotCounts counts = run_shots(circuit, shots, noise, seed);
    return double(count_successes(counts, rule, truth)) / counts.total;
}

}  // namespace gatedisc
