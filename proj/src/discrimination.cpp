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


#include "gatedisc/discrimination.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gatedisc {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSpreadFloor = 1e-9;

Eigen::Matrix2cd eigenbasis(const Eigensystem &eig) {
    Eigen::Matrix2cd e;
    e.col(0) = eig.eigvecs[0].amplitudes();
    e.col(1) = eig.eigvecs[1].amplitudes();
    return e;
}

double binomial(int n, int k) {
    double r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

PureState apply_power(const Unitary2 &u, const PureState &s) {
    return PureState::normalized(tensor_power(u, s.num_qubits()) * s.amplitudes());
}

}  // namespace

std::string_view guess_name(Guess g) {
    switch (g) {
        case Guess::FirstGate:
            return "first";
        case Guess::SecondGate:
            return "second";
        case Guess::Failure:
            return "failure";
    }
    return "failure";
}

OutcomeRule OutcomeRule::parity() {
    return {{"01", "10"}, {"00", "11"}};
}

OutcomeRule OutcomeRule::single_bit() {
    return {{"0"}, {"1"}};
}

Guess classify(std::string_view bits, const OutcomeRule &rule) {
    const std::string key(bits);
    if (rule.accept_u.contains(key)) {
        return Guess::FirstGate;
    }
    if (rule.accept_v.contains(key)) {
        return Guess::SecondGate;
    }
    return Guess::Failure;
}

double PhasorWeights::residual() const {
    std::complex<double> sum = 0;
    for (size_t i = 0; i < phases.size(); ++i) {
        sum += weights[i] * std::polar(1.0, phases[i]);
    }
    return std::abs(sum);
}

PhasorWeights solve_phasor_weights(std::span<const double> phases) {
    const size_t n = phases.size();
    PhasorWeights out;
    out.phases.assign(phases.begin(), phases.end());
    out.weights.assign(n, 0.0);

    std::vector<std::complex<double>> z(n);
    for (size_t i = 0; i < n; ++i) {
        z[i] = std::polar(1.0, phases[i]);
    }

    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            if (std::abs(z[i] + z[j]) <= 2e-13) {
                out.weights[i] = 0.5;
                out.weights[j] = 0.5;
                return out;
            }
        }
    }

    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            for (size_t k = j + 1; k < n; ++k) {
                // w_j (z_j - z_i) + w_k (z_k - z_i) = -z_i, w_i = 1 - w_j - w_k.
                const std::complex<double> a = z[j] - z[i];
                const std::complex<double> b = z[k] - z[i];
                const double det = a.real() * b.imag() - a.imag() * b.real();
                if (std::abs(det) < 1e-12) {
                    continue;
                }
                const std::complex<double> rhs = -z[i];
                const double wj = (rhs.real() * b.imag() - rhs.imag() * b.real()) / det;
                const double wk = (a.real() * rhs.imag() - a.imag() * rhs.real()) / det;
                const double wi = 1.0 - wj - wk;
                if (wi < -1e-12 || wj < -1e-12 || wk < -1e-12) {
                    continue;
                }
                out.weights[i] = std::max(wi, 0.0);
                out.weights[j] = std::max(wj, 0.0);
                out.weights[k] = std::max(wk, 0.0);
                const double total = out.weights[i] + out.weights[j] + out.weights[k];
                for (double &w : out.weights) {
                    w /= total;
                }
                return out;
            }
        }
    }
    throw Error(ErrorCode::InvalidArgument, "origin is not in the convex hull of the phasors");
}

DistinguishabilityReport analyze(const Unitary2 &u, const Unitary2 &v) {
    DistinguishabilityReport r;
    r.spread = phase_spread(u, v);
    r.perfectly_distinguishable = r.spread > kSpreadFloor;
    r.min_parallel_copies = r.perfectly_distinguishable ? int(std::ceil(kPi / r.spread - 1e-9)) : 0;
    return r;
}

ParallelScheme synthesize_parallel(const Unitary2 &u, const Unitary2 &v) {
    const DistinguishabilityReport report = analyze(u, v);
    if (!report.perfectly_distinguishable) {
        throw Error(ErrorCode::NotDistinguishable, "gates are equal up to a global phase");
    }
    const int copies = report.min_parallel_copies;
    if (copies > kMaxParallelCopies) {
        throw Error(ErrorCode::CopiesOutOfScope,
                    "pair needs " + std::to_string(copies) + " parallel copies; at most 3 are supported");
    }

    const Unitary2 d = u.adjoint() * v;
    const Eigensystem eig = eig_unitary2(d);
    const double delta = angle_difference(eig.phases[0], eig.phases[1]);

    // A product eigenstate with k factors of the second eigenvector picks up
    // phase k*delta relative to the all-first one. Group k by phase.
    std::vector<double> group_phase;
    std::vector<int> group_of_k(copies + 1);
    std::vector<double> group_size;
    for (int k = 0; k <= copies; ++k) {
        const double phase = canonical_angle(k * delta);
        int g = -1;
        for (size_t j = 0; j < group_phase.size(); ++j) {
            if (std::abs(angle_difference(group_phase[j], phase)) < 1e-12) {
                g = int(j);
            }
        }
        if (g < 0) {
            g = int(group_phase.size());
            group_phase.push_back(phase);
            group_size.push_back(0);
        }
        group_of_k[k] = g;
        group_size[g] += binomial(copies, k);
    }
    const PhasorWeights weights = solve_phasor_weights(group_phase);

    const Eigen::Index dim = Eigen::Index(1) << copies;
    Eigen::VectorXcd in_eigenbasis(dim);
    for (Eigen::Index b = 0; b < dim; ++b) {
        const int g = group_of_k[std::popcount(static_cast<unsigned>(b))];
        in_eigenbasis(b) = std::sqrt(weights.weights[g] / group_size[g]);
    }
    Eigen::MatrixXcd basis = Eigen::MatrixXcd::Identity(1, 1);
    const Eigen::Matrix2cd e = eigenbasis(eig);
    for (int i = 0; i < copies; ++i) {
        basis = Eigen::kroneckerProduct(basis, e).eval();
    }

    ParallelScheme scheme;
    scheme.copies = copies;
    scheme.input = PureState::normalized(basis * in_eigenbasis);
    scheme.measurement_states = {apply_power(u, scheme.input), apply_power(v, scheme.input)};
    scheme.outcome_rule = copies == 2 ? OutcomeRule::parity() : OutcomeRule::single_bit();
    scheme.weights = weights;
    return scheme;
}

SequentialScheme synthesize_sequential(const Unitary2 &u, const Unitary2 &v) {
    const double spread = phase_spread(u, v);
    if (spread <= kSpreadFloor) {
        throw Error(ErrorCode::NotDistinguishable, "gates are equal up to a global phase");
    }
    if (spread < kPi / 2 - 1e-12) {
        throw Error(ErrorCode::SpreadTooSmall,
                    "eigenphase spread " + std::to_string(spread) + " is below pi/2; one auxiliary gate is not enough");
    }

    const Unitary2 d = u.adjoint() * v;
    const Eigen::Matrix2cd e = eigenbasis(eig_unitary2(d));

    // Diagonal weight p of |X|^2 solves 2p cos(spread) + 2(1 - p) = 0.
    const double p = std::min(1.0, 1.0 / (1.0 - std::cos(spread)));
    const double c = std::sqrt(p);
    const double s = std::sqrt(1.0 - p);
    Eigen::Matrix2cd rot;
    rot << c, -s, s, c;

    SequentialScheme scheme;
    scheme.spread = spread;
    scheme.rotation = Unitary2((e * rot * e.adjoint()).eval());
    scheme.aux = scheme.rotation * u.adjoint();
    scheme.twisted = scheme.rotation.adjoint() * d * scheme.rotation * d;

    const Eigensystem w = eig_unitary2(scheme.twisted);
    scheme.input = PureState::normalized(w.eigvecs[0].amplitudes() + w.eigvecs[1].amplitudes());
    const Unitary2 through_u = u * scheme.aux * u;
    const Unitary2 through_v = v * scheme.aux * v;
    scheme.measurement_states = {apply(through_u, scheme.input), apply(through_v, scheme.input)};
    scheme.outcome_rule = OutcomeRule::single_bit();
    return scheme;
}

}  // namespace gatedisc
