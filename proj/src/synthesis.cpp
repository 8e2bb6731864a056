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


#include "gatedisc/synthesis.hpp"

#include <cmath>
#include <numbers>

namespace gatedisc {

namespace {

constexpr double kOrthogonalityTol = 1e-9;
constexpr double kDegenerateBranch = 1e-8;

/// Unitary whose first column is `target` with its leading phase removed.
Unitary2 loader(Eigen::Vector2cd target) {
    target.normalize();
    fix_leading_phase(target);
    Eigen::Matrix2cd g;
    g << target(0), -std::conj(target(1)), target(1), std::conj(target(0));
    return Unitary2(g);
}

/// Rows are a^dagger and the orthogonal complement of a.
Unitary2 rows_from(const Eigen::Vector2cd &a) {
    Eigen::Matrix2cd r;
    r.row(0) = a.adjoint();
    r.row(1) = Eigen::Vector2cd(-std::conj(a(1)), std::conj(a(0))).adjoint();
    return Unitary2(r);
}

void require_qubits(const PureState &s, int n, const char *what) {
    if (s.num_qubits() != n) {
        throw Error(ErrorCode::DimensionMismatch, std::string(what) + " expects a " + std::to_string(n) + "-qubit state");
    }
}

/// Basis change for one Walgate branch: `cu` goes to |1 xor k>, `cv` to |k>.
Unitary2 branch_rotation(const Eigen::Vector2cd &cu, const Eigen::Vector2cd &cv, int k) {
    const double nu = cu.norm();
    const double nv = cv.norm();
    if (std::max(nu, nv) < kDegenerateBranch) {
        return Unitary2::identity();
    }
    // sends the anchor to |0>
    const Unitary2 to_zero = rows_from(nv >= nu ? Eigen::Vector2cd(cv / nv) : Eigen::Vector2cd(cu / nu));
    const int anchor_target = nv >= nu ? k : 1 - k;
    if (anchor_target == 0) {
        return to_zero;
    }
    Eigen::Matrix2cd flip;
    flip << 0, 1, 1, 0;
    return Unitary2(flip) * to_zero;
}

/// Merges `o` into the last gate on `q` when that gate is a U3; otherwise
/// appends it.
Circuit with_oracle_layer(const Circuit &prep, const Unitary2 &o, int copies, int num_clbits) {
    std::vector<Gate> gates = prep.gates();
    std::vector<bool> merged(size_t(copies), false);
    for (int q = 0; q < copies; ++q) {
        for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
            if (auto *u = std::get_if<U3Gate>(&*it); u && u->target == q) {
                const Unitary2 fused = o * Unitary2(u->params.unitary());
                u->params = u3_params(fused);
                merged[size_t(q)] = true;
                break;
            }
            if (auto *c = std::get_if<CxGate>(&*it); c && (c->control == q || c->target == q)) {
                break;
            }
        }
    }
    Circuit out(prep.num_qubits(), num_clbits);
    for (const auto &g : gates) {
        if (const auto *u = std::get_if<U3Gate>(&g)) {
            out.unitary(Unitary2(u->params.unitary()), u->target);
        } else {
            out.append(g);
        }
    }
    for (int q = 0; q < copies; ++q) {
        if (!merged[size_t(q)]) {
            out.unitary(o, q);
        }
    }
    return out;
}

}  // namespace

Circuit prep_1q(const PureState &target) {
    require_qubits(target, 1, "prep_1q");
    Circuit c(1, 0);
    c.unitary(loader(target.amplitudes()), 0);
    return c;
}

Circuit prep_2q(const PureState &target) {
    require_qubits(target, 2, "prep_2q");
    const SchmidtForm sf = schmidt_decompose(target);
    Circuit c(2, 0);
    if (sf.coeffs[1] <= 1e-12) {
        c.unitary(loader(sf.local_a.matrix().col(0)), 0);
        c.unitary(loader(sf.local_b.matrix().col(0)), 1);
        return c;
    }
    c.unitary(Unitary2::from_u3(2 * std::atan2(sf.coeffs[1], sf.coeffs[0]), 0, 0), 0);
    c.cx(0, 1);
    c.unitary(sf.local_a, 0);
    c.unitary(sf.local_b, 1);
    return c;
}

Circuit measure_basis_1q(const PureState &m_u, const PureState &m_v) {
    require_qubits(m_u, 1, "measure_basis_1q");
    require_qubits(m_v, 1, "measure_basis_1q");
    const double overlap = std::abs(m_u.inner(m_v));
    if (overlap > kOrthogonalityTol) {
        throw Error(ErrorCode::NotOrthogonal, "measurement states overlap by " + std::to_string(overlap));
    }
    Circuit c(1, 1);
    c.unitary(rows_from(m_u.amplitudes()), 0);
    c.measure(0, 0);
    return c;
}

Unitary2 zero_diagonal_conjugation(const Eigen::Matrix2cd &m) {
    const double trace = std::abs(m.trace());
    if (trace > 1e-9) {
        throw Error(ErrorCode::NotTraceless, "matrix trace magnitude " + std::to_string(trace));
    }
    if (std::abs(m(0, 0)) <= 1e-12 && std::abs(m(1, 1)) <= 1e-12) {
        return Unitary2::identity();
    }
    // m = H1 + i H2 with H1, H2 traceless Hermitian. Any y = (f1 + e^{it} f2)/sqrt2
    // over the eigenbasis of H1 has y^dagger H1 y = 0; t then kills y^dagger H2 y.
    const Eigen::Matrix2cd h1 = (m + m.adjoint()) / 2.0;
    const Eigen::Matrix2cd h2 = (m - m.adjoint()) / std::complex<double>(0, 2);
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(h1);
    const Eigen::Vector2cd f1 = es.eigenvectors().col(1);
    const Eigen::Vector2cd f2 = es.eigenvectors().col(0);
    const std::complex<double> g = f1.dot(h2 * f2);
    const double t = std::abs(g) <= 1e-14 ? 0.0 : std::numbers::pi / 2 - std::arg(g);
    Eigen::Vector2cd y = (f1 + std::polar(1.0, t) * f2) / std::sqrt(2.0);
    fix_leading_phase(y);
    return rows_from(y);
}

Circuit controlled_u_decompose(const Unitary2 &u) {
    const auto &m = u.matrix();
    constexpr double tol = 1e-12;
    Circuit c(2, 0);
    if (is_identity_up_to_phase(u, tol)) {
        c.unitary(Unitary2::from_u3(0, 0, std::arg(m(0, 0))), 0);
        return c;
    }
    if (std::abs(m(0, 0)) <= tol && std::abs(m(1, 1)) <= tol && std::abs(m(0, 1) - m(1, 0)) <= tol) {
        c.cx(0, 1);
        c.unitary(Unitary2::from_u3(0, 0, std::arg(m(0, 1))), 0);
        return c;
    }
    // u = e^{i alpha} Rz(beta) Ry(gamma) Rz(delta); A B C = I and
    // A X B X C = e^{-i alpha} u.
    const U3Params p = u3_params(u);
    const double beta = p.phi;
    const double gamma = p.theta;
    const double delta = p.lam;
    const Unitary2 a = Unitary2::from_u3(gamma / 2, beta, 0);
    const Unitary2 b = Unitary2::from_u3(-gamma / 2, 0, -(delta + beta) / 2);
    const Unitary2 cc = Unitary2::from_u3(0, 0, (delta - beta) / 2);
    c.unitary(cc, 1);
    c.cx(0, 1);
    c.unitary(b, 1);
    c.cx(0, 1);
    c.unitary(a, 1);
    c.unitary(Unitary2::from_u3(0, 0, p.global_phase), 0);
    return c;
}

Circuit walgate_measurement_circuit(const PureState &s_u, const PureState &s_v, const OutcomeRule &rule) {
    require_qubits(s_u, 2, "walgate_measurement_circuit");
    require_qubits(s_v, 2, "walgate_measurement_circuit");
    if (!(rule == OutcomeRule::parity())) {
        throw Error(ErrorCode::InvalidArgument, "walgate circuit implements the parity outcome rule only");
    }
    const double overlap = std::abs(s_u.inner(s_v));
    if (overlap > kOrthogonalityTol) {
        throw Error(ErrorCode::NotOrthogonal, "states overlap by " + std::to_string(overlap));
    }

    Eigen::Matrix2cd p;
    Eigen::Matrix2cd q;
    p << s_u[0], s_u[1], s_u[2], s_u[3];
    q << s_v[0], s_v[1], s_v[2], s_v[3];
    // Tr(P Q^dagger) = <s_v|s_u> = 0.
    const Unitary2 va = zero_diagonal_conjugation(p * q.adjoint());
    const Eigen::Matrix2cd pa = va.matrix() * p;
    const Eigen::Matrix2cd qa = va.matrix() * q;

    std::array<Unitary2, 2> vb;
    for (int k = 0; k < 2; ++k) {
        vb[size_t(k)] = branch_rotation(pa.row(k).transpose(), qa.row(k).transpose(), k);
    }

    Circuit c(2, 2);
    c.unitary(va, 0);
    c.append(controlled_u_decompose(vb[0].adjoint() * vb[1]));
    c.unitary(vb[0], 1);
    c.measure(0, 0);
    c.measure(1, 1);
    return c;
}

CompiledScheme compile_parallel(const ParallelScheme &scheme, const Unitary2 &u, const Unitary2 &v) {
    CompiledScheme out;
    out.rule = scheme.outcome_rule;
    if (scheme.copies == 1) {
        const Circuit prep = prep_1q(scheme.input);
        const Circuit meas = measure_basis_1q(scheme.measurement_states[0], scheme.measurement_states[1]);
        out.first = with_oracle_layer(prep, u, 1, 1).append(meas);
        out.second = with_oracle_layer(prep, v, 1, 1).append(meas);
        return out;
    }
    if (scheme.copies == 2) {
        const Circuit prep = prep_2q(scheme.input);
        const Circuit meas =
            walgate_measurement_circuit(scheme.measurement_states[0], scheme.measurement_states[1], scheme.outcome_rule);
        out.first = with_oracle_layer(prep, u, 2, 2).append(meas);
        out.second = with_oracle_layer(prep, v, 2, 2).append(meas);
        return out;
    }
    throw Error(ErrorCode::CopiesOutOfScope,
                "no local measurement compiler for " + std::to_string(scheme.copies) + " copies");
}

CompiledScheme compile_sequential(const SequentialScheme &scheme, const Unitary2 &u, const Unitary2 &v) {
    const Circuit prep = prep_1q(scheme.input);
    const Circuit meas = measure_basis_1q(scheme.measurement_states[0], scheme.measurement_states[1]);
    auto build = [&](const Unitary2 &oracle) {
        Circuit c(1, 1);
        c.append(prep).unitary(oracle, 0).unitary(scheme.aux, 0).unitary(oracle, 0).append(meas);
        return c;
    };
    return {build(u), build(v), scheme.outcome_rule};
}

}  // namespace gatedisc
