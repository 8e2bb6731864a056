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


// Dense complex linear algebra for single-qubit unitaries and few-qubit pure
// states. Everything here is templated on the real scalar type; the `double`
// aliases at the bottom are what the rest of the library uses.
//
// Basis ordering is big-endian: qubit 0 is the most significant bit of a basis
// index, so |q0 q1 ...> has index q0*2^(n-1) + q1*2^(n-2) + ...

#pragma once

#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <utility>

#include "gatedisc/error.hpp"

namespace gatedisc {

template <typename Scalar>
using Complex = std::complex<Scalar>;
template <typename Scalar>
using Matrix2c = Eigen::Matrix<Complex<Scalar>, 2, 2>;
template <typename Scalar>
using Vector2c = Eigen::Matrix<Complex<Scalar>, 2, 1>;
template <typename Scalar>
using VectorXc = Eigen::Matrix<Complex<Scalar>, Eigen::Dynamic, 1>;
template <typename Scalar>
using MatrixXc = Eigen::Matrix<Complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic>;

/// Tolerance used for the unitarity and normalization invariants.
template <typename Scalar>
Scalar invariant_tolerance() {
    return std::max(Scalar(1e-10), Scalar(1e3) * Eigen::NumTraits<Scalar>::epsilon());
}

template <typename Scalar>
constexpr Scalar two_pi() {
    return Scalar(2) * std::numbers::pi_v<Scalar>;
}

/// Reduces an angle into [0, 2pi). Values that round to 2pi collapse to 0.
template <typename Scalar>
Scalar canonical_angle(Scalar x) {
    const Scalar period = two_pi<Scalar>();
    Scalar r = std::fmod(x, period);
    if (r < 0) {
        r += period;
    }
    if (r >= period - Scalar(8) * Eigen::NumTraits<Scalar>::epsilon() * period) {
        r = 0;
    }
    return r;
}

/// Shortest signed arc from `a` to `b`, in (-pi, pi].
template <typename Scalar>
Scalar angle_difference(Scalar a, Scalar b) {
    Scalar d = canonical_angle(b - a);
    if (d > std::numbers::pi_v<Scalar>) {
        d -= two_pi<Scalar>();
    }
    return d;
}

template <typename Derived>
typename Derived::RealScalar unitarity_defect(const Eigen::MatrixBase<Derived> &m) {
    using Plain = typename Derived::PlainObject;
    return (m.adjoint() * m - Plain::Identity(m.rows(), m.cols())).cwiseAbs().maxCoeff();
}

/// Max-norm distance between `a` and `b` after removing the best global phase.
template <typename DerivedA, typename DerivedB>
typename DerivedA::RealScalar phase_aligned_distance(const Eigen::MatrixBase<DerivedA> &a,
                                                     const Eigen::MatrixBase<DerivedB> &b) {
    using Scalar = typename DerivedA::RealScalar;
    const Complex<Scalar> overlap = (a.array().conjugate() * b.array()).sum();
    Complex<Scalar> phase(1, 0);
    if (std::abs(overlap) > 0) {
        phase = overlap / std::abs(overlap);
    }
    return (b - phase * a).cwiseAbs().maxCoeff();
}

/// The matrix U(theta, phi, lam) = Rz(phi) Ry(theta) Rz(lam), with
/// Rz(x) = diag(e^{-ix/2}, e^{ix/2}).
template <typename Scalar>
Matrix2c<Scalar> u3_matrix(Scalar theta, Scalar phi, Scalar lam) {
    const Scalar c = std::cos(theta / 2);
    const Scalar s = std::sin(theta / 2);
    Matrix2c<Scalar> m;
    m(0, 0) = std::polar(c, -(phi + lam) / 2);
    m(0, 1) = -std::polar(s, -(phi - lam) / 2);
    m(1, 0) = std::polar(s, (phi - lam) / 2);
    m(1, 1) = std::polar(c, (phi + lam) / 2);
    return m;
}

/// Rescales `v` so that its first component with magnitude above `tol` is
/// real and positive.
template <typename Derived>
void fix_leading_phase(Eigen::MatrixBase<Derived> &v, typename Derived::RealScalar tol = 1e-12) {
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        const auto mag = std::abs(v(i));
        if (mag > tol) {
            v *= std::conj(v(i)) / mag;
            v(i) = mag;
            return;
        }
    }
}

template <typename Scalar>
class BasicUnitary2 {
   public:
    using Matrix = Matrix2c<Scalar>;

    BasicUnitary2() : m_(Matrix::Identity()) {
    }

    explicit BasicUnitary2(const Matrix &m) : m_(m) {
        const Scalar defect = unitarity_defect(m_);
        if (!(defect <= invariant_tolerance<Scalar>())) {
            throw Error(ErrorCode::NotUnitary, "matrix deviates from unitarity by " + std::to_string(double(defect)));
        }
    }

    static BasicUnitary2 identity() {
        return BasicUnitary2();
    }

    static BasicUnitary2 from_u3(Scalar theta, Scalar phi, Scalar lam, Scalar global_phase = 0) {
        return BasicUnitary2(std::polar(Scalar(1), global_phase) * u3_matrix(theta, phi, lam));
    }

    const Matrix &matrix() const {
        return m_;
    }

    Complex<Scalar> operator()(int row, int col) const {
        return m_(row, col);
    }

    BasicUnitary2 adjoint() const {
        return BasicUnitary2(m_.adjoint().eval());
    }

    friend BasicUnitary2 operator*(const BasicUnitary2 &a, const BasicUnitary2 &b) {
        return BasicUnitary2((a.m_ * b.m_).eval());
    }

   private:
    Matrix m_;
};

template <typename Scalar>
class BasicPureState {
   public:
    using Vector = VectorXc<Scalar>;

    /// |0>, one qubit.
    BasicPureState() : num_qubits_(1), amps_(Vector::Unit(2, 0)) {
    }

    explicit BasicPureState(Vector amplitudes) : amps_(std::move(amplitudes)) {
        const Eigen::Index n = amps_.size();
        num_qubits_ = n == 2 ? 1 : n == 4 ? 2 : n == 8 ? 3 : 0;
        if (num_qubits_ == 0) {
            throw Error(ErrorCode::DimensionMismatch,
                        "state must have 2, 4 or 8 amplitudes, got " + std::to_string(n));
        }
        const Scalar norm_defect = std::abs(amps_.squaredNorm() - Scalar(1));
        if (!(norm_defect <= invariant_tolerance<Scalar>())) {
            throw Error(ErrorCode::NotNormalized, "state norm deviates from 1 by " + std::to_string(double(norm_defect)));
        }
    }

    static BasicPureState normalized(const Vector &amplitudes) {
        const Scalar norm = amplitudes.norm();
        if (!(norm > 0)) {
            throw Error(ErrorCode::NotNormalized, "cannot normalize the zero vector");
        }
        return BasicPureState(amplitudes / norm);
    }

    static BasicPureState basis(int num_qubits, Eigen::Index index) {
        return BasicPureState(Vector::Unit(Eigen::Index(1) << num_qubits, index));
    }

    int num_qubits() const {
        return num_qubits_;
    }

    Eigen::Index dim() const {
        return amps_.size();
    }

    const Vector &amplitudes() const {
        return amps_;
    }

    Complex<Scalar> operator[](Eigen::Index i) const {
        return amps_(i);
    }

    /// <this|other>
    Complex<Scalar> inner(const BasicPureState &other) const {
        return amps_.dot(other.amps_);
    }

   private:
    int num_qubits_;
    Vector amps_;
};

template <typename Scalar>
struct BasicU3Params {
    Scalar theta = 0;
    Scalar phi = 0;
    Scalar lam = 0;
    Scalar global_phase = 0;

    /// U(theta, phi, lam) without the global phase.
    Matrix2c<Scalar> matrix() const {
        return u3_matrix(theta, phi, lam);
    }

    /// e^{i global_phase} U(theta, phi, lam).
    Matrix2c<Scalar> unitary() const {
        return std::polar(Scalar(1), global_phase) * u3_matrix(theta, phi, lam);
    }
};

template <typename Scalar>
struct UnitaryEigensystem {
    std::array<Scalar, 2> phases;
    std::array<BasicPureState<Scalar>, 2> eigvecs;
};

template <typename Scalar>
struct BasicSchmidtForm {
    std::array<Scalar, 2> coeffs;
    BasicUnitary2<Scalar> local_a;
    BasicUnitary2<Scalar> local_b;

    /// sum_i coeffs[i] (local_a|i>) (x) (local_b|i>)
    BasicPureState<Scalar> reassemble() const {
        VectorXc<Scalar> out = VectorXc<Scalar>::Zero(4);
        for (int i = 0; i < 2; ++i) {
            const Vector2c<Scalar> a = local_a.matrix().col(i);
            const Vector2c<Scalar> b = local_b.matrix().col(i);
            out += coeffs[i] * Eigen::kroneckerProduct(a, b).eval();
        }
        return BasicPureState<Scalar>::normalized(out);
    }
};

/// Eigendecomposition of a 2x2 unitary by the closed-form trace/determinant
/// route. Phases are in [0, 2pi) and sorted ascending; each eigenvector has
/// its first nonzero component real and positive. Scalar multiples of the
/// identity return the computational basis.
template <typename Scalar>
UnitaryEigensystem<Scalar> eig_unitary2(const BasicUnitary2<Scalar> &u) {
    using C = Complex<Scalar>;
    using V2 = Vector2c<Scalar>;
    const auto &m = u.matrix();
    const Scalar tiny = Scalar(64) * Eigen::NumTraits<Scalar>::epsilon();

    std::array<V2, 2> vecs;
    std::array<Scalar, 2> phases;
    if (std::max(std::abs(m(0, 1)), std::abs(m(1, 0))) <= tiny) {
        vecs[0] = V2::Unit(0);
        vecs[1] = V2::Unit(1);
        phases[0] = canonical_angle(std::arg(m(0, 0)));
        phases[1] = canonical_angle(std::arg(m(1, 1)));
    } else {
        const C half_trace = (m(0, 0) + m(1, 1)) / Scalar(2);
        const C det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
        const C lambda = half_trace + std::sqrt(half_trace * half_trace - det);
        V2 from_row0(m(0, 1), lambda - m(0, 0));
        V2 from_row1(lambda - m(1, 1), m(1, 0));
        V2 v0 = from_row0.norm() >= from_row1.norm() ? from_row0 : from_row1;
        v0.normalize();
        vecs[0] = v0;
        vecs[1] = V2(-std::conj(v0(1)), std::conj(v0(0)));
        for (int k = 0; k < 2; ++k) {
            const C rayleigh = vecs[k].dot(m * vecs[k]);
            phases[k] = canonical_angle(std::arg(rayleigh));
        }
    }
    for (auto &v : vecs) {
        fix_leading_phase(v);
    }
    if (phases[1] < phases[0]) {
        std::swap(phases[0], phases[1]);
        std::swap(vecs[0], vecs[1]);
    }
    return {phases, {BasicPureState<Scalar>(vecs[0]), BasicPureState<Scalar>(vecs[1])}};
}

/// Angular distance between the two eigenphases of u^dagger v, folded into
/// [0, pi].
template <typename Scalar>
Scalar phase_spread(const BasicUnitary2<Scalar> &u, const BasicUnitary2<Scalar> &v) {
    const auto eig = eig_unitary2(u.adjoint() * v);
    return std::abs(angle_difference(eig.phases[0], eig.phases[1]));
}

/// Schmidt decomposition of a two-qubit state through the SVD of its 2x2
/// amplitude matrix (row index = qubit 0).
template <typename Scalar>
BasicSchmidtForm<Scalar> schmidt_decompose(const BasicPureState<Scalar> &s) {
    if (s.num_qubits() != 2) {
        throw Error(ErrorCode::DimensionMismatch, "schmidt_decompose needs a two-qubit state");
    }
    Matrix2c<Scalar> amp;
    amp << s[0], s[1], s[2], s[3];
    Eigen::JacobiSVD<Matrix2c<Scalar>> svd(amp, Eigen::ComputeFullU | Eigen::ComputeFullV);
    Matrix2c<Scalar> a = svd.matrixU();
    Matrix2c<Scalar> b = svd.matrixV().conjugate();
    for (int k = 0; k < 2; ++k) {
        const int lead = std::abs(a(0, k)) > Scalar(1e-12) ? 0 : 1;
        const Complex<Scalar> w = a(lead, k) / std::abs(a(lead, k));
        // a_k (x) b_k is unchanged when a_k takes conj(w) and b_k takes w.
        a.col(k) *= std::conj(w);
        b.col(k) *= w;
    }
    const auto sv = svd.singularValues();
    return {{sv(0), sv(1)}, BasicUnitary2<Scalar>(a), BasicUnitary2<Scalar>(b)};
}

/// Extracts (theta, phi, lam, global_phase) with u = e^{i global_phase}
/// U(theta, phi, lam), theta in [0, pi], phi and lam in [0, 2pi). Diagonal
/// inputs use theta = 0 and phi = 0; antidiagonal ones use lam = 0.
template <typename Scalar>
BasicU3Params<Scalar> u3_params(const BasicUnitary2<Scalar> &u) {
    const auto &m = u.matrix();
    const Scalar half_det_phase = std::arg(m.determinant()) / 2;
    const Matrix2c<Scalar> su = std::polar(Scalar(1), -half_det_phase) * m;
    const Scalar c = std::abs(su(0, 0));
    const Scalar s = std::abs(su(1, 0));
    const Scalar cut = Scalar(1e-12);

    BasicU3Params<Scalar> p;
    p.theta = 2 * std::atan2(s, c);
    const Scalar sum = -2 * std::arg(su(0, 0));
    const Scalar diff = 2 * std::arg(su(1, 0));
    if (s <= cut) {
        p.phi = 0;
        p.lam = sum;
    } else if (c <= cut) {
        p.phi = diff;
        p.lam = 0;
    } else {
        p.phi = (sum + diff) / 2;
        p.lam = (sum - diff) / 2;
    }
    p.phi = canonical_angle(p.phi);
    p.lam = canonical_angle(p.lam);
    const Complex<Scalar> overlap = (p.matrix().adjoint() * m).trace();
    p.global_phase = canonical_angle(std::arg(overlap));
    return p;
}

template <typename Scalar>
BasicPureState<Scalar> tensor(const BasicPureState<Scalar> &a, const BasicPureState<Scalar> &b) {
    return BasicPureState<Scalar>::normalized(Eigen::kroneckerProduct(a.amplitudes(), b.amplitudes()).eval());
}

/// u (x) u (x) ... (x) u, `copies` times.
template <typename Scalar>
MatrixXc<Scalar> tensor_power(const BasicUnitary2<Scalar> &u, int copies) {
    MatrixXc<Scalar> out = MatrixXc<Scalar>::Identity(1, 1);
    for (int i = 0; i < copies; ++i) {
        out = Eigen::kroneckerProduct(out, u.matrix()).eval();
    }
    return out;
}

template <typename Scalar>
BasicPureState<Scalar> apply(const BasicUnitary2<Scalar> &u, const BasicPureState<Scalar> &s) {
    if (s.num_qubits() != 1) {
        throw Error(ErrorCode::DimensionMismatch, "single-qubit unitary applied to a multi-qubit state");
    }
    return BasicPureState<Scalar>::normalized(u.matrix() * s.amplitudes());
}

/// True when u = e^{i gamma} I within `tol`.
template <typename Scalar>
bool is_identity_up_to_phase(const BasicUnitary2<Scalar> &u, Scalar tol = Scalar(1e-12)) {
    const auto &m = u.matrix();
    return std::abs(m(0, 1)) <= tol && std::abs(m(1, 0)) <= tol && std::abs(m(0, 0) - m(1, 1)) <= tol;
}

using Unitary2 = BasicUnitary2<double>;
using PureState = BasicPureState<double>;
using U3Params = BasicU3Params<double>;
using SchmidtForm = BasicSchmidtForm<double>;
using Eigensystem = UnitaryEigensystem<double>;

}  // namespace gatedisc
