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


// Compilation of states and measurements into {U3, CX, measure} circuits.

#pragma once

#include "gatedisc/circuit.hpp"
#include "gatedisc/discrimination.hpp"

namespace gatedisc {

/// Single U3 taking |0> to `target` up to global phase. Empty when target is
/// already |0>.
Circuit prep_1q(const PureState &target);

/// U3 loading the Schmidt weights on qubit 0, CX(0, 1), then the two local
/// Schmidt bases. Product states skip the CX.
Circuit prep_2q(const PureState &target);

/// Rotation sending m_u to |0> and m_v to |1>, followed by a measurement.
Circuit measure_basis_1q(const PureState &m_u, const PureState &m_v);

/// Unitary V with zero diagonal in V m V^dagger, for traceless m.
Unitary2 zero_diagonal_conjugation(const Eigen::Matrix2cd &m);

/// |0><0| (x) I + |1><1| (x) u on (control 0, target 1), up to global phase,
/// with at most two CX gates.
Circuit controlled_u_decompose(const Unitary2 &u);

/// Local (one-way LOCC) discrimination of two orthogonal two-qubit states,
/// compiled into a coherent circuit: s_u lands on odd-parity outcomes and
/// s_v on even-parity outcomes. `rule` must be OutcomeRule::parity().
Circuit walgate_measurement_circuit(const PureState &s_u, const PureState &s_v, const OutcomeRule &rule);

/// A scheme ready to run: one circuit per oracle choice.
struct CompiledScheme {
    Circuit first;   // oracle slots filled with u
    Circuit second;  // oracle slots filled with v
    OutcomeRule rule;
};

/// prep, oracle on every copy, local measurement. The oracle layer is merged
/// into the trailing single-qubit gates of the preparation circuit, so both
/// branches have the same gate count. Supports one or two copies.
CompiledScheme compile_parallel(const ParallelScheme &scheme, const Unitary2 &u, const Unitary2 &v);

/// prep, oracle, aux, oracle, basis rotation, measure. Identity oracles
/// compile to zero gates.
CompiledScheme compile_sequential(const SequentialScheme &scheme, const Unitary2 &u, const Unitary2 &v);

}  // namespace gatedisc
