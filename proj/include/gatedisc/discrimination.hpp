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


#pragma once

#include <array>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "gatedisc/qmath.hpp"

namespace gatedisc {

struct DistinguishabilityReport {
    double spread = 0;
    int min_parallel_copies = 0;
    bool perfectly_distinguishable = false;
};

enum class Guess { FirstGate, SecondGate, Failure };

std::string_view guess_name(Guess g);

/// Which measured bitstrings count as a vote for each gate. Bitstrings in
/// neither set are failures.
struct OutcomeRule {
    std::set<std::string> accept_u;
    std::set<std::string> accept_v;

    /// Odd parity -> first gate, even parity -> second gate (two bits).
    static OutcomeRule parity();
    /// "0" -> first gate, "1" -> second gate.
    static OutcomeRule single_bit();

    bool operator==(const OutcomeRule &) const = default;
};

Guess classify(std::string_view bits, const OutcomeRule &rule);

/// A probability vector over points on the unit circle whose weighted sum is
/// the origin.
struct PhasorWeights {
    std::vector<double> phases;
    std::vector<double> weights;

    double residual() const;
};

/// Minimal-support weights putting the origin in the convex hull of the
/// given phases: an antipodal pair if one exists, otherwise a triple.
/// Throws InvalidArgument when the origin is not reachable.
PhasorWeights solve_phasor_weights(std::span<const double> phases);

struct ParallelScheme {
    int copies = 0;
    PureState input;
    std::array<PureState, 2> measurement_states;
    OutcomeRule outcome_rule;
    PhasorWeights weights;
};

struct SequentialScheme {
    /// Real rotation in the eigenbasis of D = u^dagger v that makes
    /// X^dagger D X D traceless.
    Unitary2 rotation;
    /// The gate placed between the two oracle uses: rotation * u^dagger, so
    /// that u aux u = u X. Equals `rotation` when u is the identity.
    Unitary2 aux;
    PureState input;
    std::array<PureState, 2> measurement_states;
    OutcomeRule outcome_rule;
    /// X^dagger D X D with D = u^dagger v, in the computational basis.
    Unitary2 twisted;
    double spread = 0;
};

/// Largest copy count synthesize_parallel will build.
inline constexpr int kMaxParallelCopies = 3;

DistinguishabilityReport analyze(const Unitary2 &u, const Unitary2 &v);

ParallelScheme synthesize_parallel(const Unitary2 &u, const Unitary2 &v);

/// One-auxiliary-gate sequential scheme: the circuit is u, aux, u (or v, aux,
/// v) applied to `input`. Requires spread >= pi/2.
SequentialScheme synthesize_sequential(const Unitary2 &u, const Unitary2 &v);

}  // namespace gatedisc
