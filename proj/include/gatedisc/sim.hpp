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


// State-vector simulation with shot sampling and Monte-Carlo Pauli noise.

#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "gatedisc/circuit.hpp"
#include "gatedisc/discrimination.hpp"

namespace gatedisc {

struct NoiseModel {
    double p1 = 0;           // Pauli error after each U3
    double p2 = 0;           // Pauli error on each qubit after each CX
    double readout_eps = 0;  // flip of each measured bit

    bool noiseless() const {
        return p1 == 0 && p2 == 0 && readout_eps == 0;
    }
    /// Throws InvalidArgument unless every rate is in [0, 1].
    void validate() const;

    bool operator==(const NoiseModel &) const = default;
};

/// Tally of measured bitstrings. Bit i of a key is clbit i, left to right.
struct ShotCounts {
    int total = 0;
    std::map<std::string, int> counts;

    int get(const std::string &bits) const {
        auto it = counts.find(bits);
        return it == counts.end() ? 0 : it->second;
    }
};

/// Counter-based generator: the stream for (seed, index) is independent of
/// every other index, so shots may be drawn in any order.
class SplitMix64 {
   public:
    SplitMix64(std::uint64_t seed, std::uint64_t index);

    std::uint64_t next();
    /// Uniform in [0, 1) with 53 random bits.
    double uniform();

   private:
    std::uint64_t state_;
};

std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b);

/// Exact unitary action. The circuit must not measure.
PureState apply_circuit(const PureState &state, const Circuit &circuit);

/// Unitary of the non-measure part of `circuit`.
Eigen::MatrixXcd circuit_unitary(const Circuit &circuit);

/// Samples `shots` runs. Each shot draws from the (seed, shot) stream: one
/// uniform per noise slot (a U3 target, or each CX qubit), one for the
/// outcome, one per measured bit for readout.
ShotCounts run_shots(const Circuit &circuit, int shots, const NoiseModel &noise, std::uint64_t seed);

int count_successes(const ShotCounts &counts, const OutcomeRule &rule, Guess truth);

double success_probability(const Circuit &circuit, const OutcomeRule &rule, Guess truth, int shots,
                           const NoiseModel &noise, std::uint64_t seed);

}  // namespace gatedisc
