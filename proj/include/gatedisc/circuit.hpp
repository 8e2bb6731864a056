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

#include <string>
#include <variant>
#include <vector>

#include "gatedisc/qmath.hpp"

namespace gatedisc {

struct U3Gate {
    U3Params params;
    int target = 0;
};

struct CxGate {
    int control = 0;
    int target = 1;
};

struct MeasureGate {
    int qubit = 0;
    int clbit = 0;
};

using Gate = std::variant<U3Gate, CxGate, MeasureGate>;

std::string to_string(const Gate &gate);

/// Ordered gate list over the elementary set {U3, CX, measure}. A qubit may
/// not be acted on after it has been measured.
class Circuit {
   public:
    Circuit() = default;
    Circuit(int num_qubits, int num_clbits);

    Circuit &u3(const U3Params &params, int target);
    /// Appends u as a U3 gate. Nothing is appended when u is the identity up
    /// to global phase.
    Circuit &unitary(const Unitary2 &u, int target);
    Circuit &cx(int control, int target);
    Circuit &measure(int qubit, int clbit);
    Circuit &append(const Gate &gate);
    /// Appends every gate of `other`, which must not be wider than this.
    Circuit &append(const Circuit &other);

    int num_qubits() const {
        return num_qubits_;
    }
    int num_clbits() const {
        return num_clbits_;
    }
    const std::vector<Gate> &gates() const {
        return gates_;
    }
    bool empty() const {
        return gates_.empty();
    }

    template <typename G>
    int count() const {
        int n = 0;
        for (const auto &g : gates_) {
            n += std::holds_alternative<G>(g) ? 1 : 0;
        }
        return n;
    }

    bool has_measurements() const {
        return count<MeasureGate>() > 0;
    }

    /// Copy without measure gates.
    Circuit unitary_part() const;

   private:
    void check_qubit(int q) const;

    int num_qubits_ = 0;
    int num_clbits_ = 0;
    std::vector<Gate> gates_;
    std::vector<bool> measured_;
};

/// Gate-for-gate comparison with angle tolerance `tol` (U3 angles compared
/// modulo 2pi, global phases ignored).
bool same_gates(const Circuit &a, const Circuit &b, double tol);

}  // namespace gatedisc
