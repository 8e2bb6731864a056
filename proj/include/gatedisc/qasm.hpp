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


// OpenQASM 2.0 export of {u3, cx, measure} circuits and a parser for the same
// subset.
//
// Emitted documents always declare `qreg q[device_qubits]` and
// `creg c[device_qubits]`; logical qubit i lives on physical qubit
// qubit_map[i] and measures into c[qubit_map[clbit]]. Angles are radians with
// 15 significant digits.

#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gatedisc/circuit.hpp"

namespace gatedisc::qasm {

std::string format_angle(double radians);

std::string emit(const Circuit &circuit, int device_qubits, std::span<const int> qubit_map);

struct Program {
    Circuit circuit;
    int device_qubits = 0;
    /// Physical qubits referenced by the program, ascending; logical qubit i
    /// is qubit_map[i].
    std::vector<int> qubit_map;
};

/// Accepts the emit grammar plus whitespace, `//` comments and angle
/// expressions over decimals, `pi`, unary minus, + - * / and parentheses.
/// Errors: SyntaxError (with line:column), UnsupportedGate, RegisterMismatch.
Program parse(std::string_view text);

/// Evaluates a standalone angle expression such as "2*pi/3".
double parse_angle(std::string_view text);

}  // namespace gatedisc::qasm
