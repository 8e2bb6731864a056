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


#include "gatedisc/circuit.hpp"

#include <cstdio>

namespace gatedisc {

std::string to_string(const Gate &gate) {
    char buf[160];
    if (const auto *u = std::get_if<U3Gate>(&gate)) {
        std::snprintf(buf, sizeof(buf), "U3(%.6f, %.6f, %.6f) q%d", u->params.theta, u->params.phi, u->params.lam,
                      u->target);
    } else if (const auto *c = std::get_if<CxGate>(&gate)) {
        std::snprintf(buf, sizeof(buf), "CX q%d -> q%d", c->control, c->target);
    } else {
        const auto &m = std::get<MeasureGate>(gate);
        std::snprintf(buf, sizeof(buf), "MEASURE q%d -> c%d", m.qubit, m.clbit);
    }
    return buf;
}

Circuit::Circuit(int num_qubits, int num_clbits)
    : num_qubits_(num_qubits), num_clbits_(num_clbits), measured_(size_t(std::max(num_qubits, 0)), false) {
    if (num_qubits < 1 || num_clbits < 0) {
        throw Error(ErrorCode::InvalidCircuit, "circuit needs at least one qubit and a non-negative clbit count");
    }
}

void Circuit::check_qubit(int q) const {
    if (q < 0 || q >= num_qubits_) {
        throw Error(ErrorCode::InvalidCircuit,
                    "qubit " + std::to_string(q) + " out of range for " + std::to_string(num_qubits_) + " qubits");
    }
    if (measured_[size_t(q)]) {
        throw Error(ErrorCode::InvalidCircuit, "qubit " + std::to_string(q) + " used after measurement");
    }
}

Circuit &Circuit::u3(const U3Params &params, int target) {
    return append(U3Gate{params, target});
}

Circuit &Circuit::unitary(const Unitary2 &u, int target) {
    if (is_identity_up_to_phase(u)) {
        check_qubit(target);
        return *this;
    }
    return append(U3Gate{u3_params(u), target});
}

Circuit &Circuit::cx(int control, int target) {
    return append(CxGate{control, target});
}

Circuit &Circuit::measure(int qubit, int clbit) {
    return append(MeasureGate{qubit, clbit});
}

Circuit &Circuit::append(const Gate &gate) {
    if (const auto *u = std::get_if<U3Gate>(&gate)) {
        check_qubit(u->target);
    } else if (const auto *c = std::get_if<CxGate>(&gate)) {
        check_qubit(c->control);
        check_qubit(c->target);
        if (c->control == c->target) {
            throw Error(ErrorCode::InvalidCircuit, "cx control equals target");
        }
    } else {
        const auto &m = std::get<MeasureGate>(gate);
        check_qubit(m.qubit);
        if (m.clbit < 0 || m.clbit >= num_clbits_) {
            throw Error(ErrorCode::InvalidCircuit, "clbit " + std::to_string(m.clbit) + " out of range");
        }
        measured_[size_t(m.qubit)] = true;
    }
    gates_.push_back(gate);
    return *this;
}

Circuit &Circuit::append(const Circuit &other) {
    if (other.num_qubits_ > num_qubits_ || other.num_clbits_ > num_clbits_) {
        throw Error(ErrorCode::InvalidCircuit, "appended circuit is wider than the destination");
    }
    for (const auto &g : other.gates_) {
        append(g);
    }
    return *this;
}

Circuit Circuit::unitary_part() const {
    Circuit out(num_qubits_, num_clbits_);
    for (const auto &g : gates_) {
        if (!std::holds_alternative<MeasureGate>(g)) {
            out.append(g);
        }
    }
    return out;
}

bool same_gates(const Circuit &a, const Circuit &b, double tol) {
    if (a.num_qubits() != b.num_qubits() || a.num_clbits() != b.num_clbits() ||
        a.gates().size() != b.gates().size()) {
        return false;
    }
    auto close = [tol](double x, double y) { return std::abs(angle_difference(x, y)) <= tol; };
    for (size_t i = 0; i < a.gates().size(); ++i) {
        const Gate &ga = a.gates()[i];
        const Gate &gb = b.gates()[i];
        if (ga.index() != gb.index()) {
            return false;
        }
        if (const auto *u = std::get_if<U3Gate>(&ga)) {
            const auto &v = std::get<U3Gate>(gb);
            if (u->target != v.target || !close(u->params.theta, v.params.theta) ||
                !close(u->params.phi, v.params.phi) || !close(u->params.lam, v.params.lam)) {
                return false;
            }
        } else if (const auto *c = std::get_if<CxGate>(&ga)) {
            const auto &d = std::get<CxGate>(gb);
            if (c->control != d.control || c->target != d.target) {
                return false;
            }
        } else {
            const auto &m = std::get<MeasureGate>(ga);
            const auto &n = std::get<MeasureGate>(gb);
            if (m.qubit != n.qubit || m.clbit != n.clbit) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace gatedisc
