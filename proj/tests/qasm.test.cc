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


#include "gatedisc/qasm.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include "gtest/gtest.h"

#include "gatedisc/synthesis.hpp"
#include "test_util.test.h"

using namespace gatedisc;
using namespace gatedisc::testing;

namespace {

Circuit bell_circuit() {
    Eigen::Vector4cd bell(1, 0, 0, 1);
    Circuit c(2, 2);
    c.append(prep_2q(PureState::normalized(Eigen::VectorXcd(bell))));
    c.measure(0, 0).measure(1, 1);
    return c;
}

std::string read_file(const std::string &path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// Increasing physical positions for `width` logical qubits on `device`.
std::vector<int> increasing_map(std::mt19937_64 &rng, int width, int device) {
    std::vector<int> all(static_cast<size_t>(device));
    std::iota(all.begin(), all.end(), 0);
    std::shuffle(all.begin(), all.end(), rng);
    std::vector<int> map(all.begin(), all.begin() + width);
    std::sort(map.begin(), map.end());
    return map;
}

}  // namespace

TEST(qasm, format_angle) {
    EXPECT_EQ(qasm::format_angle(0), "0");
    EXPECT_EQ(qasm::format_angle(M_PI / 2), "1.5707963267949");
    EXPECT_EQ(qasm::format_angle(M_PI), "3.14159265358979");
    EXPECT_EQ(qasm::format_angle(0.001234), "0.001234");
    EXPECT_EQ(qasm::format_angle(-2.5), "-2.5");
}

TEST(qasm, empty_circuit) {
    const std::vector<int> map = {0};
    EXPECT_EQ(qasm::emit(Circuit(1, 1), 5, map),
              "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[5];\ncreg c[5];\n");
}

TEST(qasm, bell_golden) {
    const std::vector<int> map = {0, 1};
    const std::string text = qasm::emit(bell_circuit(), 5, map);
    EXPECT_EQ(text, read_file(std::string(GATEDISC_GOLDEN_DIR) + "/bell_5q.qasm"));
}

TEST(qasm, mapped_registers) {
    const std::vector<int> map = {3, 1};
    const std::string text = qasm::emit(bell_circuit(), 5, map);
    EXPECT_NE(text.find("cx q[3],q[1];"), std::string::npos);
    EXPECT_NE(text.find("measure q[3] -> c[3];"), std::string::npos);
    EXPECT_NE(text.find("measure q[1] -> c[1];"), std::string::npos);

    const qasm::Program p = qasm::parse(text);
    EXPECT_EQ(p.device_qubits, 5);
    EXPECT_EQ(p.qubit_map, (std::vector<int>{1, 3}));
    // Logical order follows physical order, so the qubits come back swapped.
    const auto &cx = std::get<CxGate>(p.circuit.gates()[1]);
    EXPECT_EQ(cx.control, 1);
    EXPECT_EQ(cx.target, 0);
}

TEST(qasm, emit_errors) {
    const Circuit c = bell_circuit();
    const std::vector<int> short_map = {0};
    const std::vector<int> repeated = {1, 1};
    const std::vector<int> outside = {0, 5};
    const std::vector<int> ok = {0, 1};
    EXPECT_EQ(error_of([&] { qasm::emit(c, 5, short_map); }), ErrorCode::MapOutOfRange);
    EXPECT_EQ(error_of([&] { qasm::emit(c, 5, repeated); }), ErrorCode::MapOutOfRange);
    EXPECT_EQ(error_of([&] { qasm::emit(c, 5, outside); }), ErrorCode::MapOutOfRange);
    EXPECT_EQ(error_of([&] { qasm::emit(c, 1, ok); }), ErrorCode::MapOutOfRange);
}

TEST(qasm, parse_expressions) {
    const qasm::Program p = qasm::parse(
        "OPENQASM 2.0;\n"
        "include \"qelib1.inc\";  // standard gates\n"
        "qreg q[2]; creg c[2];\n"
        "u3( pi/2 , 0,pi ) q[0];\n"
        "u3(-pi/4, 2*pi/3, (1+2)*0.5) q[1];\n"
        "cx q[0] , q[1];\n"
        "measure q[0] -> c[0];\n"
        "measure q[1] -> c[1];\n");
    ASSERT_EQ(p.circuit.gates().size(), 5u);
    const auto &a = std::get<U3Gate>(p.circuit.gates()[0]);
    EXPECT_DOUBLE_EQ(a.params.theta, M_PI / 2);
    EXPECT_DOUBLE_EQ(a.params.lam, M_PI);
    const auto &b = std::get<U3Gate>(p.circuit.gates()[1]);
    EXPECT_DOUBLE_EQ(b.params.theta, -M_PI / 4);
    EXPECT_DOUBLE_EQ(b.params.phi, 2 * M_PI / 3);
    EXPECT_DOUBLE_EQ(b.params.lam, 1.5);
    EXPECT_DOUBLE_EQ(qasm::parse_angle("2*pi/3"), 2 * M_PI / 3);
    EXPECT_DOUBLE_EQ(qasm::parse_angle("-(1.5e-1)"), -0.15);
}

TEST(qasm, parse_errors) {
    const std::string head = "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[2];\ncreg c[2];\n";
    EXPECT_EQ(error_of([&] { qasm::parse(head + "cz q[0],q[1];\n"); }), ErrorCode::UnsupportedGate);
    EXPECT_EQ(error_of([&] { qasm::parse(head + "u3(1,2) q[0];\n"); }), ErrorCode::SyntaxError);
    EXPECT_EQ(error_of([&] { qasm::parse(head + "u3(1,2,3) q[0]\n"); }), ErrorCode::SyntaxError);
    EXPECT_EQ(error_of([&] { qasm::parse(head + "u3(1,2,3) q[2];\n"); }), ErrorCode::RegisterMismatch);
    EXPECT_EQ(error_of([&] { qasm::parse(head + "u3(1,2,3) r[0];\n"); }), ErrorCode::RegisterMismatch);
    EXPECT_EQ(error_of([] { qasm::parse("OPENQASM 2.0;\nqreg q[2];\ncreg c[3];\n"); }), ErrorCode::RegisterMismatch);
    EXPECT_EQ(error_of([] { qasm::parse("OPENQASM 3.0;\n"); }), ErrorCode::SyntaxError);
    EXPECT_EQ(error_of([&] { qasm::parse(head + "cx q[0],q[0];\n"); }), ErrorCode::SyntaxError);
    EXPECT_EQ(error_of([] { qasm::parse_angle("2*"); }), ErrorCode::SyntaxError);

    try {
        qasm::parse(head + "u3(1,2,3) q[0];\nu3(1,,3) q[1];\n");
        FAIL() << "expected a syntax error";
    } catch (const Error &e) {
        EXPECT_NE(std::string(e.what()).find("6:6"), std::string::npos) << e.what();
    }
}

TEST(qasm, phase_pair_sequential_export) {
    const Unitary2 r(phase_r());
    const Unitary2 id = Unitary2::identity();
    const CompiledScheme s = compile_sequential(synthesize_sequential(r, id), r, id);
    const std::vector<int> map = {0};
    const std::string text = qasm::emit(s.first, 5, map);
    size_t u3 = 0, measure = 0;
    for (size_t pos = 0; (pos = text.find("u3(", pos)) != std::string::npos; ++pos) {
        ++u3;
    }
    for (size_t pos = 0; (pos = text.find("measure", pos)) != std::string::npos; ++pos) {
        ++measure;
    }
    EXPECT_EQ(u3, 5u);
    EXPECT_EQ(measure, 1u);
}

TEST(qasm, round_trip_random_circuits) {
    auto &rng = shared_rng();
    std::uniform_int_distribution<int> width(1, 3);
    std::uniform_int_distribution<int> length(0, 12);
    for (int k = 0; k < 1000; ++k) {
        const int n = width(rng);
        const int device = n + 2;
        const Circuit c = random_circuit(rng, n, length(rng), true);
        const std::vector<int> map = increasing_map(rng, n, device);
        const std::string text = qasm::emit(c, device, map);
        EXPECT_EQ(text, qasm::emit(c, device, map));
        const qasm::Program p = qasm::parse(text);
        EXPECT_EQ(p.device_qubits, device);
        EXPECT_EQ(p.qubit_map, map);
        EXPECT_TRUE(same_gates(c, p.circuit, 1e-12)) << text;
    }
}
