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
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <optional>
#include <set>

namespace gatedisc::qasm {

namespace {

enum class Tok { Ident, Number, String, Symbol, End };

struct Token {
    Tok kind = Tok::End;
    std::string text;
    double value = 0;
    int line = 1;
    int col = 1;
};

class Lexer {
   public:
    explicit Lexer(std::string_view src) : src_(src) {
    }

    std::vector<Token> run() {
        std::vector<Token> out;
        while (true) {
            skip_space();
            Token t;
            t.line = line_;
            t.col = col_;
            if (pos_ >= src_.size()) {
                out.push_back(t);
                return out;
            }
            const char c = src_[pos_];
            if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                t.kind = Tok::Ident;
                while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
                    t.text += advance();
                }
            } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
                lex_number(t);
            } else if (c == '"') {
                t.kind = Tok::String;
                advance();
                while (pos_ < src_.size() && src_[pos_] != '"' && src_[pos_] != '\n') {
                    t.text += advance();
                }
                if (pos_ >= src_.size() || src_[pos_] != '"') {
                    fail(t, "unterminated string");
                }
                advance();
            } else if (c == '-' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '>') {
                t.kind = Tok::Symbol;
                t.text = "->";
                advance();
                advance();
            } else if (std::string_view(";,()[]+-*/").find(c) != std::string_view::npos) {
                t.kind = Tok::Symbol;
                t.text = std::string(1, advance());
            } else {
                fail(t, std::string("unexpected character '") + c + "'");
            }
            out.push_back(std::move(t));
        }
    }

    [[noreturn]] static void fail(const Token &at, const std::string &what) {
        throw Error(ErrorCode::SyntaxError, std::to_string(at.line) + ":" + std::to_string(at.col) + ": " + what);
    }

   private:
    char advance() {
        const char c = src_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }

    void skip_space() {
        while (pos_ < src_.size()) {
            const char c = src_[pos_];
            if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else if (c == '/' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '/') {
                while (pos_ < src_.size() && src_[pos_] != '\n') {
                    advance();
                }
            } else {
                return;
            }
        }
    }

    void lex_number(Token &t) {
        t.kind = Tok::Number;
        auto digits = [&] {
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                t.text += advance();
            }
        };
        digits();
        if (pos_ < src_.size() && src_[pos_] == '.') {
            t.text += advance();
            digits();
        }
        if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
            t.text += advance();
            if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) {
                t.text += advance();
            }
            digits();
        }
        const char *first = t.text.data();
        const char *last = first + t.text.size();
        auto [end, ec] = std::from_chars(first, last, t.value);
        if (ec != std::errc() || end != last) {
            fail(t, "malformed number '" + t.text + "'");
        }
    }

    std::string_view src_;
    size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

struct Register {
    std::string name;
    int size = -1;
};

struct Statement {
    enum Kind { U3, CX, Measure } kind;
    double angles[3] = {0, 0, 0};
    int a = 0;
    int b = 0;
    Token at;
};

class Parser {
   public:
    explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {
    }

    Program program() {
        expect_ident("OPENQASM");
        const Token version = next();
        if (version.kind != Tok::Number || version.value != 2.0) {
            Lexer::fail(version, "only OPENQASM 2.0 is supported");
        }
        expect_symbol(";");
        while (peek_ident("include")) {
            next();
            const Token file = next();
            if (file.kind != Tok::String) {
                Lexer::fail(file, "expected a quoted file name");
            }
            expect_symbol(";");
        }
        while (peek().kind != Tok::End) {
            statement();
        }
        if (qreg_.size < 0 || creg_.size < 0) {
            throw Error(ErrorCode::RegisterMismatch, "program must declare one qreg and one creg");
        }
        if (qreg_.size != creg_.size) {
            throw Error(ErrorCode::RegisterMismatch, "qreg and creg sizes differ");
        }
        return build();
    }

    double lone_expression() {
        const double v = expr();
        if (peek().kind != Tok::End) {
            Lexer::fail(peek(), "trailing input after expression");
        }
        return v;
    }

   private:
    const Token &peek() const {
        return toks_[pos_];
    }

    Token next() {
        Token t = toks_[pos_];
        if (t.kind != Tok::End) {
            ++pos_;
        }
        return t;
    }

    bool peek_ident(std::string_view s) const {
        return peek().kind == Tok::Ident && peek().text == s;
    }

    bool peek_symbol(std::string_view s) const {
        return peek().kind == Tok::Symbol && peek().text == s;
    }

    void expect_ident(std::string_view s) {
        const Token t = next();
        if (t.kind != Tok::Ident || t.text != s) {
            Lexer::fail(t, "expected '" + std::string(s) + "'");
        }
    }

    void expect_symbol(std::string_view s) {
        const Token t = next();
        if (t.kind != Tok::Symbol || t.text != s) {
            Lexer::fail(t, "expected '" + std::string(s) + "'" + (t.kind == Tok::End ? " before end of input" : ""));
        }
    }

    int integer() {
        const Token t = next();
        if (t.kind != Tok::Number || t.text.find_first_not_of("0123456789") != std::string::npos) {
            Lexer::fail(t, "expected a non-negative integer");
        }
        return std::stoi(t.text);
    }

    void declaration(Register &reg, const char *what) {
        if (reg.size >= 0) {
            throw Error(ErrorCode::RegisterMismatch, std::string("second ") + what + " declaration");
        }
        const Token name = next();
        if (name.kind != Tok::Ident) {
            Lexer::fail(name, "expected a register name");
        }
        reg.name = name.text;
        expect_symbol("[");
        reg.size = integer();
        expect_symbol("]");
        expect_symbol(";");
        if (reg.size < 1) {
            throw Error(ErrorCode::RegisterMismatch, std::string(what) + " must have at least one bit");
        }
    }

    int operand(const Register &reg, const char *what) {
        if (reg.size < 0) {
            throw Error(ErrorCode::RegisterMismatch, std::string(what) + " used before declaration");
        }
        const Token name = next();
        if (name.kind != Tok::Ident) {
            Lexer::fail(name, std::string("expected a ") + what + " operand");
        }
        if (name.text != reg.name) {
            throw Error(ErrorCode::RegisterMismatch, "unknown register '" + name.text + "'");
        }
        expect_symbol("[");
        const int index = integer();
        expect_symbol("]");
        if (index >= reg.size) {
            throw Error(ErrorCode::RegisterMismatch, name.text + "[" + std::to_string(index) + "] is out of range");
        }
        return index;
    }

    void statement() {
        const Token head = next();
        if (head.kind != Tok::Ident) {
            Lexer::fail(head, "expected a statement");
        }
        Statement st{Statement::U3, {0, 0, 0}, 0, 0, head};
        if (head.text == "qreg") {
            declaration(qreg_, "qreg");
            return;
        }
        if (head.text == "creg") {
            declaration(creg_, "creg");
            return;
        }
        if (head.text == "u3") {
            expect_symbol("(");
            for (int i = 0; i < 3; ++i) {
                if (i > 0) {
                    expect_symbol(",");
                }
                st.angles[i] = expr();
            }
            expect_symbol(")");
            st.a = operand(qreg_, "qubit");
        } else if (head.text == "cx") {
            st.kind = Statement::CX;
            st.a = operand(qreg_, "qubit");
            expect_symbol(",");
            st.b = operand(qreg_, "qubit");
        } else if (head.text == "measure") {
            st.kind = Statement::Measure;
            st.a = operand(qreg_, "qubit");
            expect_symbol("->");
            st.b = operand(creg_, "clbit");
        } else {
            throw Error(ErrorCode::UnsupportedGate, std::to_string(head.line) + ":" + std::to_string(head.col) +
                                                        ": gate '" + head.text + "' is not supported");
        }
        expect_symbol(";");
        statements_.push_back(st);
    }

    double expr() {
        double v = term();
        while (peek_symbol("+") || peek_symbol("-")) {
            const bool plus = next().text == "+";
            const double rhs = term();
            v = plus ? v + rhs : v - rhs;
        }
        return v;
    }

    double term() {
        double v = unary();
        while (peek_symbol("*") || peek_symbol("/")) {
            const Token op = next();
            const double rhs = unary();
            v = op.text == "*" ? v * rhs : v / rhs;
            if (!std::isfinite(v)) {
                Lexer::fail(op, "angle expression is not finite");
            }
        }
        return v;
    }

    double unary() {
        if (peek_symbol("-")) {
            next();
            return -unary();
        }
        if (peek_symbol("+")) {
            next();
            return unary();
        }
        return primary();
    }

    double primary() {
        const Token t = next();
        if (t.kind == Tok::Number) {
            return t.value;
        }
        if (t.kind == Tok::Ident && t.text == "pi") {
            return std::numbers::pi;
        }
        if (t.kind == Tok::Symbol && t.text == "(") {
            const double v = expr();
            expect_symbol(")");
            return v;
        }
        Lexer::fail(t, t.kind == Tok::End ? "unexpected end of input in expression"
                                           : "unexpected '" + t.text + "' in expression");
    }

    Program build() const {
        std::set<int> used;
        for (const auto &st : statements_) {
            used.insert(st.a);
            if (st.kind != Statement::U3) {
                used.insert(st.b);
            }
        }
        Program p;
        p.device_qubits = qreg_.size;
        p.qubit_map.assign(used.begin(), used.end());
        if (p.qubit_map.empty()) {
            p.qubit_map.push_back(0);
        }
        auto logical = [&](int physical) {
            return int(std::lower_bound(p.qubit_map.begin(), p.qubit_map.end(), physical) - p.qubit_map.begin());
        };
        const int width = int(p.qubit_map.size());
        p.circuit = Circuit(width, width);
        for (const auto &st : statements_) {
            try {
                switch (st.kind) {
                    case Statement::U3:
                        p.circuit.u3({st.angles[0], st.angles[1], st.angles[2], 0}, logical(st.a));
                        break;
                    case Statement::CX:
                        p.circuit.cx(logical(st.a), logical(st.b));
                        break;
                    case Statement::Measure:
                        p.circuit.measure(logical(st.a), logical(st.b));
                        break;
                }
            } catch (const Error &e) {
                Lexer::fail(st.at, e.what());
            }
        }
        return p;
    }

    std::vector<Token> toks_;
    size_t pos_ = 0;
    Register qreg_;
    Register creg_;
    std::vector<Statement> statements_;
};

}  // namespace

std::string format_angle(double radians) {
    if (!std::isfinite(radians)) {
        throw Error(ErrorCode::InvalidArgument, "non-finite angle");
    }
    if (radians == 0) {
        return "0";
    }
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.15g", radians);
    return buf;
}

std::string emit(const Circuit &circuit, int device_qubits, std::span<const int> qubit_map) {
    if (device_qubits < circuit.num_qubits()) {
        throw Error(ErrorCode::MapOutOfRange, "device has fewer qubits than the circuit");
    }
    if (int(qubit_map.size()) != circuit.num_qubits()) {
        throw Error(ErrorCode::MapOutOfRange, "qubit_map must list one physical qubit per circuit qubit");
    }
    std::set<int> seen;
    for (int p : qubit_map) {
        if (p < 0 || p >= device_qubits || !seen.insert(p).second) {
            throw Error(ErrorCode::MapOutOfRange, "qubit_map entry " + std::to_string(p) + " is out of range or repeated");
        }
    }
    auto phys = [&](int logical) {
        if (logical < 0 || logical >= int(qubit_map.size())) {
            throw Error(ErrorCode::MapOutOfRange, "clbit " + std::to_string(logical) + " has no physical slot");
        }
        return std::to_string(qubit_map[size_t(logical)]);
    };

    std::string out = "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";
    out += "qreg q[" + std::to_string(device_qubits) + "];\n";
    out += "creg c[" + std::to_string(device_qubits) + "];\n";
    for (const auto &g : circuit.gates()) {
        if (const auto *u = std::get_if<U3Gate>(&g)) {
            out += "u3(" + format_angle(u->params.theta) + "," + format_angle(u->params.phi) + "," +
                   format_angle(u->params.lam) + ") q[" + phys(u->target) + "];\n";
        } else if (const auto *c = std::get_if<CxGate>(&g)) {
            out += "cx q[" + phys(c->control) + "],q[" + phys(c->target) + "];\n";
        } else {
            const auto &m = std::get<MeasureGate>(g);
            out += "measure q[" + phys(m.qubit) + "] -> c[" + phys(m.clbit) + "];\n";
        }
    }
    return out;
}

Program parse(std::string_view text) {
    return Parser(Lexer(text).run()).program();
}

double parse_angle(std::string_view text) {
    return Parser(Lexer(text).run()).lone_expression();
}

}  // namespace gatedisc::qasm
