// Copyright 2026 The vqabench authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "vqabench/qasm.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <optional>

namespace vqabench::qasm {

namespace {

constexpr std::array<GateInfo, 18> kGateTable{{
    {GateKind::U1, "u1", 1, 1},
    {GateKind::U2, "u2", 2, 1},
    {GateKind::U3, "u3", 3, 1},
    {GateKind::Rx, "rx", 1, 1},
    {GateKind::Ry, "ry", 1, 1},
    {GateKind::Rz, "rz", 1, 1},
    {GateKind::H, "h", 0, 1},
    {GateKind::X, "x", 0, 1},
    {GateKind::Y, "y", 0, 1},
    {GateKind::Z, "z", 0, 1},
    {GateKind::S, "s", 0, 1},
    {GateKind::Sdg, "sdg", 0, 1},
    {GateKind::T, "t", 0, 1},
    {GateKind::Tdg, "tdg", 0, 1},
    {GateKind::Cx, "cx", 0, 2},
    {GateKind::Cz, "cz", 0, 2},
    {GateKind::Swap, "swap", 0, 2},
    {GateKind::Rzz, "rzz", 1, 2},
}};

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

std::span<const GateInfo> gate_table() noexcept { return kGateTable; }

const GateInfo& gate_info(GateKind kind) noexcept {
    return kGateTable[static_cast<std::size_t>(kind)];
}

const GateInfo* find_gate(std::string_view name) noexcept {
    for (const auto& g : kGateTable) {
        if (g.name == name) return &g;
    }
    return nullptr;
}

// ---------------------------------------------------------------------------
// Expressions
// ---------------------------------------------------------------------------

ExprPtr Expr::number(double value) {
    auto e = std::shared_ptr<Expr>(new Expr());
    e->kind_ = Kind::Number;
    e->value_ = value;
    return e;
}

ExprPtr Expr::pi() {
    auto e = std::shared_ptr<Expr>(new Expr());
    e->kind_ = Kind::Pi;
    return e;
}

ExprPtr Expr::param(std::uint32_t index) {
    auto e = std::shared_ptr<Expr>(new Expr());
    e->kind_ = Kind::Param;
    e->param_ = index;
    return e;
}

ExprPtr Expr::unary(Kind kind, ExprPtr operand) {
    auto e = std::shared_ptr<Expr>(new Expr());
    e->kind_ = kind;
    e->lhs_ = std::move(operand);
    return e;
}

ExprPtr Expr::binary(Kind kind, ExprPtr lhs, ExprPtr rhs) {
    auto e = std::shared_ptr<Expr>(new Expr());
    e->kind_ = kind;
    e->lhs_ = std::move(lhs);
    e->rhs_ = std::move(rhs);
    return e;
}

double Expr::evaluate(std::span<const double> params) const {
    double v = 0.0;
    switch (kind_) {
        case Kind::Number: v = value_; break;
        case Kind::Pi: v = std::numbers::pi; break;
        case Kind::Param:
            if (param_ >= params.size()) {
                throw LengthError("parameter index " + std::to_string(param_) +
                                  " out of range for binding of length " +
                                  std::to_string(params.size()));
            }
            v = params[param_];
            break;
        case Kind::Negate: v = -lhs_->evaluate(params); break;
        case Kind::Add: v = lhs_->evaluate(params) + rhs_->evaluate(params); break;
        case Kind::Sub: v = lhs_->evaluate(params) - rhs_->evaluate(params); break;
        case Kind::Mul: v = lhs_->evaluate(params) * rhs_->evaluate(params); break;
        case Kind::Div: v = lhs_->evaluate(params) / rhs_->evaluate(params); break;
        case Kind::Sin: v = std::sin(lhs_->evaluate(params)); break;
        case Kind::Cos: v = std::cos(lhs_->evaluate(params)); break;
        case Kind::Tan: v = std::tan(lhs_->evaluate(params)); break;
        case Kind::Exp: v = std::exp(lhs_->evaluate(params)); break;
        case Kind::Ln: v = std::log(lhs_->evaluate(params)); break;
        case Kind::Sqrt: v = std::sqrt(lhs_->evaluate(params)); break;
    }
    if (!std::isfinite(v)) {
        throw NonFiniteError("expression '" + to_string() + "' evaluated to a non-finite value");
    }
    return v;
}

std::int64_t Expr::max_param_index() const noexcept {
    switch (kind_) {
        case Kind::Number:
        case Kind::Pi: return -1;
        case Kind::Param: return param_;
        default: {
            std::int64_t m = lhs_ ? lhs_->max_param_index() : -1;
            if (rhs_) m = std::max(m, rhs_->max_param_index());
            return m;
        }
    }
}

std::string Expr::to_string() const {
    switch (kind_) {
        case Kind::Number: return format_double(value_);
        case Kind::Pi: return "pi";
        case Kind::Param: return "param_" + std::to_string(param_);
        case Kind::Negate: return "(-" + lhs_->to_string() + ")";
        case Kind::Add: return "(" + lhs_->to_string() + "+" + rhs_->to_string() + ")";
        case Kind::Sub: return "(" + lhs_->to_string() + "-" + rhs_->to_string() + ")";
        case Kind::Mul: return "(" + lhs_->to_string() + "*" + rhs_->to_string() + ")";
        case Kind::Div: return "(" + lhs_->to_string() + "/" + rhs_->to_string() + ")";
        case Kind::Sin: return "sin(" + lhs_->to_string() + ")";
        case Kind::Cos: return "cos(" + lhs_->to_string() + ")";
        case Kind::Tan: return "tan(" + lhs_->to_string() + ")";
        case Kind::Exp: return "exp(" + lhs_->to_string() + ")";
        case Kind::Ln: return "ln(" + lhs_->to_string() + ")";
        case Kind::Sqrt: return "sqrt(" + lhs_->to_string() + ")";
    }
    return {};
}

bool Expr::structurally_equal(const Expr& other) const noexcept {
    if (kind_ != other.kind_) return false;
    switch (kind_) {
        case Kind::Number: return value_ == other.value_;
        case Kind::Pi: return true;
        case Kind::Param: return param_ == other.param_;
        default:
            if (static_cast<bool>(lhs_) != static_cast<bool>(other.lhs_)) return false;
            if (static_cast<bool>(rhs_) != static_cast<bool>(other.rhs_)) return false;
            if (lhs_ && !lhs_->structurally_equal(*other.lhs_)) return false;
            if (rhs_ && !rhs_->structurally_equal(*other.rhs_)) return false;
            return true;
    }
}

bool GateOp::operator==(const GateOp& other) const noexcept {
    if (kind != other.kind || qubits != other.qubits || args.size() != other.args.size()) {
        return false;
    }
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (!args[i]->structurally_equal(*other.args[i])) return false;
    }
    return true;
}

bool ParamCircuit::operator==(const ParamCircuit& other) const noexcept {
    return n_qubits == other.n_qubits && n_params == other.n_params && ops == other.ops;
}

// ---------------------------------------------------------------------------
// Lexer
// ---------------------------------------------------------------------------

namespace {

enum class Tok : std::uint8_t {
    Identifier, Number, String, LParen, RParen, LBracket, RBracket,
    Comma, Semicolon, Plus, Minus, Star, Slash, Arrow, End,
};

struct Token {
    Tok kind;
    std::string_view text;
    double number = 0.0;
    int line = 1;
    int col = 1;
};

class Lexer {
  public:
    explicit Lexer(std::string_view src) : src_(src) {}

    Token next() {
        skip_ws_and_comments();
        Token t;
        t.line = line_;
        t.col = col_;
        if (pos_ >= src_.size()) {
            t.kind = Tok::End;
            return t;
        }
        const char c = src_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
                advance();
            }
            t.kind = Tok::Identifier;
            t.text = src_.substr(start, pos_ - start);
            return t;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            const std::size_t start = pos_;
            double v = 0.0;
            auto [next, ec] = std::from_chars(src_.data() + pos_, src_.data() + src_.size(), v);
            if (ec != std::errc{} || next == src_.data() + pos_) {
                throw SyntaxError(line_, col_, "invalid numeric literal");
            }
            while (src_.data() + pos_ != next) advance();
            t.kind = Tok::Number;
            t.number = v;
            t.text = src_.substr(start, pos_ - start);
            return t;
        }
        if (c == '"') {
            advance();
            const std::size_t start = pos_;
            while (pos_ < src_.size() && src_[pos_] != '"') advance();
            if (pos_ >= src_.size()) {
                throw SyntaxError(t.line, t.col, "unterminated string literal");
            }
            t.kind = Tok::String;
            t.text = src_.substr(start, pos_ - start);
            advance();  // closing quote
            return t;
        }
        if (c == '-' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '>') {
            advance();
            advance();
            t.kind = Tok::Arrow;
            return t;
        }
        advance();
        switch (c) {
            case '(': t.kind = Tok::LParen; return t;
            case ')': t.kind = Tok::RParen; return t;
            case '[': t.kind = Tok::LBracket; return t;
            case ']': t.kind = Tok::RBracket; return t;
            case ',': t.kind = Tok::Comma; return t;
            case ';': t.kind = Tok::Semicolon; return t;
            case '+': t.kind = Tok::Plus; return t;
            case '-': t.kind = Tok::Minus; return t;
            case '*': t.kind = Tok::Star; return t;
            case '/': t.kind = Tok::Slash; return t;
            default:
                throw SyntaxError(t.line, t.col, std::string("unexpected character '") + c + "'");
        }
    }

  private:
    void advance() {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void skip_ws_and_comments() {
        while (pos_ < src_.size()) {
            const char c = src_[pos_];
            if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else if (c == '/' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '/') {
                while (pos_ < src_.size() && src_[pos_] != '\n') advance();
            } else {
                break;
            }
        }
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

std::optional<std::uint32_t> parse_param_name(std::string_view name) {
    constexpr std::string_view prefix = "param_";
    if (name.size() <= prefix.size() || name.substr(0, prefix.size()) != prefix) {
        return std::nullopt;
    }
    std::uint32_t idx = 0;
    const auto digits = name.substr(prefix.size());
    auto [next, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), idx);
    if (ec != std::errc{} || next != digits.data() + digits.size()) {
        return std::nullopt;
    }
    return idx;
}

class Parser {
  public:
    explicit Parser(std::string_view src) : lexer_(src) { consume(); }

    ParamCircuit run() {
        expect_header();
        ParamCircuit circuit;
        while (cur_.kind != Tok::End) {
            statement(circuit);
        }
        if (registers_.empty()) {
            throw SyntaxError(cur_.line, cur_.col, "no qreg declared");
        }
        circuit.n_qubits = total_qubits_;
        finalize_params(circuit);
        return circuit;
    }

  private:
    struct Register {
        std::string name;
        std::uint32_t base;
        std::uint32_t size;
    };

    void consume() { cur_ = lexer_.next(); }

    void expect(Tok kind, const char* what) {
        if (cur_.kind != kind) {
            throw SyntaxError(cur_.line, cur_.col, std::string("expected ") + what);
        }
        consume();
    }

    void expect_header() {
        if (cur_.kind != Tok::Identifier || cur_.text != "OPENQASM") {
            throw SyntaxError(cur_.line, cur_.col, "expected 'OPENQASM 2.0;' header");
        }
        consume();
        if (cur_.kind != Tok::Number || cur_.text != "2.0") {
            throw SyntaxError(cur_.line, cur_.col, "only OPENQASM version 2.0 is supported");
        }
        consume();
        expect(Tok::Semicolon, "';' after header");
    }

    void statement(ParamCircuit& circuit) {
        if (cur_.kind != Tok::Identifier) {
            throw SyntaxError(cur_.line, cur_.col, "expected a statement");
        }
        const std::string_view word = cur_.text;
        if (word == "include") {
            consume();
            if (cur_.kind != Tok::String) {
                throw SyntaxError(cur_.line, cur_.col, "expected a file name string");
            }
            if (cur_.text != "qelib1.inc") {
                throw UnsupportedFeatureError(
                    std::to_string(cur_.line) + ":" + std::to_string(cur_.col) +
                    ": file inclusion is not supported (only the virtual \"qelib1.inc\")");
            }
            consume();
            expect(Tok::Semicolon, "';'");
        } else if (word == "qreg") {
            consume();
            declare_register();
        } else if (word == "creg") {
            consume();
            // Accepted and discarded; the harness never measures.
            if (cur_.kind != Tok::Identifier) {
                throw SyntaxError(cur_.line, cur_.col, "expected a register name");
            }
            consume();
            expect(Tok::LBracket, "'['");
            if (cur_.kind != Tok::Number) {
                throw SyntaxError(cur_.line, cur_.col, "expected a register size");
            }
            consume();
            expect(Tok::RBracket, "']'");
            expect(Tok::Semicolon, "';'");
        } else if (word == "measure" || word == "barrier" || word == "if" ||
                   word == "gate" || word == "opaque" || word == "reset") {
            throw UnsupportedFeatureError(std::to_string(cur_.line) + ":" +
                                          std::to_string(cur_.col) + ": '" + std::string(word) +
                                          "' is not supported in this subset");
        } else {
            gate_application(circuit);
        }
    }

    void declare_register() {
        if (cur_.kind != Tok::Identifier) {
            throw SyntaxError(cur_.line, cur_.col, "expected a register name");
        }
        const std::string name(cur_.text);
        for (const auto& r : registers_) {
            if (r.name == name) {
                throw SyntaxError(cur_.line, cur_.col, "duplicate qreg '" + name + "'");
            }
        }
        consume();
        expect(Tok::LBracket, "'['");
        if (cur_.kind != Tok::Number || cur_.number < 1.0 ||
            cur_.number != std::floor(cur_.number)) {
            throw SyntaxError(cur_.line, cur_.col, "qreg size must be a positive integer");
        }
        const auto size = static_cast<std::uint32_t>(cur_.number);
        consume();
        expect(Tok::RBracket, "']'");
        expect(Tok::Semicolon, "';'");
        registers_.push_back({name, total_qubits_, size});
        total_qubits_ += size;
    }

    void gate_application(ParamCircuit& circuit) {
        const Token name_tok = cur_;
        const GateInfo* info = find_gate(cur_.text);
        if (info == nullptr) {
            throw UnknownGateError(std::to_string(cur_.line) + ":" + std::to_string(cur_.col) +
                                   ": unknown gate '" + std::string(cur_.text) + "'");
        }
        consume();
        GateOp op;
        op.kind = info->kind;
        if (cur_.kind == Tok::LParen) {
            consume();
            if (cur_.kind != Tok::RParen) {
                op.args.push_back(expression());
                while (cur_.kind == Tok::Comma) {
                    consume();
                    op.args.push_back(expression());
                }
            }
            expect(Tok::RParen, "')'");
        }
        if (op.args.size() != info->n_args) {
            throw ArityError(std::to_string(name_tok.line) + ":" + std::to_string(name_tok.col) +
                             ": gate '" + std::string(info->name) + "' takes " +
                             std::to_string(info->n_args) + " argument(s), got " +
                             std::to_string(op.args.size()));
        }
        op.qubits.push_back(qubit_ref());
        while (cur_.kind == Tok::Comma) {
            consume();
            op.qubits.push_back(qubit_ref());
        }
        expect(Tok::Semicolon, "';'");
        if (op.qubits.size() != info->n_qubits) {
            throw ArityError(std::to_string(name_tok.line) + ":" + std::to_string(name_tok.col) +
                             ": gate '" + std::string(info->name) + "' acts on " +
                             std::to_string(info->n_qubits) + " qubit(s), got " +
                             std::to_string(op.qubits.size()));
        }
        for (std::size_t i = 0; i < op.qubits.size(); ++i) {
            for (std::size_t j = i + 1; j < op.qubits.size(); ++j) {
                if (op.qubits[i] == op.qubits[j]) {
                    throw QubitRangeError(std::to_string(name_tok.line) + ":" +
                                          std::to_string(name_tok.col) +
                                          ": duplicate qubit operand q" +
                                          std::to_string(op.qubits[i]));
                }
            }
        }
        circuit.ops.push_back(std::move(op));
    }

    std::uint32_t qubit_ref() {
        if (cur_.kind != Tok::Identifier) {
            throw SyntaxError(cur_.line, cur_.col, "expected a qubit reference");
        }
        const Register* reg = nullptr;
        for (const auto& r : registers_) {
            if (r.name == cur_.text) {
                reg = &r;
                break;
            }
        }
        if (reg == nullptr) {
            throw SyntaxError(cur_.line, cur_.col,
                              "unknown register '" + std::string(cur_.text) + "'");
        }
        const Token reg_tok = cur_;
        consume();
        if (cur_.kind != Tok::LBracket) {
            throw SyntaxError(cur_.line, cur_.col,
                              "expected an indexed qubit reference (whole-register "
                              "broadcast is not supported)");
        }
        consume();
        if (cur_.kind != Tok::Number || cur_.number < 0.0 ||
            cur_.number != std::floor(cur_.number)) {
            throw SyntaxError(cur_.line, cur_.col, "expected a qubit index");
        }
        const auto idx = static_cast<std::uint64_t>(cur_.number);
        if (idx >= reg->size) {
            throw QubitRangeError(std::to_string(cur_.line) + ":" + std::to_string(cur_.col) +
                                  ": index " + std::to_string(idx) + " out of range for " +
                                  reg_tok_name(reg_tok) + "[" + std::to_string(reg->size) + "]");
        }
        consume();
        expect(Tok::RBracket, "']'");
        return reg->base + static_cast<std::uint32_t>(idx);
    }

    static std::string reg_tok_name(const Token& t) { return std::string(t.text); }

    // expr := term (('+'|'-') term)*
    ExprPtr expression() {
        ExprPtr e = term();
        while (cur_.kind == Tok::Plus || cur_.kind == Tok::Minus) {
            const auto k = cur_.kind == Tok::Plus ? Expr::Kind::Add : Expr::Kind::Sub;
            consume();
            e = Expr::binary(k, std::move(e), term());
        }
        return e;
    }

    // term := unary (('*'|'/') unary)*
    ExprPtr term() {
        ExprPtr e = unary();
        while (cur_.kind == Tok::Star || cur_.kind == Tok::Slash) {
            const auto k = cur_.kind == Tok::Star ? Expr::Kind::Mul : Expr::Kind::Div;
            consume();
            e = Expr::binary(k, std::move(e), unary());
        }
        return e;
    }

    ExprPtr unary() {
        if (cur_.kind == Tok::Minus) {
            consume();
            return Expr::unary(Expr::Kind::Negate, unary());
        }
        return primary();
    }

    ExprPtr primary() {
        if (cur_.kind == Tok::Number) {
            const double v = cur_.number;
            consume();
            return Expr::number(v);
        }
        if (cur_.kind == Tok::LParen) {
            consume();
            ExprPtr e = expression();
            expect(Tok::RParen, "')'");
            return e;
        }
        if (cur_.kind == Tok::Identifier) {
            const Token tok = cur_;
            if (tok.text == "pi") {
                consume();
                return Expr::pi();
            }
            if (auto idx = parse_param_name(tok.text)) {
                consume();
                seen_params_.push_back(*idx);
                return Expr::param(*idx);
            }
            static constexpr std::pair<std::string_view, Expr::Kind> kFuncs[] = {
                {"sin", Expr::Kind::Sin}, {"cos", Expr::Kind::Cos}, {"tan", Expr::Kind::Tan},
                {"exp", Expr::Kind::Exp}, {"ln", Expr::Kind::Ln},   {"sqrt", Expr::Kind::Sqrt},
            };
            for (const auto& [name, kind] : kFuncs) {
                if (tok.text == name) {
                    consume();
                    expect(Tok::LParen, "'(' after function name");
                    ExprPtr arg = expression();
                    expect(Tok::RParen, "')'");
                    return Expr::unary(kind, std::move(arg));
                }
            }
            throw SyntaxError(tok.line, tok.col,
                              "unknown identifier '" + std::string(tok.text) +
                              "' in expression (parameters are spelled param_<k>)");
        }
        throw SyntaxError(cur_.line, cur_.col, "expected an expression");
    }

    void finalize_params(ParamCircuit& circuit) const {
        if (seen_params_.empty()) {
            circuit.n_params = 0;
            return;
        }
        const std::uint32_t max_idx = *std::max_element(seen_params_.begin(), seen_params_.end());
        std::vector<bool> present(max_idx + 1, false);
        for (auto i : seen_params_) present[i] = true;
        std::string missing;
        for (std::uint32_t i = 0; i <= max_idx; ++i) {
            if (!present[i]) {
                if (!missing.empty()) missing += ", ";
                missing += "param_" + std::to_string(i);
            }
        }
        if (!missing.empty()) {
            throw GapError("parameter indices must form {0.." + std::to_string(max_idx) +
                           "} with no gaps; missing: " + missing);
        }
        circuit.n_params = max_idx + 1;
    }

    Lexer lexer_;
    Token cur_{};
    std::vector<Register> registers_;
    std::vector<std::uint32_t> seen_params_;
    std::uint32_t total_qubits_ = 0;
};

}  // namespace

ParamCircuit parse(std::string_view text) { return Parser(text).run(); }

std::string serialize(const ParamCircuit& c) {
    std::string out = "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";
    out += "qreg q[" + std::to_string(c.n_qubits) + "];\n";
    for (const auto& op : c.ops) {
        const auto& info = gate_info(op.kind);
        out += info.name;
        if (!op.args.empty()) {
            out += '(';
            for (std::size_t i = 0; i < op.args.size(); ++i) {
                if (i > 0) out += ',';
                out += op.args[i]->to_string();
            }
            out += ')';
        }
        out += ' ';
        for (std::size_t i = 0; i < op.qubits.size(); ++i) {
            if (i > 0) out += ',';
            out += "q[" + std::to_string(op.qubits[i]) + "]";
        }
        out += ";\n";
    }
    return out;
}

BoundCircuit bind(const ParamCircuit& c, std::span<const double> values) {
    if (values.size() != c.n_params) {
        throw LengthError("binding length " + std::to_string(values.size()) +
                          " does not match n_params " + std::to_string(c.n_params));
    }
    for (double v : values) {
        if (!std::isfinite(v)) {
            throw NonFiniteError("parameter values must be finite");
        }
    }
    BoundCircuit bound;
    bound.n_qubits = c.n_qubits;
    bound.gates.reserve(c.ops.size());
    for (const auto& op : c.ops) {
        BoundGate g;
        g.kind = op.kind;
        g.qubits = op.qubits;
        g.args.reserve(op.args.size());
        for (const auto& a : op.args) {
            g.args.push_back(a->evaluate(values));
        }
        bound.gates.push_back(std::move(g));
    }
    return bound;
}

}  // namespace vqabench::qasm
