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

#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vqabench/errors.hpp"

namespace vqabench::qasm {

// Supported gate set. `rzz` is first-class (no cx-rz-cx expansion) so that
// gate counts stay deterministic across serializations.
enum class GateKind : std::uint8_t {
    U1, U2, U3, Rx, Ry, Rz, H, X, Y, Z, S, Sdg, T, Tdg, Cx, Cz, Swap, Rzz,
};

struct GateInfo {
    GateKind kind;
    std::string_view name;
    std::uint32_t n_args;
    std::uint32_t n_qubits;
};

std::span<const GateInfo> gate_table() noexcept;
const GateInfo& gate_info(GateKind kind) noexcept;
const GateInfo* find_gate(std::string_view name) noexcept;

/// Immutable parameter-expression tree: decimal literals, `pi`, `param_<k>`
/// references, unary minus, + - * /, and sin/cos/tan/exp/ln/sqrt.
class Expr;
using ExprPtr = std::shared_ptr<const Expr>;

class Expr {
  public:
    enum class Kind : std::uint8_t {
        Number, Pi, Param, Negate, Add, Sub, Mul, Div, Sin, Cos, Tan, Exp, Ln, Sqrt,
    };

    static ExprPtr number(double value);
    static ExprPtr pi();
    static ExprPtr param(std::uint32_t index);
    static ExprPtr unary(Kind kind, ExprPtr operand);           // Negate or a function
    static ExprPtr binary(Kind kind, ExprPtr lhs, ExprPtr rhs); // Add/Sub/Mul/Div

    Kind kind() const noexcept { return kind_; }
    double number_value() const noexcept { return value_; }
    std::uint32_t param_index() const noexcept { return param_; }
    const ExprPtr& lhs() const noexcept { return lhs_; }
    const ExprPtr& rhs() const noexcept { return rhs_; }

    /// Evaluates with the given parameter binding; throws NonFiniteError if
    /// the result is NaN/Inf (e.g. division by zero).
    double evaluate(std::span<const double> params) const;

    /// Largest parameter index referenced, or -1 if none.
    std::int64_t max_param_index() const noexcept;

    /// Fully parenthesized text form; reparsing yields a structurally equal tree.
    std::string to_string() const;

    bool structurally_equal(const Expr& other) const noexcept;

  private:
    Expr() = default;
    Kind kind_ = Kind::Number;
    double value_ = 0.0;
    std::uint32_t param_ = 0;
    ExprPtr lhs_;
    ExprPtr rhs_;
};

struct GateOp {
    GateKind kind;
    std::vector<ExprPtr> args;
    std::vector<std::uint32_t> qubits;

    bool operator==(const GateOp& other) const noexcept;
};

/// Parameterized circuit over one flat qubit index space. Immutable after
/// parse; binding is pure, so one circuit can serve many workers.
struct ParamCircuit {
    std::uint32_t n_qubits = 0;
    std::uint32_t n_params = 0;
    std::vector<GateOp> ops;

    bool operator==(const ParamCircuit& other) const noexcept;
};

struct BoundGate {
    GateKind kind;
    std::vector<double> args;
    std::vector<std::uint32_t> qubits;
};

/// Fully numeric gate sequence, ready for the statevector engine.
struct BoundCircuit {
    std::uint32_t n_qubits = 0;
    std::vector<BoundGate> gates;
};

/// Parses the supported OpenQASM 2.0 subset. `include "qelib1.inc";` enables
/// nothing extra (the gate table is always available) and is not a file read.
/// Multiple qreg declarations concatenate into one index space in declaration
/// order; creg declarations and comments are ignored. measure/barrier/if/
/// reset/opaque and user gate definitions are rejected with a positioned
/// diagnostic. Parameters are bare identifiers `param_<k>`; the referenced
/// indices must form {0..P-1} with no gaps.
ParamCircuit parse(std::string_view text);

/// Emits the subset grammar; parse(serialize(c)) is structurally equal to c.
std::string serialize(const ParamCircuit& c);

/// Evaluates every gate argument against `values` (length must equal
/// n_params, all finite). Pure: the input circuit is not modified.
BoundCircuit bind(const ParamCircuit& c, std::span<const double> values);

}  // namespace vqabench::qasm
