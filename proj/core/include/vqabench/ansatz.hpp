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

#include "vqabench/pauli.hpp"
#include "vqabench/qasm.hpp"

namespace vqabench::ansatz {

/// QAOA over a diagonal cost Hamiltonian: p layers of phase separation
/// (e^{-i alpha H_C}) and transverse-field mixing (rx(2 beta) per qubit).
struct QaoaSpec {
    std::uint32_t layers = 1;
    pauli::PauliHamiltonian cost;
};

/// Circuit layout: H on every qubit, then per layer j the phase separator
/// driven by param_{2j} (rz/rzz/cx-ladder per term, identity terms skipped)
/// followed by rx(2 param_{2j+1}) on every qubit. Parameters are ordered
/// (alpha_0, beta_0, alpha_1, beta_1, ...), 2p in total.
qasm::ParamCircuit build_qaoa(const QaoaSpec& spec);

/// Hardware-efficient ry/cz-ring ansatz (real amplitudes).
struct HweSpec {
    std::uint32_t n_qubits = 1;
    std::uint32_t layers = 1;
};

/// Per layer: ry(param_k) on each qubit with fresh indices, then a cz ring
/// (omitted for n=1, a single cz for n=2); one final ry layer. Parameter
/// count is n_qubits * (layers + 1).
qasm::ParamCircuit build_hwe(const HweSpec& spec);

}  // namespace vqabench::ansatz
