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

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "vqabench/errors.hpp"
#include "vqabench/pauli.hpp"
#include "vqabench/qasm.hpp"

namespace vqabench::sim {

/// Default memory guard: 2^26 complex amplitudes is about 1 GiB.
inline constexpr std::uint32_t kDefaultMaxQubits = 26;

/// Dense exact statevector over 2^n complex amplitudes, double precision.
/// Qubit 0 is the least-significant bit of the basis index. One instance is
/// owned by one trajectory worker; distinct instances may run concurrently.
class StateVector {
  public:
    /// |0...0>: amplitude 1 at index 0.
    static StateVector zero_state(std::uint32_t n_qubits,
                                  std::uint32_t max_qubits = kDefaultMaxQubits);

    std::uint32_t n_qubits() const noexcept { return n_qubits_; }
    std::uint64_t dimension() const noexcept { return amps_.size(); }
    std::span<const std::complex<double>> amplitudes() const noexcept { return amps_; }
    std::span<std::complex<double>> amplitudes() noexcept { return amps_; }

    /// Applies the gate sequence in order. Deterministic: identical inputs
    /// give bit-identical amplitudes.
    void apply(const qasm::BoundCircuit& c);
    void apply_gate(const qasm::BoundGate& g);

    double norm() const noexcept;

  private:
    StateVector(std::uint32_t n_qubits, std::uint64_t dim);

    void apply_matrix1(const std::complex<double> m[2][2], std::uint32_t q);
    void apply_cx(std::uint32_t control, std::uint32_t target);
    void apply_cz(std::uint32_t a, std::uint32_t b);
    void apply_swap(std::uint32_t a, std::uint32_t b);
    void apply_rzz(double theta, std::uint32_t a, std::uint32_t b);

    std::uint32_t n_qubits_;
    std::vector<std::complex<double>> amps_;
};

/// zero_state + apply in one step.
StateVector run_circuit(const qasm::BoundCircuit& c,
                        std::uint32_t max_qubits = kDefaultMaxQubits);

/// <s|H|s> evaluated term-wise without materializing operators. The imaginary
/// residue must stay below 1e-9 and is discarded. Deterministic: accumulation
/// is chunked at a fixed size so the reduction order never varies.
double expectation(const StateVector& s, const pauli::PauliHamiltonian& h);

/// The k highest-probability basis states, descending probability, ties by
/// ascending index. Bitstring text has qubit 0 as the leftmost character.
std::vector<std::pair<std::string, double>> top_bitstrings(const StateVector& s,
                                                           std::uint64_t k);

/// Text form of one basis index, qubit 0 leftmost.
std::string bitstring(std::uint64_t index, std::uint32_t n_qubits);

}  // namespace vqabench::sim
