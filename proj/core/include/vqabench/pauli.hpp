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

#include <Eigen/Core>
#include <compare>
#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "vqabench/errors.hpp"

namespace vqabench::pauli {

/// Qubit-count cap of the bit-mask word representation.
inline constexpr std::uint32_t kMaxQubits = 64;

/// Dense-oracle size guard (a 2^14 x 2^14 complex matrix is already 4 GiB).
inline constexpr std::uint32_t kMaxDenseQubits = 14;

/// Size guard for the exact diagonal bitstring sweep.
inline constexpr std::uint32_t kMaxDiagonalSweepQubits = 24;

/// One n-qubit Pauli word in binary-symplectic form. Bit q of x/z selects the
/// X/Z part on qubit q; x=z=1 on a qubit is Y, the all-zero word is the
/// identity. Qubit 0 is the least-significant bit of a basis index.
struct PauliWord {
    std::uint32_t n_qubits = 0;
    std::uint64_t x = 0;
    std::uint64_t z = 0;

    bool x_bit(std::uint32_t q) const noexcept { return (x >> q) & 1ULL; }
    bool z_bit(std::uint32_t q) const noexcept { return (z >> q) & 1ULL; }
    bool is_identity() const noexcept { return x == 0 && z == 0; }
    bool is_diagonal() const noexcept { return x == 0; }

    /// Number of qubits carrying a non-identity factor.
    std::uint32_t weight() const noexcept;

    /// Text form such as "IZXY" with qubit 0 leftmost.
    std::string to_string() const;

    friend bool operator==(const PauliWord&, const PauliWord&) = default;
};

struct PauliTerm {
    double coefficient = 0.0;
    PauliWord word;

    friend bool operator==(const PauliTerm&, const PauliTerm&) = default;
};

/// Weighted sum of Pauli words, the observable of the cost function. Held in
/// canonical form: terms sorted by word, duplicate words merged, terms with
/// exactly zero coefficient dropped. Immutable after construction and safe to
/// share across threads.
class PauliHamiltonian {
  public:
    PauliHamiltonian() = default;

    /// Canonicalizes `terms`; throws on qubit-count mismatches or non-finite
    /// coefficients.
    PauliHamiltonian(std::uint32_t n_qubits, std::vector<PauliTerm> terms);

    std::uint32_t n_qubits() const noexcept { return n_qubits_; }
    const std::vector<PauliTerm>& terms() const noexcept { return terms_; }

    /// True when every word has x == 0 (Z/identity terms only).
    bool is_diagonal() const noexcept;

    /// Coefficient of the identity word (0 when absent).
    double identity_coefficient() const noexcept;

    /// Energy of the computational basis state |bits> for diagonal
    /// Hamiltonians; throws NonDiagonalError otherwise.
    double diagonal_energy(std::uint64_t bits) const;

    friend bool operator==(const PauliHamiltonian&, const PauliHamiltonian&) = default;

  private:
    std::uint32_t n_qubits_ = 0;
    std::vector<PauliTerm> terms_;
};

/// Parses the flat numeric Hamiltonian IR: [n, (coeff, x_1..x_n, z_1..z_n) x m]
/// as whitespace-separated decimals, or as a JSON array of numbers with the
/// same layout (detected by a leading '[').
PauliHamiltonian parse_hamiltonian(std::string_view text);

/// Whitespace text form of the IR, 17-significant-digit decimals, one term
/// per line. serialize(parse(s)) is byte-stable on canonical input.
std::string serialize_hamiltonian(const PauliHamiltonian& h);

/// JSON-array form of the IR, identical layout.
std::string serialize_hamiltonian_json(const PauliHamiltonian& h);

/// Dense-matrix oracle: sum_k c_k P_k as a 2^n x 2^n matrix, qubit 0 the
/// least-significant index bit. Intended for tests and small oracles.
Eigen::MatrixXcd dense_matrix(const PauliHamiltonian& h);

/// Minimum eigenvalue. Diagonal Hamiltonians are swept exactly over all 2^n
/// basis energies (n <= 24); anything else goes through the dense
/// eigendecomposition (n <= 14).
double ground_energy(const PauliHamiltonian& h);

}  // namespace vqabench::pauli
