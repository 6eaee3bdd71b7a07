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

#include "vqabench/statevector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>

namespace vqabench::sim {

namespace {

using cplx = std::complex<double>;

constexpr double kInvSqrt2 = 0.70710678118654752440;

// Reduction chunk for expectation sums; fixed so the accumulation order is
// part of the contract.
constexpr std::uint64_t kChunk = 4096;

}  // namespace

StateVector::StateVector(std::uint32_t n_qubits, std::uint64_t dim)
    : n_qubits_(n_qubits), amps_(dim) {}

StateVector StateVector::zero_state(std::uint32_t n_qubits, std::uint32_t max_qubits) {
    if (n_qubits < 1 || n_qubits > max_qubits || max_qubits > 62) {
        throw SizeError("qubit count " + std::to_string(n_qubits) +
                        " outside supported range [1, " + std::to_string(max_qubits) + "]");
    }
    StateVector s(n_qubits, 1ULL << n_qubits);
    s.amps_[0] = 1.0;
    return s;
}

void StateVector::apply(const qasm::BoundCircuit& c) {
    if (c.n_qubits != n_qubits_) {
        throw DimensionMismatch("circuit acts on " + std::to_string(c.n_qubits) +
                                " qubits, state has " + std::to_string(n_qubits_));
    }
    for (const auto& g : c.gates) {
        apply_gate(g);
    }
}

void StateVector::apply_gate(const qasm::BoundGate& g) {
    using qasm::GateKind;
    for (auto q : g.qubits) {
        if (q >= n_qubits_) {
            throw DimensionMismatch("gate qubit " + std::to_string(q) + " out of range");
        }
    }
    const cplx i1(0.0, 1.0);
    switch (g.kind) {
        case GateKind::H: {
            const cplx m[2][2] = {{kInvSqrt2, kInvSqrt2}, {kInvSqrt2, -kInvSqrt2}};
            apply_matrix1(m, g.qubits[0]);
            return;
        }
        case GateKind::X: {
            const cplx m[2][2] = {{0, 1}, {1, 0}};
            apply_matrix1(m, g.qubits[0]);
            return;
        }
        case GateKind::Y: {
            const cplx m[2][2] = {{0, -i1}, {i1, 0}};
            apply_matrix1(m, g.qubits[0]);
            return;
        }
        case GateKind::Z: {
            const cplx m[2][2] = {{1, 0}, {0, -1}};
            apply_matrix1(m, g.qubits[0]);
            return;
        }
        case GateKind::S: {
            const cplx m[2][2] = {{1, 0}, {0, i1}};
            apply_matrix1(m, g.qubits[0]);
            return;
        }
        case GateKind::Sdg: {
            const cplx m[2][2] = {{1, 0}, {0, -i1}};
            apply_matrix1(m, g.qubits[0]);
            return;
        }
        case GateKind::T: {
            const cplx m[2][2] = {{1, 0}, {0, std::polar(1.0, std::numbers::pi / 4)}};
            apply_matrix1(m, g.qubits[0]);
            return;
        }
        case GateKind::Tdg: {
            const cplx m[2][2] = {{1, 0}, {0, std::polar(1.0, -std::numbers::pi / 4)}};
            apply_matrix1(m, g.qubits[0]);
            return;
        }
        case GateKind::Rx: {
            const double t = g.args[0] / 2;
            const cplx m[2][2] = {{std::cos(t), -i1 * std::sin(t)},
                                  {-i1 * std::sin(t), std::cos(t)}};
            apply_matrix1(m, g.qubits[0]);
            return;
        }
        case GateKind::Ry: {
            const double t = g.args[0] / 2;
            const cplx m[2][2] = {{std::cos(t), -std::sin(t)}, {std::sin(t), std::cos(t)}};
            apply_matrix1(m, g.qubits[0]);
            return;
        }
        case GateKind::Rz: {
            const double t = g.args[0] / 2;
            const cplx m[2][2] = {{std::polar(1.0, -t), 0}, {0, std::polar(1.0, t)}};
            apply_matrix1(m, g.qubits[0]);
            return;
        }
        case GateKind::U1: {
            const cplx m[2][2] = {{1, 0}, {0, std::polar(1.0, g.args[0])}};
            apply_matrix1(m, g.qubits[0]);
            return;
        }
        case GateKind::U2: {
            const double phi = g.args[0], lam = g.args[1];
            const cplx m[2][2] = {
                {kInvSqrt2, -kInvSqrt2 * std::polar(1.0, lam)},
                {kInvSqrt2 * std::polar(1.0, phi), kInvSqrt2 * std::polar(1.0, phi + lam)}};
            apply_matrix1(m, g.qubits[0]);
            return;
        }
        case GateKind::U3: {
            const double th = g.args[0] / 2, phi = g.args[1], lam = g.args[2];
            const cplx m[2][2] = {
                {std::cos(th), -std::sin(th) * std::polar(1.0, lam)},
                {std::sin(th) * std::polar(1.0, phi),
                 std::cos(th) * std::polar(1.0, phi + lam)}};
            apply_matrix1(m, g.qubits[0]);
            return;
        }
        case GateKind::Cx:
            apply_cx(g.qubits[0], g.qubits[1]);
            return;
        case GateKind::Cz:
            apply_cz(g.qubits[0], g.qubits[1]);
            return;
        case GateKind::Swap:
            apply_swap(g.qubits[0], g.qubits[1]);
            return;
        case GateKind::Rzz:
            apply_rzz(g.args[0], g.qubits[0], g.qubits[1]);
            return;
    }
}

void StateVector::apply_matrix1(const cplx m[2][2], std::uint32_t q) {
    const std::uint64_t stride = 1ULL << q;
    const std::uint64_t dim = amps_.size();
    for (std::uint64_t base = 0; base < dim; base += 2 * stride) {
        for (std::uint64_t i = base; i < base + stride; ++i) {
            const cplx a0 = amps_[i];
            const cplx a1 = amps_[i + stride];
            amps_[i] = m[0][0] * a0 + m[0][1] * a1;
            amps_[i + stride] = m[1][0] * a0 + m[1][1] * a1;
        }
    }
}

void StateVector::apply_cx(std::uint32_t control, std::uint32_t target) {
    const std::uint64_t cmask = 1ULL << control;
    const std::uint64_t tmask = 1ULL << target;
    const std::uint64_t dim = amps_.size();
    for (std::uint64_t i = 0; i < dim; ++i) {
        if ((i & cmask) && !(i & tmask)) {
            std::swap(amps_[i], amps_[i | tmask]);
        }
    }
}

void StateVector::apply_cz(std::uint32_t a, std::uint32_t b) {
    const std::uint64_t mask = (1ULL << a) | (1ULL << b);
    const std::uint64_t dim = amps_.size();
    for (std::uint64_t i = 0; i < dim; ++i) {
        if ((i & mask) == mask) {
            amps_[i] = -amps_[i];
        }
    }
}

void StateVector::apply_swap(std::uint32_t a, std::uint32_t b) {
    const std::uint64_t amask = 1ULL << a;
    const std::uint64_t bmask = 1ULL << b;
    const std::uint64_t dim = amps_.size();
    for (std::uint64_t i = 0; i < dim; ++i) {
        if ((i & amask) && !(i & bmask)) {
            std::swap(amps_[i], amps_[(i & ~amask) | bmask]);
        }
    }
}

void StateVector::apply_rzz(double theta, std::uint32_t a, std::uint32_t b) {
    // diag(e^{-it}, e^{+it}, e^{+it}, e^{-it}) on the (a,b) subspace, t = theta/2.
    const cplx equal = std::polar(1.0, -theta / 2);
    const cplx differ = std::polar(1.0, theta / 2);
    const std::uint64_t amask = 1ULL << a;
    const std::uint64_t bmask = 1ULL << b;
    const std::uint64_t dim = amps_.size();
    for (std::uint64_t i = 0; i < dim; ++i) {
        const bool ba = (i & amask) != 0;
        const bool bb = (i & bmask) != 0;
        amps_[i] *= (ba == bb) ? equal : differ;
    }
}

double StateVector::norm() const noexcept {
    double s = 0.0;
    for (const auto& a : amps_) {
        s += std::norm(a);
    }
    return std::sqrt(s);
}

StateVector run_circuit(const qasm::BoundCircuit& c, std::uint32_t max_qubits) {
    StateVector s = StateVector::zero_state(c.n_qubits, max_qubits);
    s.apply(c);
    return s;
}

double expectation(const StateVector& s, const pauli::PauliHamiltonian& h) {
    if (h.n_qubits() != s.n_qubits()) {
        throw DimensionMismatch("Hamiltonian acts on " + std::to_string(h.n_qubits()) +
                                " qubits, state has " + std::to_string(s.n_qubits()));
    }
    const auto amps = s.amplitudes();
    const std::uint64_t dim = amps.size();
    constexpr cplx phases[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    cplx total = 0.0;
    for (const auto& t : h.terms()) {
        const std::uint64_t x = t.word.x;
        const std::uint64_t z = t.word.z;
        if (x == 0) {
            // Diagonal term: sign (-1)^{popcount(z & idx)} on |a_idx|^2.
            double term = 0.0;
            for (std::uint64_t chunk = 0; chunk < dim; chunk += kChunk) {
                const std::uint64_t end = std::min(dim, chunk + kChunk);
                double part = 0.0;
                for (std::uint64_t b = chunk; b < end; ++b) {
                    const double p = std::norm(amps[b]);
                    part += (std::popcount(z & b) & 1) ? -p : p;
                }
                term += part;
            }
            total += t.coefficient * term;
        } else {
            const cplx omega = phases[std::popcount(x & z) & 3];
            cplx term = 0.0;
            for (std::uint64_t chunk = 0; chunk < dim; chunk += kChunk) {
                const std::uint64_t end = std::min(dim, chunk + kChunk);
                cplx part = 0.0;
                for (std::uint64_t b = chunk; b < end; ++b) {
                    const cplx v = std::conj(amps[b ^ x]) * amps[b];
                    part += (std::popcount(z & b) & 1) ? -v : v;
                }
                term += part;
            }
            total += t.coefficient * omega * term;
        }
    }
    if (std::abs(total.imag()) >= 1e-9) {
        throw NonFiniteError("expectation imaginary residue " +
                             std::to_string(total.imag()) + " exceeds 1e-9");
    }
    return total.real();
}

std::string bitstring(std::uint64_t index, std::uint32_t n_qubits) {
    std::string s(n_qubits, '0');
    for (std::uint32_t q = 0; q < n_qubits; ++q) {
        if ((index >> q) & 1ULL) s[q] = '1';
    }
    return s;
}

std::vector<std::pair<std::string, double>> top_bitstrings(const StateVector& s,
                                                           std::uint64_t k) {
    const auto amps = s.amplitudes();
    const std::uint64_t dim = amps.size();
    k = std::min(k, dim);
    std::vector<std::uint64_t> order(dim);
    for (std::uint64_t i = 0; i < dim; ++i) order[i] = i;
    std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k),
                      order.end(), [&](std::uint64_t a, std::uint64_t b) {
                          const double pa = std::norm(amps[a]);
                          const double pb = std::norm(amps[b]);
                          return pa != pb ? pa > pb : a < b;
                      });
    std::vector<std::pair<std::string, double>> out;
    out.reserve(k);
    for (std::uint64_t i = 0; i < k; ++i) {
        out.emplace_back(bitstring(order[i], s.n_qubits()), std::norm(amps[order[i]]));
    }
    return out;
}

}  // namespace vqabench::sim
