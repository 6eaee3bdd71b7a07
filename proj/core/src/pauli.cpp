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

#include "vqabench/pauli.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>

#include "json.hpp"

namespace vqabench::pauli {

namespace {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

bool word_less(const PauliWord& a, const PauliWord& b) {
    return a.x != b.x ? a.x < b.x : a.z < b.z;
}

}  // namespace

std::uint32_t PauliWord::weight() const noexcept {
    return static_cast<std::uint32_t>(std::popcount(x | z));
}

std::string PauliWord::to_string() const {
    std::string s;
    s.reserve(n_qubits);
    for (std::uint32_t q = 0; q < n_qubits; ++q) {
        const bool xb = x_bit(q), zb = z_bit(q);
        s += xb ? (zb ? 'Y' : 'X') : (zb ? 'Z' : 'I');
    }
    return s;
}

PauliHamiltonian::PauliHamiltonian(std::uint32_t n_qubits, std::vector<PauliTerm> terms)
    : n_qubits_(n_qubits), terms_(std::move(terms)) {
    if (n_qubits_ == 0 || n_qubits_ > kMaxQubits) {
        throw QubitCountError("qubit count must be in [1, " + std::to_string(kMaxQubits) +
                              "], got " + std::to_string(n_qubits_));
    }
    const std::uint64_t live = n_qubits_ == 64 ? ~0ULL : ((1ULL << n_qubits_) - 1);
    for (auto& t : terms_) {
        if (t.word.n_qubits != n_qubits_) {
            throw DimensionMismatch("term word has " + std::to_string(t.word.n_qubits) +
                                    " qubits in a " + std::to_string(n_qubits_) +
                                    "-qubit Hamiltonian");
        }
        if ((t.word.x & ~live) != 0 || (t.word.z & ~live) != 0) {
            throw QubitRangeError("word bits set beyond qubit count");
        }
        if (!std::isfinite(t.coefficient)) {
            throw NumberError("non-finite coefficient");
        }
    }
    std::sort(terms_.begin(), terms_.end(),
              [](const PauliTerm& a, const PauliTerm& b) { return word_less(a.word, b.word); });
    std::vector<PauliTerm> merged;
    merged.reserve(terms_.size());
    for (const auto& t : terms_) {
        if (!merged.empty() && merged.back().word == t.word) {
            merged.back().coefficient += t.coefficient;
        } else {
            merged.push_back(t);
        }
    }
    // Exact-zero drop only; canonical form must be bit-stable.
    std::erase_if(merged, [](const PauliTerm& t) { return t.coefficient == 0.0; });
    terms_ = std::move(merged);
}

bool PauliHamiltonian::is_diagonal() const noexcept {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const PauliTerm& t) { return t.word.is_diagonal(); });
}

double PauliHamiltonian::identity_coefficient() const noexcept {
    for (const auto& t : terms_) {
        if (t.word.is_identity()) return t.coefficient;
    }
    return 0.0;
}

double PauliHamiltonian::diagonal_energy(std::uint64_t bits) const {
    double e = 0.0;
    for (const auto& t : terms_) {
        if (!t.word.is_diagonal()) {
            throw NonDiagonalError("diagonal_energy on a non-diagonal Hamiltonian");
        }
        e += (std::popcount(t.word.z & bits) & 1) ? -t.coefficient : t.coefficient;
    }
    return e;
}

namespace {

PauliHamiltonian from_flat_values(const std::vector<double>& values) {
    if (values.empty()) {
        throw LengthError("empty Hamiltonian IR");
    }
    const double n_raw = values[0];
    if (!std::isfinite(n_raw) || n_raw < 1.0 || n_raw != std::floor(n_raw)) {
        throw QubitCountError("qubit count must be a positive integer, got " +
                              format_double(n_raw));
    }
    if (n_raw > static_cast<double>(kMaxQubits)) {
        throw QubitCountError("qubit count " + format_double(n_raw) + " exceeds the " +
                              std::to_string(kMaxQubits) + "-qubit cap");
    }
    const auto n = static_cast<std::uint32_t>(n_raw);
    const std::size_t block = 1 + 2 * static_cast<std::size_t>(n);
    const std::size_t rest = values.size() - 1;
    if (rest % block != 0) {
        throw LengthError("value count " + std::to_string(values.size()) +
                          " is not 1 + m*(1+2n) for n=" + std::to_string(n));
    }
    const std::size_t m = rest / block;
    std::vector<PauliTerm> terms;
    terms.reserve(m);
    std::size_t pos = 1;
    for (std::size_t k = 0; k < m; ++k) {
        PauliTerm t;
        t.coefficient = values[pos++];
        if (!std::isfinite(t.coefficient)) {
            throw NumberError("non-finite coefficient in term " + std::to_string(k));
        }
        t.word.n_qubits = n;
        for (std::uint32_t q = 0; q < n; ++q) {
            const double b = values[pos++];
            if (b != 0.0 && b != 1.0) {
                throw BitError("x bit must be 0 or 1, got " + format_double(b));
            }
            if (b == 1.0) t.word.x |= 1ULL << q;
        }
        for (std::uint32_t q = 0; q < n; ++q) {
            const double b = values[pos++];
            if (b != 0.0 && b != 1.0) {
                throw BitError("z bit must be 0 or 1, got " + format_double(b));
            }
            if (b == 1.0) t.word.z |= 1ULL << q;
        }
        terms.push_back(t);
    }
    return PauliHamiltonian(n, std::move(terms));
}

std::vector<double> parse_number_list(std::string_view text) {
    std::vector<double> values;
    const char* p = text.data();
    const char* end = p + text.size();
    while (p != end) {
        if (std::isspace(static_cast<unsigned char>(*p))) {
            ++p;
            continue;
        }
        double v = 0.0;
        auto [next, ec] = std::from_chars(p, end, v);
        if (ec != std::errc{} || next == p) {
            throw NumberError(std::string("invalid number near '") +
                              std::string(p, std::min<std::size_t>(8, end - p)) + "'");
        }
        values.push_back(v);
        p = next;
    }
    return values;
}

std::vector<double> parse_json_array(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw NumberError(std::string("invalid JSON Hamiltonian IR: ") + e.what());
    }
    if (!j.is_array()) {
        throw NumberError("JSON Hamiltonian IR must be a single array of numbers");
    }
    std::vector<double> values;
    values.reserve(j.size());
    for (const auto& v : j) {
        if (!v.is_number()) {
            throw NumberError("JSON Hamiltonian IR must contain only numbers");
        }
        values.push_back(v.get<double>());
    }
    return values;
}

}  // namespace

PauliHamiltonian parse_hamiltonian(std::string_view text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '[') {
        return from_flat_values(parse_json_array(text));
    }
    return from_flat_values(parse_number_list(text));
}

std::string serialize_hamiltonian(const PauliHamiltonian& h) {
    std::string out = std::to_string(h.n_qubits());
    out += '\n';
    for (const auto& t : h.terms()) {
        out += format_double(t.coefficient);
        for (std::uint32_t q = 0; q < h.n_qubits(); ++q) {
            out += t.word.x_bit(q) ? " 1" : " 0";
        }
        for (std::uint32_t q = 0; q < h.n_qubits(); ++q) {
            out += t.word.z_bit(q) ? " 1" : " 0";
        }
        out += '\n';
    }
    return out;
}

std::string serialize_hamiltonian_json(const PauliHamiltonian& h) {
    nlohmann::json arr = nlohmann::json::array();
    arr.push_back(static_cast<double>(h.n_qubits()));
    for (const auto& t : h.terms()) {
        arr.push_back(t.coefficient);
        for (std::uint32_t q = 0; q < h.n_qubits(); ++q) {
            arr.push_back(t.word.x_bit(q) ? 1.0 : 0.0);
        }
        for (std::uint32_t q = 0; q < h.n_qubits(); ++q) {
            arr.push_back(t.word.z_bit(q) ? 1.0 : 0.0);
        }
    }
    return arr.dump();
}

Eigen::MatrixXcd dense_matrix(const PauliHamiltonian& h) {
    if (h.n_qubits() > kMaxDenseQubits) {
        throw SizeError("dense oracle capped at " + std::to_string(kMaxDenseQubits) +
                        " qubits, got " + std::to_string(h.n_qubits()));
    }
    const std::uint64_t dim = 1ULL << h.n_qubits();
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim),
                                                static_cast<Eigen::Index>(dim));
    // P|b> = i^{|x&z|} (-1)^{popcount(z&b)} |b^x>; x=z=1 on a qubit is Y.
    constexpr std::complex<double> phases[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    for (const auto& t : h.terms()) {
        const std::complex<double> omega =
            phases[std::popcount(t.word.x & t.word.z) & 3] * t.coefficient;
        for (std::uint64_t b = 0; b < dim; ++b) {
            const double sign = (std::popcount(t.word.z & b) & 1) ? -1.0 : 1.0;
            m(static_cast<Eigen::Index>(b ^ t.word.x), static_cast<Eigen::Index>(b)) +=
                omega * sign;
        }
    }
    return m;
}

double ground_energy(const PauliHamiltonian& h) {
    if (h.is_diagonal()) {
        if (h.n_qubits() > kMaxDiagonalSweepQubits) {
            throw SizeError("diagonal sweep capped at " +
                            std::to_string(kMaxDiagonalSweepQubits) + " qubits, got " +
                            std::to_string(h.n_qubits()));
        }
        const std::uint64_t dim = 1ULL << h.n_qubits();
        double best = std::numeric_limits<double>::infinity();
        for (std::uint64_t b = 0; b < dim; ++b) {
            best = std::min(best, h.diagonal_energy(b));
        }
        return best;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(dense_matrix(h),
                                                           Eigen::EigenvaluesOnly);
    return solver.eigenvalues()(0);
}

}  // namespace vqabench::pauli
