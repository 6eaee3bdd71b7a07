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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vqabench/errors.hpp"
#include "vqabench/pauli.hpp"

namespace vqabench::problems {

struct Edge {
    std::uint32_t u = 0;
    std::uint32_t v = 0;
    double weight = 1.0;

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Undirected graph. Edges are stored with u < v, sorted, no duplicates and
/// no self-loops; use make_graph to validate arbitrary input.
struct Graph {
    std::uint32_t n_vertices = 0;
    std::vector<Edge> edges;

    double total_weight() const noexcept;
    friend bool operator==(const Graph&, const Graph&) = default;
};

/// Normalizes and validates an edge list (orients u < v, sorts, rejects
/// self-loops, duplicates, and out-of-range endpoints).
Graph make_graph(std::uint32_t n_vertices, std::vector<Edge> edges);

/// Erdos-Renyi graph with unit weights, deterministic in (n, p, seed).
Graph random_graph(std::uint32_t n_vertices, double edge_probability, std::uint64_t seed);

/// Edge-list text: first line `n_vertices`, then `u v [weight]` lines.
/// Blank lines and `#` comments are skipped.
Graph parse_graph(std::string_view text);
std::string serialize_graph(const Graph& g);

/// Symmetric TSP instance: distance matrix D (zero diagonal), constraint
/// penalty P, and a global scale s applied to the whole QUBO.
struct TspInstance {
    std::uint32_t n_vertices = 0;
    std::vector<double> distances;  // row-major n x n
    double penalty = 0.0;
    double scale = 1.0;

    double distance(std::uint32_t i, std::uint32_t j) const noexcept {
        return distances[static_cast<std::size_t>(i) * n_vertices + j];
    }
    double max_distance() const noexcept;

    /// n * max(D) + 1: above the largest possible tour contribution.
    double recommended_penalty() const noexcept;

    /// True when penalty < n * max(D) (below the validator bound).
    bool penalty_below_bound() const noexcept;
};

/// Validates symmetry, zero diagonal, non-negative entries, n >= 3. A
/// penalty of 0 selects recommended_penalty().
TspInstance make_tsp(std::uint32_t n_vertices, std::vector<double> distances,
                     double penalty = 0.0, double scale = 1.0);

/// Euclidean distances of points drawn uniformly in the unit square;
/// deterministic in (n, seed).
TspInstance random_tsp(std::uint32_t n_vertices, std::uint64_t seed, double scale = 1.0);

/// Text form: first line `n`, then n lines of n distances.
TspInstance parse_tsp(std::string_view text);
std::string serialize_tsp(const TspInstance& t);

/// min x^T Q x + offset over binary x, with Q symmetric in upper-triangle
/// storage (diagonal entries act linearly since x^2 = x).
struct QuboProblem {
    std::uint32_t n_vars = 0;
    std::vector<double> upper;  // row-major upper triangle incl. diagonal
    double constant_offset = 0.0;

    double q(std::uint32_t i, std::uint32_t j) const noexcept;
    double& q_ref(std::uint32_t i, std::uint32_t j) noexcept;

    /// x^T Q x + constant_offset for the assignment encoded in `bits`.
    double energy(std::uint64_t bits) const noexcept;
};

QuboProblem make_qubo(std::uint32_t n_vars);

/// H = sum_e w_e (Z_u Z_v - I)/2: the minimization form whose ground energy
/// is minus the maximum cut value.
pauli::PauliHamiltonian maxcut_hamiltonian(const Graph& g);

struct MaxCutSolution {
    double cut_value = 0.0;
    std::string partition;  // vertex 0 leftmost, fixed to side '0'
};

/// Exact maximum over all 2^(n-1) partitions, n <= 24. Ties resolve to the
/// lexicographically smallest partition string.
MaxCutSolution brute_force_maxcut(const Graph& g);

/// Reduced (n-1)^2-variable QUBO with vertex 0 fixed at position 0. For
/// every binary assignment, energy(bits) equals the scaled direct tour cost
/// with both constraint penalties expanded.
QuboProblem tsp_qubo(const TspInstance& t);

/// Flat variable index of "vertex v at position p", v and p in [1, n-1].
std::uint32_t tsp_variable_index(std::uint32_t n_vertices, std::uint32_t vertex,
                                 std::uint32_t position) noexcept;

/// Bits of the feasible encoding for a tour (tour[0] must be 0).
std::uint64_t tsp_encode_tour(std::uint32_t n_vertices, std::span<const std::uint32_t> tour);

/// Decodes bits into a tour when the assignment is feasible (one vertex per
/// position, one position per vertex); nullopt otherwise.
std::optional<std::vector<std::uint32_t>> tsp_decode_bits(std::uint32_t n_vertices,
                                                          std::uint64_t bits);

/// x_i = (1 - Z_i)/2 substitution. Basis-state energies of the result equal
/// QUBO energies bit for bit.
pauli::PauliHamiltonian qubo_to_ising(const QuboProblem& q);

struct TspSolution {
    double length = 0.0;
    std::vector<std::uint32_t> tour;  // starts at vertex 0
};

/// Exact minimum over all (n-1)! tours fixing vertex 0 first, n <= 10. Ties
/// resolve to the lexicographically smallest tour.
TspSolution brute_force_tsp(const TspInstance& t);

}  // namespace vqabench::problems
