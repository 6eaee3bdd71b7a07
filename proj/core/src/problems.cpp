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

#include "vqabench/problems.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "vqabench/rng.hpp"

namespace vqabench::problems {

namespace {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

double Graph::total_weight() const noexcept {
    double s = 0.0;
    for (const auto& e : edges) s += e.weight;
    return s;
}

Graph make_graph(std::uint32_t n_vertices, std::vector<Edge> edges) {
    if (n_vertices == 0) {
        throw EmptyGraphError("graph needs at least one vertex");
    }
    for (auto& e : edges) {
        if (e.u == e.v) {
            throw QubitRangeError("self-loop on vertex " + std::to_string(e.u));
        }
        if (e.u >= n_vertices || e.v >= n_vertices) {
            throw QubitRangeError("edge endpoint out of range");
        }
        if (!std::isfinite(e.weight)) {
            throw NumberError("non-finite edge weight");
        }
        if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
        return a.u != b.u ? a.u < b.u : a.v < b.v;
    });
    for (std::size_t i = 1; i < edges.size(); ++i) {
        if (edges[i].u == edges[i - 1].u && edges[i].v == edges[i - 1].v) {
            throw NumberError("duplicate edge (" + std::to_string(edges[i].u) + "," +
                              std::to_string(edges[i].v) + ")");
        }
    }
    return Graph{n_vertices, std::move(edges)};
}

Graph random_graph(std::uint32_t n_vertices, double edge_probability, std::uint64_t seed) {
    if (n_vertices < 2) {
        throw EmptyGraphError("random graph needs n >= 2");
    }
    if (!(edge_probability > 0.0 && edge_probability <= 1.0)) {
        throw ConfigError("edge probability must be in (0, 1]");
    }
    rng::SplitMix64 gen(rng::mix64(seed));
    std::vector<Edge> edges;
    for (std::uint32_t u = 0; u < n_vertices; ++u) {
        for (std::uint32_t v = u + 1; v < n_vertices; ++v) {
            if (gen.next_double() < edge_probability) {
                edges.push_back({u, v, 1.0});
            }
        }
    }
    return Graph{n_vertices, std::move(edges)};
}

Graph parse_graph(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::vector<std::string> lines;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream probe(line);
        std::string tok;
        if (probe >> tok) lines.push_back(line);
    }
    if (lines.empty()) {
        throw NumberError("empty graph file");
    }
    std::istringstream head(lines[0]);
    std::int64_t n = 0;
    if (!(head >> n) || n < 1) {
        throw NumberError("graph file must start with the vertex count");
    }
    std::vector<Edge> edges;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        std::istringstream ls(lines[i]);
        std::int64_t u = 0, v = 0;
        double w = 1.0;
        if (!(ls >> u >> v)) {
            throw NumberError("bad edge line: '" + lines[i] + "'");
        }
        ls >> w;
        if (u < 0 || v < 0) {
            throw QubitRangeError("negative vertex index");
        }
        edges.push_back({static_cast<std::uint32_t>(u), static_cast<std::uint32_t>(v), w});
    }
    return make_graph(static_cast<std::uint32_t>(n), std::move(edges));
}

std::string serialize_graph(const Graph& g) {
    std::string out = std::to_string(g.n_vertices) + "\n";
    for (const auto& e : g.edges) {
        out += std::to_string(e.u) + " " + std::to_string(e.v) + " " +
               format_double(e.weight) + "\n";
    }
    return out;
}

double TspInstance::max_distance() const noexcept {
    double m = 0.0;
    for (double d : distances) m = std::max(m, d);
    return m;
}

double TspInstance::recommended_penalty() const noexcept {
    return n_vertices * max_distance() + 1.0;
}

bool TspInstance::penalty_below_bound() const noexcept {
    return penalty < n_vertices * max_distance();
}

TspInstance make_tsp(std::uint32_t n_vertices, std::vector<double> distances,
                     double penalty, double scale) {
    if (n_vertices < 3) {
        throw SizeError("TSP instance needs n >= 3");
    }
    if (distances.size() != static_cast<std::size_t>(n_vertices) * n_vertices) {
        throw LengthError("distance matrix must be n x n");
    }
    if (!(scale > 0.0)) {
        throw ConfigError("scale must be positive");
    }
    for (std::uint32_t i = 0; i < n_vertices; ++i) {
        for (std::uint32_t j = 0; j < n_vertices; ++j) {
            const double d = distances[static_cast<std::size_t>(i) * n_vertices + j];
            if (!std::isfinite(d) || d < 0.0) {
                throw NumberError("distances must be finite and non-negative");
            }
            if (i == j && d != 0.0) {
                throw NumberError("distance matrix diagonal must be zero");
            }
            if (d != distances[static_cast<std::size_t>(j) * n_vertices + i]) {
                throw NumberError("distance matrix must be symmetric");
            }
        }
    }
    TspInstance t{n_vertices, std::move(distances), penalty, scale};
    if (penalty <= 0.0) {
        t.penalty = t.recommended_penalty();
    }
    return t;
}

TspInstance random_tsp(std::uint32_t n_vertices, std::uint64_t seed, double scale) {
    if (n_vertices < 3) {
        throw SizeError("TSP instance needs n >= 3");
    }
    rng::SplitMix64 gen(rng::mix64(seed ^ 0x7453714571357175ULL));
    std::vector<double> xs(n_vertices), ys(n_vertices);
    for (std::uint32_t i = 0; i < n_vertices; ++i) {
        xs[i] = gen.next_double();
        ys[i] = gen.next_double();
    }
    std::vector<double> d(static_cast<std::size_t>(n_vertices) * n_vertices, 0.0);
    for (std::uint32_t i = 0; i < n_vertices; ++i) {
        for (std::uint32_t j = i + 1; j < n_vertices; ++j) {
            const double dist = std::hypot(xs[i] - xs[j], ys[i] - ys[j]);
            d[static_cast<std::size_t>(i) * n_vertices + j] = dist;
            d[static_cast<std::size_t>(j) * n_vertices + i] = dist;
        }
    }
    return make_tsp(n_vertices, std::move(d), 0.0, scale);
}

TspInstance parse_tsp(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::int64_t n = 0;
    if (!(in >> n) || n < 3) {
        throw NumberError("TSP file must start with n >= 3");
    }
    std::vector<double> d(static_cast<std::size_t>(n) * n, 0.0);
    for (auto& v : d) {
        if (!(in >> v)) {
            throw LengthError("TSP file must contain n x n distances");
        }
    }
    return make_tsp(static_cast<std::uint32_t>(n), std::move(d));
}

std::string serialize_tsp(const TspInstance& t) {
    std::string out = std::to_string(t.n_vertices) + "\n";
    for (std::uint32_t i = 0; i < t.n_vertices; ++i) {
        for (std::uint32_t j = 0; j < t.n_vertices; ++j) {
            if (j > 0) out += ' ';
            out += format_double(t.distance(i, j));
        }
        out += '\n';
    }
    return out;
}

double QuboProblem::q(std::uint32_t i, std::uint32_t j) const noexcept {
    if (i > j) std::swap(i, j);
    return upper[static_cast<std::size_t>(i) * n_vars - i * (i + 1ULL) / 2 + j];
}

double& QuboProblem::q_ref(std::uint32_t i, std::uint32_t j) noexcept {
    if (i > j) std::swap(i, j);
    return upper[static_cast<std::size_t>(i) * n_vars - i * (i + 1ULL) / 2 + j];
}

double QuboProblem::energy(std::uint64_t bits) const noexcept {
    // x^T Q x with symmetric Q: diagonal once, off-diagonal twice.
    double e = constant_offset;
    for (std::uint32_t i = 0; i < n_vars; ++i) {
        if (!((bits >> i) & 1ULL)) continue;
        e += q(i, i);
        for (std::uint32_t j = i + 1; j < n_vars; ++j) {
            if ((bits >> j) & 1ULL) {
                e += 2.0 * q(i, j);
            }
        }
    }
    return e;
}

QuboProblem make_qubo(std::uint32_t n_vars) {
    if (n_vars == 0) {
        throw SizeError("QUBO needs at least one variable");
    }
    QuboProblem q;
    q.n_vars = n_vars;
    q.upper.assign(static_cast<std::size_t>(n_vars) * (n_vars + 1) / 2, 0.0);
    return q;
}

pauli::PauliHamiltonian maxcut_hamiltonian(const Graph& g) {
    if (g.n_vertices == 0 || g.edges.empty()) {
        throw EmptyGraphError("MaxCut needs a non-empty graph");
    }
    std::vector<pauli::PauliTerm> terms;
    terms.reserve(g.edges.size() + 1);
    for (const auto& e : g.edges) {
        pauli::PauliWord w;
        w.n_qubits = g.n_vertices;
        w.z = (1ULL << e.u) | (1ULL << e.v);
        terms.push_back({0.5 * e.weight, w});
    }
    pauli::PauliWord id;
    id.n_qubits = g.n_vertices;
    terms.push_back({-0.5 * g.total_weight(), id});
    return pauli::PauliHamiltonian(g.n_vertices, std::move(terms));
}

MaxCutSolution brute_force_maxcut(const Graph& g) {
    if (g.n_vertices == 0 || g.edges.empty()) {
        throw EmptyGraphError("MaxCut needs a non-empty graph");
    }
    if (g.n_vertices > 24) {
        throw SizeError("brute-force MaxCut capped at 24 vertices");
    }
    const std::uint32_t n = g.n_vertices;
    // Vertex 0 fixed on side 0; mask bit j is the side of vertex j+1. The
    // tie-break key reverses the bits so that the lexicographically smallest
    // partition string wins.
    auto tie_key = [n](std::uint64_t mask) {
        std::uint64_t key = 0;
        for (std::uint32_t j = 0; j + 1 < n; ++j) {
            key = (key << 1) | ((mask >> j) & 1ULL);
        }
        return key;
    };
    const std::uint64_t count = 1ULL << (n - 1);
    double best = -1.0;
    std::uint64_t best_mask = 0;
    std::uint64_t best_key = 0;
    for (std::uint64_t mask = 0; mask < count; ++mask) {
        double cut = 0.0;
        const std::uint64_t sides = mask << 1;  // vertex j side at bit j
        for (const auto& e : g.edges) {
            if (((sides >> e.u) & 1ULL) != ((sides >> e.v) & 1ULL)) {
                cut += e.weight;
            }
        }
        if (cut > best) {
            best = cut;
            best_mask = mask;
            best_key = tie_key(mask);
        } else if (cut == best) {
            const std::uint64_t key = tie_key(mask);
            if (key < best_key) {
                best_mask = mask;
                best_key = key;
            }
        }
    }
    std::string partition(n, '0');
    for (std::uint32_t j = 0; j + 1 < n; ++j) {
        if ((best_mask >> j) & 1ULL) partition[j + 1] = '1';
    }
    return {best, partition};
}

std::uint32_t tsp_variable_index(std::uint32_t n_vertices, std::uint32_t vertex,
                                 std::uint32_t position) noexcept {
    return (vertex - 1) * (n_vertices - 1) + (position - 1);
}

QuboProblem tsp_qubo(const TspInstance& t) {
    const std::uint32_t n = t.n_vertices;
    const double s = t.scale;
    const double P = t.penalty;
    QuboProblem q = make_qubo((n - 1) * (n - 1));

    // Vertex 0 is fixed at position 0; positions are cyclic mod n. Folding
    // the fixed assignments into the reduced variables leaves: linear
    // distance terms to/from vertex 0 at positions 1 and n-1, quadratic
    // distance terms between consecutive free positions, and the two
    // exactly-one penalty expansions.
    q.constant_offset = s * 2.0 * P * (n - 1);

    for (std::uint32_t v = 1; v < n; ++v) {
        for (std::uint32_t p = 1; p < n; ++p) {
            const std::uint32_t a = tsp_variable_index(n, v, p);
            q.q_ref(a, a) += s * (-2.0 * P);
            if (p == 1) q.q_ref(a, a) += s * t.distance(0, v);
            if (p == n - 1) q.q_ref(a, a) += s * t.distance(v, 0);
        }
    }
    // Same vertex at two positions / same position for two vertices: the
    // squared constraint contributes 2P per unordered pair, split P+P over
    // the symmetric matrix entries.
    for (std::uint32_t v = 1; v < n; ++v) {
        for (std::uint32_t p = 1; p < n; ++p) {
            for (std::uint32_t p2 = p + 1; p2 < n; ++p2) {
                q.q_ref(tsp_variable_index(n, v, p), tsp_variable_index(n, v, p2)) += s * P;
            }
        }
    }
    for (std::uint32_t p = 1; p < n; ++p) {
        for (std::uint32_t v = 1; v < n; ++v) {
            for (std::uint32_t v2 = v + 1; v2 < n; ++v2) {
                q.q_ref(tsp_variable_index(n, v, p), tsp_variable_index(n, v2, p)) += s * P;
            }
        }
    }
    // Path-length coupling between positions p and p+1 (both free); the
    // unordered product carries D(v, v2), split over the two entries.
    for (std::uint32_t p = 1; p + 1 < n; ++p) {
        for (std::uint32_t v = 1; v < n; ++v) {
            for (std::uint32_t v2 = 1; v2 < n; ++v2) {
                if (v == v2) continue;
                const std::uint32_t a = tsp_variable_index(n, v, p);
                const std::uint32_t b = tsp_variable_index(n, v2, p + 1);
                q.q_ref(a, b) += s * 0.5 * t.distance(v, v2);
            }
        }
    }
    return q;
}

std::uint64_t tsp_encode_tour(std::uint32_t n_vertices, std::span<const std::uint32_t> tour) {
    if (tour.size() != n_vertices || tour[0] != 0) {
        throw ConfigError("tour must visit all vertices and start at vertex 0");
    }
    std::uint64_t bits = 0;
    for (std::uint32_t p = 1; p < n_vertices; ++p) {
        bits |= 1ULL << tsp_variable_index(n_vertices, tour[p], p);
    }
    return bits;
}

std::optional<std::vector<std::uint32_t>> tsp_decode_bits(std::uint32_t n_vertices,
                                                          std::uint64_t bits) {
    const std::uint32_t m = n_vertices - 1;
    std::vector<std::uint32_t> tour(n_vertices, 0);
    std::vector<bool> vertex_used(n_vertices, false);
    vertex_used[0] = true;
    for (std::uint32_t p = 1; p < n_vertices; ++p) {
        std::uint32_t found = 0;
        std::uint32_t vertex = 0;
        for (std::uint32_t v = 1; v < n_vertices; ++v) {
            if ((bits >> tsp_variable_index(n_vertices, v, p)) & 1ULL) {
                ++found;
                vertex = v;
            }
        }
        if (found != 1 || vertex_used[vertex]) {
            return std::nullopt;
        }
        vertex_used[vertex] = true;
        tour[p] = vertex;
    }
    // All m*m bits outside the chosen ones must be zero.
    if (std::popcount(bits) != static_cast<int>(m)) {
        return std::nullopt;
    }
    return tour;
}

pauli::PauliHamiltonian qubo_to_ising(const QuboProblem& q) {
    const std::uint32_t n = q.n_vars;
    std::vector<double> z_coeff(n, 0.0);
    std::vector<pauli::PauliTerm> terms;
    double id_coeff = q.constant_offset;
    for (std::uint32_t i = 0; i < n; ++i) {
        // Diagonal: Q_ii x_i = Q_ii (1 - Z_i)/2.
        const double qi = q.q(i, i);
        id_coeff += qi / 2.0;
        z_coeff[i] -= qi / 2.0;
        for (std::uint32_t j = i + 1; j < n; ++j) {
            // Off-diagonal pair carries 2 Q_ij in x^T Q x:
            // 2 Q_ij x_i x_j = Q_ij (1 - Z_i - Z_j + Z_i Z_j)/2.
            const double qij = q.q(i, j);
            if (qij == 0.0) continue;
            id_coeff += qij / 2.0;
            z_coeff[i] -= qij / 2.0;
            z_coeff[j] -= qij / 2.0;
            pauli::PauliWord w;
            w.n_qubits = n;
            w.z = (1ULL << i) | (1ULL << j);
            terms.push_back({qij / 2.0, w});
        }
    }
    for (std::uint32_t i = 0; i < n; ++i) {
        if (z_coeff[i] == 0.0) continue;
        pauli::PauliWord w;
        w.n_qubits = n;
        w.z = 1ULL << i;
        terms.push_back({z_coeff[i], w});
    }
    pauli::PauliWord id;
    id.n_qubits = n;
    terms.push_back({id_coeff, id});
    return pauli::PauliHamiltonian(n, std::move(terms));
}

TspSolution brute_force_tsp(const TspInstance& t) {
    const std::uint32_t n = t.n_vertices;
    if (n > 10) {
        throw SizeError("brute-force TSP capped at 10 vertices");
    }
    std::vector<std::uint32_t> rest(n - 1);
    for (std::uint32_t i = 0; i < n - 1; ++i) rest[i] = i + 1;
    TspSolution best;
    best.length = std::numeric_limits<double>::infinity();
    std::vector<std::uint32_t> tour(n, 0);
    do {
        std::copy(rest.begin(), rest.end(), tour.begin() + 1);
        double len = t.distance(0, tour[1]);
        for (std::uint32_t p = 1; p + 1 < n; ++p) {
            len += t.distance(tour[p], tour[p + 1]);
        }
        len += t.distance(tour[n - 1], 0);
        // std::next_permutation enumerates in lexicographic order, so the
        // first tour seen at a given length is the tie-break winner.
        if (len < best.length) {
            best.length = len;
            best.tour = tour;
        }
    } while (std::next_permutation(rest.begin(), rest.end()));
    return best;
}

}  // namespace vqabench::problems
