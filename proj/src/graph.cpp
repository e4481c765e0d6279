// Copyright 2026 The chipfire Authors
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

#include "chipfire/graph.hpp"

#include <algorithm>
#include <string>


namespace chipfire {

std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::InvalidN: return "InvalidN";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::Unsatisfiable: return "Unsatisfiable";
    case ErrorCode::GreedyFailed: return "GreedyFailed";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::MalformedInput: return "MalformedInput";
    }
    return "Unknown";
}

std::string_view to_string(MoveKind kind) {
    return kind == MoveKind::lend ? "lend" : "borrow";
}

Chips Divisor::degree() const {
    Chips total = 0;
    for (Chips x : values) total = checked_add(total, x);
    return total;
}

Chips FiringVector::l1_norm() const {
    Chips total = 0;
    for (Chips x : counts) total = checked_add(total, checked_abs(x));
    return total;
}

std::size_t DivisorHash::operator()(const Divisor& d) const noexcept {
    // FNV-1a over the raw entries, then a final avalanche.
    std::uint64_t h = 1469598103934665603ull;
    for (Chips x : d.values) {
        h ^= static_cast<std::uint64_t>(x);
        h *= 1099511628211ull;
    }
    h ^= h >> 33;
    h *= 0xff51afd7ed558ccdull;
    h ^= h >> 33;
    return static_cast<std::size_t>(h);
}

Graph Graph::build(std::size_t num_vertices, std::span<const Edge> edges) {
    if (num_vertices == 0) throw Error(ErrorCode::InvalidParams, "graph needs at least one vertex");

    Graph g;
    g.n_ = num_vertices;
    g.edges_.reserve(edges.size());
    for (const auto& [u, v] : edges) {
        const std::string name = "edge (" + std::to_string(u) + "," + std::to_string(v) + ")";
        if (u >= num_vertices || v >= num_vertices)
            throw Error(ErrorCode::IndexOutOfRange, name + " has an endpoint outside [0, " +
                                                       std::to_string(num_vertices) + ")");
        if (u == v) throw Error(ErrorCode::SelfLoop, name + " is a self-loop");
        g.edges_.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end());
    if (dup != g.edges_.end())
        throw Error(ErrorCode::DuplicateEdge, "edge (" + std::to_string(dup->first) + "," +
                                                  std::to_string(dup->second) + ") appears twice");

    const std::size_t n = num_vertices;
    g.degrees_.assign(n, 0);
    for (const auto& [u, v] : g.edges_) {
        ++g.degrees_[u];
        ++g.degrees_[v];
    }
    g.offsets_.assign(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) g.offsets_[i + 1] = g.offsets_[i] + g.degrees_[i];
    g.adjacency_.resize(g.offsets_[n]);
    std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
    for (const auto& [u, v] : g.edges_) {
        g.adjacency_[fill[u]++] = v;
        g.adjacency_[fill[v]++] = u;
    }
    for (std::size_t i = 0; i < n; ++i)
        std::sort(g.adjacency_.begin() + g.offsets_[i], g.adjacency_.begin() + g.offsets_[i + 1]);

    // connectivity from vertex 0
    std::vector<char> seen(n, 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
        const Vertex u = stack.back();
        stack.pop_back();
        for (Vertex w : g.neighbors(u)) {
            if (!seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (!seen[i])
            throw Error(ErrorCode::Disconnected,
                        "vertex " + std::to_string(i) + " is not reachable from vertex 0");
    }

    g.laplacian_.assign(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) g.laplacian_[i * n + i] = g.degrees_[i];
    for (const auto& [u, v] : g.edges_) {
        g.laplacian_[u * n + v] = -1;
        g.laplacian_[v * n + u] = -1;
    }
    return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

void check_dimension(const Graph& g, std::size_t size, std::string_view what) {
    if (size != g.num_vertices())
        throw Error(ErrorCode::DimensionMismatch, std::string(what) + " has length " +
                                                      std::to_string(size) + ", graph has " +
                                                      std::to_string(g.num_vertices()) + " vertices");
}

Divisor canonical_divisor(const Graph& g) {
    Divisor k;
    k.values.reserve(g.num_vertices());
    for (Chips d : g.degrees()) k.values.push_back(d - 1);
    return k;
}

Divisor apply_firing(const Graph& g, const Divisor& c, const FiringVector& v) {
    check_dimension(g, c.size(), "divisor");
    check_dimension(g, v.size(), "firing vector");
    Divisor out = c;
    for (Vertex i = 0; i < g.num_vertices(); ++i) {
        // (C - Lv)_i = C_i - d_i v_i + sum over neighbors of v_j
        Chips acc = checked_sub(c[i], checked_mul(g.degree(i), v[i]));
        for (Vertex j : g.neighbors(i)) acc = checked_add(acc, v[j]);
        out[i] = acc;
    }
    return out;
}

void apply_move(const Graph& g, Divisor& c, Move m) {
    if (m.vertex >= g.num_vertices())
        throw Error(ErrorCode::IndexOutOfRange, "move vertex " + std::to_string(m.vertex) +
                                                    " outside [0, " +
                                                    std::to_string(g.num_vertices()) + ")");
    check_dimension(g, c.size(), "divisor");
    const Chips sign = m.kind == MoveKind::lend ? 1 : -1;
    c[m.vertex] = checked_sub(c[m.vertex], sign * g.degree(m.vertex));
    for (Vertex j : g.neighbors(m.vertex)) c[j] = checked_add(c[j], sign);
}

Divisor single_move(const Graph& g, const Divisor& c, Move m) {
    Divisor out = c;
    apply_move(g, out, m);
    return out;
}

bool is_effective(const Divisor& c) {
    return std::all_of(c.values.begin(), c.values.end(), [](Chips x) { return x >= 0; });
}

bool is_stable(const Graph& g, const Divisor& c) {
    check_dimension(g, c.size(), "divisor");
    for (Vertex i = 0; i < g.num_vertices(); ++i) {
        if (c[i] > g.degree(i) - 1) return false;
    }
    return true;
}

Divisor dualize(const Graph& g, const Divisor& c) {
    check_dimension(g, c.size(), "divisor");
    Divisor out = c;
    for (Vertex i = 0; i < g.num_vertices(); ++i) out[i] = checked_sub(g.degree(i) - 1, c[i]);
    return out;
}

} // namespace chipfire
