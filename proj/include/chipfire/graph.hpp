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

#ifndef CHIPFIRE_GRAPH_HPP
#define CHIPFIRE_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "chipfire/error.hpp"

namespace chipfire {

using Chips = std::int64_t;
using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

/// Chip count per vertex. Negative entries are debt.
struct Divisor {
    std::vector<Chips> values;

    Divisor() = default;
    explicit Divisor(std::vector<Chips> v) : values(std::move(v)) {}
    Divisor(std::initializer_list<Chips> v) : values(v) {}

    std::size_t size() const noexcept { return values.size(); }
    Chips operator[](std::size_t i) const { return values[i]; }
    Chips& operator[](std::size_t i) { return values[i]; }

    /// Total number of chips (degree of the divisor).
    Chips degree() const;

    friend bool operator==(const Divisor&, const Divisor&) = default;
};

/// Net number of lending moves per vertex (borrows count negative).
struct FiringVector {
    std::vector<Chips> counts;

    FiringVector() = default;
    explicit FiringVector(std::vector<Chips> v) : counts(std::move(v)) {}
    FiringVector(std::initializer_list<Chips> v) : counts(v) {}
    static FiringVector zeros(std::size_t n) { return FiringVector(std::vector<Chips>(n, 0)); }

    std::size_t size() const noexcept { return counts.size(); }
    Chips operator[](std::size_t i) const { return counts[i]; }
    Chips& operator[](std::size_t i) { return counts[i]; }

    /// Number of single-vertex moves needed to realize this vector.
    Chips l1_norm() const;

    friend bool operator==(const FiringVector&, const FiringVector&) = default;
};

enum class MoveKind { lend, borrow };

std::string_view to_string(MoveKind kind);

struct Move {
    Vertex vertex = 0;
    MoveKind kind = MoveKind::lend;

    friend bool operator==(const Move&, const Move&) = default;
};

struct DivisorHash {
    std::size_t operator()(const Divisor& d) const noexcept;
};

/// Simple connected undirected graph with its degrees and dense Laplacian.
///
/// Instances are immutable once built and always satisfy the invariants:
/// no self-loops, no parallel edges, every vertex reachable from vertex 0.
class Graph {
public:
    /// Empty placeholder with no vertices; only build() yields a usable graph.
    Graph() = default;

    /// Validates and builds. Throws Error with SelfLoop, DuplicateEdge,
    /// IndexOutOfRange, Disconnected or InvalidN naming the culprit.
    static Graph build(std::size_t num_vertices, std::span<const Edge> edges);
    static Graph build(std::size_t num_vertices, std::initializer_list<Edge> edges) {
        return build(num_vertices, std::span<const Edge>(edges.begin(), edges.size()));
    }

    std::size_t num_vertices() const noexcept { return n_; }
    std::size_t num_edges() const noexcept { return edges_.size(); }

    /// Edges as sorted (min, max) pairs.
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const std::vector<Chips>& degrees() const noexcept { return degrees_; }
    Chips degree(Vertex v) const { return degrees_[v]; }
    /// Neighbors of v in ascending order.
    std::span<const Vertex> neighbors(Vertex v) const {
        return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
    }
    bool adjacent(Vertex u, Vertex v) const;

    Chips laplacian(Vertex i, Vertex j) const { return laplacian_[i * n_ + j]; }
    /// Row-major n*n Laplacian.
    std::span<const Chips> laplacian() const noexcept { return laplacian_; }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    std::size_t n_ = 0;
    std::vector<Edge> edges_;
    std::vector<Chips> degrees_;
    std::vector<std::size_t> offsets_;
    std::vector<Vertex> adjacency_;
    std::vector<Chips> laplacian_;
};

/// K = (degree - 1) per vertex: the largest stable divisor.
Divisor canonical_divisor(const Graph& g);

/// Returns C - Laplacian * v.
Divisor apply_firing(const Graph& g, const Divisor& c, const FiringVector& v);

/// Applies one move with no legality check. Lending subtracts the
/// Laplacian column of the vertex, borrowing adds it.
Divisor single_move(const Graph& g, const Divisor& c, Move m);

/// In-place version of single_move for hot loops.
void apply_move(const Graph& g, Divisor& c, Move m);

bool is_effective(const Divisor& c);

/// True iff c[i] <= degree(i) - 1 everywhere; debt is allowed.
bool is_stable(const Graph& g, const Divisor& c);

/// K - C. An involution exchanging effective and stable divisors.
Divisor dualize(const Graph& g, const Divisor& c);

void check_dimension(const Graph& g, std::size_t size, std::string_view what);

} // namespace chipfire

#endif
