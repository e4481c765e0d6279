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

#ifndef CHIPFIRE_FAMILIES_HPP
#define CHIPFIRE_FAMILIES_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "chipfire/graph.hpp"
#include "chipfire/rational.hpp"
#include "chipfire/solver.hpp"

namespace chipfire {

/// Analytics known in closed form for a generated instance.
struct Expected {
    std::int64_t m0 = 0;
    std::int64_t m_min = 0;
    Rational ratio;  // m0 / m_min
    Side side = Side::dollar;
};

struct Instance {
    std::string name;
    Graph graph;
    Divisor divisor;
    std::optional<Expected> expected;
};

/// Six-vertex dollar game with debt at vertex 0: four borrows for the
/// greedy binge, one lend at vertex 4 for the optimum.
Instance intro_example();

/// Star on n vertices, center 0 holding -n*k and every leaf k. Played as
/// chip-firing; the greedy run fires each leaf k times while one borrow
/// sequence at the center reaches the same divisor in k moves.
Instance star_example(std::int64_t n, std::int64_t k);

/// Clique of n/2 vertices plus n/2 pendants, all joined to a hub.
///
/// `n` is the family parameter (even, >= 4), not the vertex count: the
/// graph has n + 1 vertices. Layout: hub 0, clique 1..n/2, pendants
/// n/2+1..n. The hub holds -n*k, pendants k, clique 0. Greedy lends k
/// times at every pendant (m0 = n*k/2, already coset-minimal) while k
/// borrows at the hub reach a different stable divisor, so the ratio is
/// n/2 in terms of the parameter.
Instance hybrid_example(std::int64_t n, std::int64_t k);

struct ChipRange {
    Chips lo = 0;
    Chips hi = 0;
};

/// Connected simple graph with each edge present with probability p
/// (edge sets are resampled until connected, up to a retry cap) and
/// uniform chips. Deterministic in the seed.
Instance random_instance(std::int64_t n, Rational edge_probability, ChipRange chips, std::uint64_t seed);

} // namespace chipfire

#endif
