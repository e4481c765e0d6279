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

#include "chipfire/families.hpp"

#include <random>
#include <string>
#include <vector>

namespace chipfire {

namespace {

constexpr int kConnectRetries = 1000;

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

bool connected(std::int64_t n, const std::vector<Edge>& edges) {
    std::vector<std::vector<Vertex>> adj(n);
    for (const auto& [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<char> seen(n, 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    std::int64_t reached = 1;
    while (!stack.empty()) {
        const Vertex u = stack.back();
        stack.pop_back();
        for (Vertex w : adj[u]) {
            if (seen[w]) continue;
            seen[w] = 1;
            ++reached;
            stack.push_back(w);
        }
    }
    return reached == n;
}

} // namespace

Instance intro_example() {
    Graph g = Graph::build(6, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {0, 4}, {1, 5}, {2, 3}, {3, 5}, {4, 5}});
    return {"intro", std::move(g), Divisor{-1, 0, 2, 0, 2, 3}, Expected{4, 1, Rational(4), Side::dollar}};
}

Instance star_example(std::int64_t n, std::int64_t k) {
    if (n < 3 || k < 1)
        throw Error(ErrorCode::InvalidParams, "star needs n >= 3 and k >= 1, got n=" + std::to_string(n) +
                                                  " k=" + std::to_string(k));
    std::vector<Edge> edges;
    for (std::int64_t leaf = 1; leaf < n; ++leaf) edges.emplace_back(0, leaf);
    Divisor d(std::vector<Chips>(n, k));
    d[0] = checked_sub(0, checked_mul(n, k));
    const Chips m0 = checked_mul(n - 1, k);
    return {"star_n" + std::to_string(n) + "_k" + std::to_string(k), Graph::build(n, edges), std::move(d),
            Expected{m0, k, Rational(m0, k), Side::chip}};
}

Instance hybrid_example(std::int64_t n, std::int64_t k) {
    if (n < 4 || n % 2 != 0 || k < 1)
        throw Error(ErrorCode::InvalidParams, "hybrid needs even n >= 4 and k >= 1, got n=" +
                                                  std::to_string(n) + " k=" + std::to_string(k));
    const std::int64_t half = n / 2;
    const std::int64_t total = n + 1;
    std::vector<Edge> edges;
    for (std::int64_t v = 1; v < total; ++v) edges.emplace_back(0, v);
    for (std::int64_t a = 1; a <= half; ++a)
        for (std::int64_t b = a + 1; b <= half; ++b) edges.emplace_back(a, b);
    Divisor d(std::vector<Chips>(total, 0));
    d[0] = checked_sub(0, checked_mul(n, k));
    for (std::int64_t p = half + 1; p < total; ++p) d[p] = k;
    const Chips m0 = checked_mul(half, k);
    return {"hybrid_n" + std::to_string(n) + "_k" + std::to_string(k), Graph::build(total, edges),
            std::move(d), Expected{m0, k, Rational(m0, k), Side::chip}};
}

Instance random_instance(std::int64_t n, Rational edge_probability, ChipRange chips, std::uint64_t seed) {
    if (n < 2) throw Error(ErrorCode::InvalidParams, "random instance needs n >= 2");
    if (edge_probability.num() <= 0 || edge_probability > Rational(1))
        throw Error(ErrorCode::InvalidParams, "edge probability must lie in (0, 1], got " + edge_probability.str());
    if (chips.lo > chips.hi) throw Error(ErrorCode::InvalidParams, "empty chip range");

    std::mt19937_64 rng(seed);
    const auto num = static_cast<std::uint64_t>(edge_probability.num());
    const auto den = static_cast<std::uint64_t>(edge_probability.den());
    std::vector<Edge> edges;
    bool ok = false;
    for (int attempt = 0; attempt < kConnectRetries && !ok; ++attempt) {
        edges.clear();
        for (std::int64_t u = 0; u < n; ++u)
            for (std::int64_t v = u + 1; v < n; ++v)
                if (uniform_below(rng, den) < num) edges.emplace_back(u, v);
        ok = connected(n, edges);
    }
    if (!ok)
        throw Error(ErrorCode::Unsatisfiable, "no connected graph after " + std::to_string(kConnectRetries) +
                                                  " attempts at p=" + edge_probability.str());

    const auto width = static_cast<std::uint64_t>(checked_sub(chips.hi, chips.lo)) + 1;
    Divisor d(std::vector<Chips>(n, 0));
    for (auto& x : d.values) x = chips.lo + static_cast<Chips>(uniform_below(rng, width));
    return {"random_n" + std::to_string(n) + "_s" + std::to_string(seed), Graph::build(n, edges), std::move(d),
            std::nullopt};
}

} // namespace chipfire
