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

#include <algorithm>
#include <exception>
#include <queue>
#include <unordered_map>

#include <omp.h>

#include "chipfire/solver.hpp"

namespace chipfire {

namespace {

struct Node {
    Divisor state;
    std::size_t parent;
    Move move;
    std::int64_t depth;
};

using StateIndex = std::unordered_map<Divisor, std::size_t, DivisorHash>;

constexpr MoveKind kExpansionOrder[] = {MoveKind::lend, MoveKind::borrow};

BfsResult finish(const std::vector<Node>& pool, std::size_t hit) {
    BfsResult out;
    out.status = SearchStatus::found;
    out.m_min = pool[hit].depth;
    out.witness_target = pool[hit].state;
    for (std::size_t i = hit; i != 0; i = pool[i].parent) out.witness.push_back(pool[i].move);
    std::reverse(out.witness.begin(), out.witness.end());
    out.states_visited = pool.size();
    return out;
}

BfsResult search_stable_parallel(const Graph& g, const Divisor& start, const BfsOptions& options) {
    const std::size_t n = g.num_vertices();
    std::vector<Node> pool;
    StateIndex index;
    pool.push_back({start, 0, {}, 0});
    index.emplace(start, 0);
    std::vector<std::size_t> frontier{0};

    for (std::int64_t depth = 0;; ++depth) {
        for (std::size_t idx : frontier) {
            if (is_stable(g, pool[idx].state)) return finish(pool, idx);
        }
        BfsResult stop;
        stop.states_visited = pool.size();
        if (depth >= options.radius_cap || frontier.empty()) {
            stop.status = SearchStatus::cap_exceeded;
            return stop;
        }
        if (pool.size() > options.node_limit) {
            stop.status = SearchStatus::node_limit;
            return stop;
        }

        // Expand in parallel against a read-only index, then merge in
        // frontier order so discovery order matches the FIFO search.
        const auto width = static_cast<std::ptrdiff_t>(frontier.size());
        std::vector<std::vector<Node>> children(frontier.size());
        std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 8)
        for (std::ptrdiff_t f = 0; f < width; ++f) {
            try {
                const Node& parent = pool[frontier[f]];
                auto& out = children[f];
                out.reserve(2 * n);
                for (Vertex v = 0; v < n; ++v) {
                    for (MoveKind kind : kExpansionOrder) {
                        const Move m{v, kind};
                        Divisor next = single_move(g, parent.state, m);
                        if (index.contains(next)) continue;
                        out.push_back({std::move(next), frontier[f], m, depth + 1});
                    }
                }
            } catch (...) {
#pragma omp critical(chipfire_bfs_failure)
                if (!failure) failure = std::current_exception();
            }
        }
        if (failure) std::rethrow_exception(failure);

        std::vector<std::size_t> next_frontier;
        for (auto& batch : children) {
            for (Node& child : batch) {
                auto [it, inserted] = index.emplace(child.state, pool.size());
                if (!inserted) continue;
                next_frontier.push_back(pool.size());
                pool.push_back(std::move(child));
            }
        }
        frontier = std::move(next_frontier);
    }
}

BfsResult search_stable_serial(const Graph& g, const Divisor& start, const BfsOptions& options) {
    const std::size_t n = g.num_vertices();
    std::vector<Node> pool;
    StateIndex index;
    pool.push_back({start, 0, {}, 0});
    index.emplace(start, 0);
    std::queue<std::size_t> queue;
    queue.push(0);

    // The node limit is checked once per level, after every state of the
    // level has been tested against the target, as the parallel search does.
    std::int64_t level = -1;
    bool halted = false;
    while (!queue.empty()) {
        const std::size_t idx = queue.front();
        queue.pop();
        if (is_stable(g, pool[idx].state)) return finish(pool, idx);
        const std::int64_t depth = pool[idx].depth;
        if (depth != level) {
            level = depth;
            halted = pool.size() > options.node_limit;
        }
        if (depth >= options.radius_cap || halted) continue;
        for (Vertex v = 0; v < n; ++v) {
            for (MoveKind kind : kExpansionOrder) {
                const Move m{v, kind};
                Divisor next = single_move(g, pool[idx].state, m);
                auto [it, inserted] = index.emplace(next, pool.size());
                if (!inserted) continue;
                pool.push_back({std::move(next), idx, m, depth + 1});
                queue.push(pool.size() - 1);
            }
        }
    }
    BfsResult stop;
    stop.status = halted && level < options.radius_cap ? SearchStatus::node_limit
                                                       : SearchStatus::cap_exceeded;
    stop.states_visited = pool.size();
    return stop;
}

template <typename Search>
BfsResult run_search(const Graph& g, const Divisor& c, Target target, const BfsOptions& options,
                     Search search) {
    check_dimension(g, c.size(), "divisor");
    if (options.radius_cap < 0) throw Error(ErrorCode::InvalidParams, "negative radius cap");
    if (target == Target::stable) return search(g, c, options);

    // Effective on c is stable on K - c, with every move kind flipped.
    BfsResult out = search(g, dualize(g, c), options);
    if (!out.found()) return out;
    for (Move& m : out.witness) m.kind = m.kind == MoveKind::lend ? MoveKind::borrow : MoveKind::lend;
    out.witness_target = dualize(g, out.witness_target);
    return out;
}

} // namespace

std::string_view to_string(SearchStatus s) {
    switch (s) {
    case SearchStatus::found: return "found";
    case SearchStatus::cap_exceeded: return "cap_exceeded";
    case SearchStatus::node_limit: return "node_limit";
    case SearchStatus::budget_exceeded: return "budget_exceeded";
    }
    return "?";
}

BfsResult bfs_min_moves(const Graph& g, const Divisor& c, Target target, const BfsOptions& options) {
    return run_search(g, c, target, options, search_stable_parallel);
}

BfsResult bfs_min_moves_serial(const Graph& g, const Divisor& c, Target target,
                               const BfsOptions& options) {
    return run_search(g, c, target, options, search_stable_serial);
}

} // namespace chipfire
