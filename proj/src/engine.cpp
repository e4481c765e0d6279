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

#include "chipfire/engine.hpp"

#include <random>

namespace chipfire {

namespace {

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    // rejection sampling keeps the draw identical across standard libraries
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

enum class Game { dollar, chip };

bool eligible(const Graph& g, const Divisor& c, Vertex i, Game side) {
    return side == Game::dollar ? c[i] < 0 : c[i] >= g.degree(i);
}

std::optional<Vertex> pick(const Graph& g, const Divisor& c, Game side,
                           const TieBreakPolicy& policy, std::mt19937_64& rng,
                           std::vector<Vertex>& scratch) {
    const std::size_t n = g.num_vertices();
    switch (policy.kind) {
    case TieBreakPolicy::Kind::lowest_index:
        for (Vertex i = 0; i < n; ++i)
            if (eligible(g, c, i, side)) return i;
        return std::nullopt;
    case TieBreakPolicy::Kind::highest_index:
        for (Vertex i = n; i-- > 0;)
            if (eligible(g, c, i, side)) return i;
        return std::nullopt;
    case TieBreakPolicy::Kind::extreme_first: {
        std::optional<Vertex> best;
        for (Vertex i = 0; i < n; ++i) {
            if (!eligible(g, c, i, side)) continue;
            if (!best) best = i;
            else if (side == Game::dollar ? c[i] < c[*best] : c[i] > c[*best]) best = i;
        }
        return best;
    }
    case TieBreakPolicy::Kind::seeded_random:
        scratch.clear();
        for (Vertex i = 0; i < n; ++i)
            if (eligible(g, c, i, side)) scratch.push_back(i);
        if (scratch.empty()) return std::nullopt;
        return scratch[uniform_below(rng, scratch.size())];
    }
    return std::nullopt;
}

RunResult run_greedy(const Graph& g, const Divisor& c, const RunOptions& options, Game side) {
    check_dimension(g, c.size(), "divisor");
    const std::size_t n = g.num_vertices();
    const MoveKind kind = side == Game::dollar ? MoveKind::borrow : MoveKind::lend;
    const Chips step = side == Game::dollar ? -1 : 1;

    RunResult result;
    GameTrace& trace = result.trace;
    trace.aggregate = FiringVector::zeros(n);
    Divisor current = c;
    if (options.keep_states) trace.states.push_back(current);

    DivisorSet seen;
    seen.insert(current);
    std::mt19937_64 rng(options.policy.seed);
    std::vector<Vertex> scratch;

    while (true) {
        const auto chosen = pick(g, current, side, options.policy, rng, scratch);
        if (!chosen) {
            result.status = side == Game::dollar ? RunStatus::won : RunStatus::stable;
            break;
        }
        if (trace.move_count >= options.max_steps) {
            const Chips total = current.degree();
            const bool hopeless = side == Game::dollar
                                      ? total < 0
                                      : total > canonical_divisor(g).degree();
            if (hopeless) {
                result.status = RunStatus::unwinnable;
                result.reason = UnwinnableReason::degree_mismatch;
            } else {
                result.status = RunStatus::step_limit;
            }
            break;
        }
        const Move m{*chosen, kind};
        apply_move(g, current, m);
        trace.moves.push_back(m);
        trace.aggregate[m.vertex] += step;
        ++trace.move_count;
        if (options.keep_states) trace.states.push_back(current);
        if (detect_cycle(seen, current)) {
            result.status = RunStatus::unwinnable;
            result.reason = UnwinnableReason::cycle;
            result.cycle_witness = current;
            break;
        }
        seen.insert(current);
    }
    trace.final_state = std::move(current);
    return result;
}

} // namespace

TieBreakPolicy TieBreakPolicy::parse(const std::string& text) {
    if (text == "lowest_index") return lowest_index();
    if (text == "highest_index") return highest_index();
    if (text == "most_negative_first" || text == "most_chips_first" || text == "extreme_first")
        return extreme_first();
    if (text == "random") return seeded_random(0);
    if (text.rfind("random:", 0) == 0) {
        try {
            std::size_t used = 0;
            const auto seed = std::stoull(text.substr(7), &used);
            if (used == text.size() - 7) return seeded_random(seed);
        } catch (const std::exception&) {
        }
    }
    throw Error(ErrorCode::InvalidParams, "unknown tie-break policy '" + text + "'");
}

std::string TieBreakPolicy::name() const {
    switch (kind) {
    case Kind::lowest_index: return "lowest_index";
    case Kind::highest_index: return "highest_index";
    case Kind::extreme_first: return "extreme_first";
    case Kind::seeded_random: return "random:" + std::to_string(seed);
    }
    return "?";
}

std::string_view to_string(RunStatus status) {
    switch (status) {
    case RunStatus::won: return "won";
    case RunStatus::stable: return "stable";
    case RunStatus::unwinnable: return "unwinnable";
    case RunStatus::step_limit: return "step_limit";
    }
    return "?";
}

bool detect_cycle(const DivisorSet& seen, const Divisor& next) {
    return seen.contains(next);
}

RunResult borrowing_binge(const Graph& g, const Divisor& c, const RunOptions& options) {
    return run_greedy(g, c, options, Game::dollar);
}

RunResult greedy_stabilize(const Graph& g, const Divisor& c, const RunOptions& options) {
    return run_greedy(g, c, options, Game::chip);
}

} // namespace chipfire
