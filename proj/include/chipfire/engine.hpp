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

#ifndef CHIPFIRE_ENGINE_HPP
#define CHIPFIRE_ENGINE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "chipfire/graph.hpp"

namespace chipfire {

/// Which eligible vertex a greedy run fires next.
struct TieBreakPolicy {
    enum class Kind {
        lowest_index,
        highest_index,
        // most negative vertex when borrowing, most chips when lending
        extreme_first,
        seeded_random,
    };

    Kind kind = Kind::lowest_index;
    std::uint64_t seed = 0;

    static TieBreakPolicy lowest_index() { return {Kind::lowest_index, 0}; }
    static TieBreakPolicy highest_index() { return {Kind::highest_index, 0}; }
    static TieBreakPolicy extreme_first() { return {Kind::extreme_first, 0}; }
    static TieBreakPolicy seeded_random(std::uint64_t seed) { return {Kind::seeded_random, seed}; }

    /// Parses "lowest_index", "highest_index", "most_negative_first",
    /// "most_chips_first", "random" or "random:<seed>".
    static TieBreakPolicy parse(const std::string& text);
    std::string name() const;
};

enum class RunStatus {
    won,         // borrowing binge reached an effective divisor
    stable,      // greedy stabilization reached a stable divisor
    unwinnable,  // proven non-terminating
    step_limit,  // gave up before either outcome
};

std::string_view to_string(RunStatus status);

enum class UnwinnableReason {
    none,
    cycle,            // a configuration repeated; cycle_witness holds it
    degree_mismatch,  // total chips rule out any target divisor
};

struct GameTrace {
    std::vector<Move> moves;
    /// states[0] is the input, states.back() the final divisor. Empty
    /// when the run was started with keep_states = false.
    std::vector<Divisor> states;
    /// Net firing counts; a binge trace has entry -(borrows at i).
    FiringVector aggregate;
    std::int64_t move_count = 0;
    Divisor final_state;
};

struct RunResult {
    RunStatus status = RunStatus::step_limit;
    UnwinnableReason reason = UnwinnableReason::none;
    GameTrace trace;
    std::optional<Divisor> cycle_witness;

    bool succeeded() const noexcept {
        return status == RunStatus::won || status == RunStatus::stable;
    }
};

struct RunOptions {
    TieBreakPolicy policy{};
    std::int64_t max_steps = 1'000'000;
    bool keep_states = true;
};

using DivisorSet = std::unordered_set<Divisor, DivisorHash>;

/// Borrow on some in-debt vertex until nobody is in debt.
///
/// A revisited configuration proves the binge never terminates: moves
/// commute, so a terminating start has an order-independent move count,
/// and a loop back to a seen state contradicts it. If the step limit is
/// hit first and the total chip count is negative the run is still
/// reported unwinnable (no effective divisor has negative degree).
RunResult borrowing_binge(const Graph& g, const Divisor& c, const RunOptions& options = {});

/// Lend from some vertex holding at least its degree until stable.
RunResult greedy_stabilize(const Graph& g, const Divisor& c, const RunOptions& options = {});

/// True iff next was already produced by the run.
bool detect_cycle(const DivisorSet& seen, const Divisor& next);

} // namespace chipfire

#endif
