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

#ifndef CHIPFIRE_SOLVER_HPP
#define CHIPFIRE_SOLVER_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "chipfire/engine.hpp"
#include "chipfire/graph.hpp"
#include "chipfire/rational.hpp"
#include "chipfire/renorm.hpp"

namespace chipfire {

/// The divisor class a search is aiming for.
enum class Target { stable, effective };

/// Which game an instance is played in: the dollar game (borrowing binge,
/// effective target) or the chip-firing game (greedy lending, stable target).
enum class Side { dollar, chip };

std::string_view to_string(Target t);
std::string_view to_string(Side s);
Side parse_side(std::string_view text);

inline Target target_of(Side s) { return s == Side::dollar ? Target::effective : Target::stable; }

// ---------------------------------------------------------------------------
// Breadth-first search over divisors

enum class SearchStatus { found, cap_exceeded, node_limit, budget_exceeded };

std::string_view to_string(SearchStatus s);

struct BfsOptions {
    std::int64_t radius_cap = 0;
    /// Hard ceiling on stored states; hitting it reports node_limit.
    std::size_t node_limit = 20'000'000;
};

struct BfsResult {
    SearchStatus status = SearchStatus::cap_exceeded;
    std::int64_t m_min = 0;
    std::vector<Move> witness;
    Divisor witness_target;
    /// States stored when the search stopped. The serial search stops
    /// mid-level, the parallel one at a level boundary, so counts differ.
    std::size_t states_visited = 0;

    bool found() const noexcept { return status == SearchStatus::found; }
};

/// Exact minimum number of single moves (lend or borrow, any vertex,
/// intermediate states unconstrained) from c to a divisor of the target
/// class, searching no deeper than radius_cap.
///
/// Expansion is level-synchronous: each frontier is expanded in parallel
/// and merged in frontier order, so the witness is the same one the serial
/// search returns. Children are ordered vertex ascending, lend before
/// borrow. Effective targets are searched on the dual instance.
BfsResult bfs_min_moves(const Graph& g, const Divisor& c, Target target, const BfsOptions& options);

/// Single-threaded FIFO reference for bfs_min_moves. Kept for testing and
/// benchmarking; both must agree on m_min and witness.
BfsResult bfs_min_moves_serial(const Graph& g, const Divisor& c, Target target,
                               const BfsOptions& options);

// ---------------------------------------------------------------------------
// Coset search over stabilizing firing vectors

struct CosetOptions {
    /// Maximum number of search nodes visited.
    std::int64_t budget = 1'000'000;
    /// Called for every stabilizing firing vector v1 >= 0 with a zero
    /// entry that the search completes (including the greedy one).
    std::function<void(const FiringVector&)> on_stabilizing;
};

struct CosetResult {
    SearchStatus status = SearchStatus::budget_exceeded;
    std::int64_t m_min = 0;
    /// Normalized stabilizing vector (>= 0, one zero entry) of the optimum.
    FiringVector witness_firing;
    /// Its shortest coset representative; |.|_1 == m_min.
    ShiftAnalysis shift;
    Divisor witness_target;
    FiringVector greedy_aggregate;
    std::int64_t nodes = 0;

    bool found() const noexcept { return status == SearchStatus::found; }
};

/// Minimum move count to a stable divisor, searched over firing vectors.
///
/// Any stabilizing vector can be shifted to be nonnegative with a zero
/// entry, and such a vector dominates the greedy aggregate v0. The search
/// therefore enumerates v1 >= v0 by branch and bound, scoring each by its
/// shortest coset representative. Bounds used: max(v1) <= norm(v1) for
/// normalized v1; norm >= |v1|_1 / (n - 1); partial stability of fixed
/// vertices given lower bounds on their free neighbors.
///
/// Throws GreedyFailed if greedy stabilization does not terminate.
CosetResult coset_min_moves(const Graph& g, const Divisor& c, const CosetOptions& options = {});

/// Moves realizing the firing vector: lends then borrows, vertex ascending.
std::vector<Move> moves_from_firing(const FiringVector& v);

// ---------------------------------------------------------------------------
// Lower-bound verification

enum class Method { automatic, bfs, coset };

std::string_view to_string(Method m);
Method parse_method(std::string_view text);

enum class ReportStatus { ok, unwinnable, step_limit, search_exhausted };

std::string_view to_string(ReportStatus s);

struct SolveOptions {
    Method method = Method::automatic;
    /// Under Method::automatic, BFS is used when the greedy move count is
    /// at most this; coset search otherwise.
    std::int64_t bfs_move_limit = 12;
    /// Defaults to the greedy move count, always an upper bound.
    std::optional<std::int64_t> radius_cap;
    std::int64_t coset_budget = 1'000'000;
    RunOptions run{TieBreakPolicy{}, 1'000'000, false};
};

struct SolveReport {
    Side side = Side::dollar;
    ReportStatus status = ReportStatus::ok;
    std::int64_t n = 0;
    std::int64_t m0 = 0;
    std::int64_t m_min = 0;
    Rational bound_rational;
    std::int64_t bound_ceiling = 0;
    bool holds = false;
    bool tight = false;
    std::vector<Move> witness_moves;
    Divisor witness_target;
    Method method = Method::bfs;
    FiringVector greedy_aggregate;
    Divisor greedy_final;
};

/// Runs the greedy strategy for the side, computes the exact optimum and
/// checks m_min >= m0 / (n - 1) with exact arithmetic.
SolveReport verify_theorem(const Graph& g, const Divisor& c, Side side,
                           const SolveOptions& options = {});

/// Least action check: true iff v1 dominates the greedy aggregate.
/// Throws PreconditionViolated unless v1 >= 0 and c - L v1 is stable.
bool check_least_action(const Graph& g, const Divisor& c, const FiringVector& v1);

struct BatchItem {
    const Graph* graph;
    Divisor divisor;
    Side side;
};

/// verify_theorem over many instances, in parallel. Results keep input order.
std::vector<SolveReport> analyze_batch(std::span<const BatchItem> items, const SolveOptions& options = {});
/// Serial reference for analyze_batch.
std::vector<SolveReport> analyze_batch_serial(std::span<const BatchItem> items,
                                              const SolveOptions& options = {});

} // namespace chipfire

#endif
