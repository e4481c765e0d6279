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
#include <string>

#include "chipfire/solver.hpp"

namespace chipfire {

std::string_view to_string(Target t) { return t == Target::stable ? "stable" : "effective"; }

std::string_view to_string(Side s) { return s == Side::dollar ? "dollar" : "chip"; }

Side parse_side(std::string_view text) {
    if (text == "dollar") return Side::dollar;
    if (text == "chip") return Side::chip;
    throw Error(ErrorCode::InvalidParams, "side must be 'dollar' or 'chip', got '" + std::string(text) + "'");
}

std::string_view to_string(Method m) {
    switch (m) {
    case Method::automatic: return "auto";
    case Method::bfs: return "bfs";
    case Method::coset: return "coset";
    }
    return "?";
}

Method parse_method(std::string_view text) {
    if (text == "auto") return Method::automatic;
    if (text == "bfs") return Method::bfs;
    if (text == "coset") return Method::coset;
    throw Error(ErrorCode::InvalidParams, "method must be auto, bfs or coset, got '" + std::string(text) + "'");
}

std::string_view to_string(ReportStatus s) {
    switch (s) {
    case ReportStatus::ok: return "ok";
    case ReportStatus::unwinnable: return "unwinnable";
    case ReportStatus::step_limit: return "step_limit";
    case ReportStatus::search_exhausted: return "search_exhausted";
    }
    return "?";
}

SolveReport verify_theorem(const Graph& g, const Divisor& c, Side side, const SolveOptions& options) {
    check_dimension(g, c.size(), "divisor");
    SolveReport report;
    report.side = side;
    report.n = static_cast<std::int64_t>(g.num_vertices());

    const RunResult greedy = side == Side::dollar ? borrowing_binge(g, c, options.run)
                                                  : greedy_stabilize(g, c, options.run);
    report.greedy_aggregate = greedy.trace.aggregate;
    report.greedy_final = greedy.trace.final_state;
    report.m0 = greedy.trace.move_count;
    if (!greedy.succeeded()) {
        report.status = greedy.status == RunStatus::unwinnable ? ReportStatus::unwinnable
                                                               : ReportStatus::step_limit;
        return report;
    }

    Method method = options.method;
    if (method == Method::automatic)
        method = report.m0 <= options.bfs_move_limit ? Method::bfs : Method::coset;
    report.method = method;

    if (method == Method::bfs) {
        BfsOptions bfs;
        bfs.radius_cap = options.radius_cap.value_or(report.m0);
        const BfsResult found = bfs_min_moves(g, c, target_of(side), bfs);
        if (!found.found()) {
            report.status = ReportStatus::search_exhausted;
            return report;
        }
        report.m_min = found.m_min;
        report.witness_moves = found.witness;
        report.witness_target = found.witness_target;
    } else {
        // Dollar-side optimum comes from the dual chip-firing instance.
        const Divisor chip = side == Side::dollar ? dualize(g, c) : c;
        CosetOptions coset;
        coset.budget = options.coset_budget;
        const CosetResult found = coset_min_moves(g, chip, coset);
        if (!found.found()) {
            report.status = ReportStatus::search_exhausted;
            return report;
        }
        report.m_min = found.m_min;
        report.witness_moves = moves_from_firing(found.shift.minimal);
        report.witness_target = found.witness_target;
        if (side == Side::dollar) {
            for (Move& m : report.witness_moves)
                m.kind = m.kind == MoveKind::lend ? MoveKind::borrow : MoveKind::lend;
            report.witness_target = dualize(g, found.witness_target);
        }
    }

    if (report.n < 2) {
        // one vertex: a winnable run makes no moves
        report.bound_rational = Rational(0);
        report.bound_ceiling = 0;
    } else {
        const MoveBound bound = lower_bound(report.m0, report.n);
        report.bound_rational = bound.exact;
        report.bound_ceiling = bound.ceiling;
    }
    const __int128 scaled = static_cast<__int128>(report.m_min) * std::max<std::int64_t>(report.n - 1, 1);
    report.holds = scaled >= report.m0;
    report.tight = scaled == report.m0;
    return report;
}

bool check_least_action(const Graph& g, const Divisor& c, const FiringVector& v1) {
    check_dimension(g, c.size(), "divisor");
    check_dimension(g, v1.size(), "firing vector");
    for (Vertex i = 0; i < v1.size(); ++i) {
        if (v1[i] < 0)
            throw Error(ErrorCode::PreconditionViolated,
                        "firing vector entry " + std::to_string(i) + " is negative");
    }
    if (!is_stable(g, apply_firing(g, c, v1)))
        throw Error(ErrorCode::PreconditionViolated, "firing vector does not reach a stable divisor");
    const RunResult greedy = greedy_stabilize(g, c, RunOptions{{}, 1'000'000, false});
    if (!greedy.succeeded()) throw Error(ErrorCode::GreedyFailed, "greedy stabilization did not terminate");
    for (Vertex i = 0; i < v1.size(); ++i) {
        if (v1[i] < greedy.trace.aggregate[i]) return false;
    }
    return true;
}

std::vector<SolveReport> analyze_batch(std::span<const BatchItem> items, const SolveOptions& options) {
    std::vector<SolveReport> out(items.size());
    std::exception_ptr failure;
    const auto count = static_cast<std::ptrdiff_t>(items.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
        try {
            out[i] = verify_theorem(*items[i].graph, items[i].divisor, items[i].side, options);
        } catch (...) {
#pragma omp critical(chipfire_batch_failure)
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return out;
}

std::vector<SolveReport> analyze_batch_serial(std::span<const BatchItem> items, const SolveOptions& options) {
    std::vector<SolveReport> out;
    out.reserve(items.size());
    for (const BatchItem& item : items) out.push_back(verify_theorem(*item.graph, item.divisor, item.side, options));
    return out;
}

} // namespace chipfire
