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
#include <limits>

#include "chipfire/solver.hpp"

namespace chipfire {

namespace {

struct BudgetExhausted {};

class CosetSearch {
public:
    CosetSearch(const Graph& g, const Divisor& c, const FiringVector& v0, const CosetOptions& options)
        : g_(g), c_(c), lo_(v0.counts), options_(options), n_(g.num_vertices()) {
        x_.assign(n_, 0);
        best_vector_ = v0;
        best_norm_ = minimal_representative(v0).minimal_norm;
        // Each vertex sees its free neighbors at their lower bounds.
        known_.assign(n_, 0);
        for (Vertex i = 0; i < n_; ++i)
            for (Vertex j : g_.neighbors(i)) known_[i] = checked_add(known_[i], lo_[j]);
        suffix_lo_.assign(n_ + 1, 0);
        zero_after_.assign(n_ + 1, false);
        for (std::size_t i = n_; i-- > 0;) {
            suffix_lo_[i] = checked_add(suffix_lo_[i + 1], lo_[i]);
            zero_after_[i] = zero_after_[i + 1] || lo_[i] == 0;
        }
    }

    void run() {
        if (options_.on_stabilizing) options_.on_stabilizing(best_vector_);
        descend(0, 0, false);
    }

    const FiringVector& best_vector() const { return best_vector_; }
    std::int64_t nodes() const { return nodes_; }

private:
    // Upper limit on every coordinate of an improving normalized vector:
    // for n >= 2 the coset norm is at least max - min = max.
    Chips ceiling() const { return best_norm_ - 1; }

    // Stability slack of vertex i with x_i fixed and free neighbors at lo.
    bool can_be_stable(Vertex i, Chips xi) const {
        const Chips d = g_.degree(i);
        return c_[i] - d * xi + known_[i] <= d - 1;
    }

    // min over shifts k of the fixed part's distance plus each free
    // coordinate's distance from k to its box [lo, ceiling].
    Chips coset_lower_bound(std::size_t fixed) const {
        const Chips hi = ceiling();
        Chips best = std::numeric_limits<Chips>::max();
        for (Chips k = 0; k <= hi; ++k) {
            Chips total = 0;
            for (std::size_t i = 0; i < fixed; ++i) total += x_[i] > k ? x_[i] - k : k - x_[i];
            for (std::size_t i = fixed; i < n_; ++i)
                if (lo_[i] > k) total += lo_[i] - k;
            best = std::min(best, total);
        }
        return best;
    }

    void descend(std::size_t j, Chips prefix_sum, bool has_zero) {
        if (++nodes_ > options_.budget) throw BudgetExhausted{};
        if (j == n_) {
            if (!has_zero) return;
            FiringVector v1(x_);
            if (options_.on_stabilizing) options_.on_stabilizing(v1);
            const Chips norm = minimal_representative(v1).minimal_norm;
            if (norm < best_norm_) {
                best_norm_ = norm;
                best_vector_ = std::move(v1);
            }
            return;
        }
        const auto denom = static_cast<Chips>(n_ - 1);
        for (Chips val = lo_[j]; val <= ceiling(); ++val) {
            const Chips sum = prefix_sum + val + suffix_lo_[j + 1];
            // |v1|_1 / (n - 1) <= norm < best
            if (sum > denom * best_norm_ - 1) break;
            const bool zero = has_zero || val == 0;
            if (!zero && !zero_after_[j + 1]) continue;

            x_[j] = val;
            const Chips delta = val - lo_[j];
            for (Vertex i : g_.neighbors(j)) known_[i] += delta;

            bool ok = can_be_stable(j, val);
            for (Vertex i : g_.neighbors(j)) {
                if (!ok) break;
                // fixed neighbors are exact, free ones get their best case
                ok = can_be_stable(i, i < j ? x_[i] : ceiling());
            }
            if (ok && coset_lower_bound(j + 1) < best_norm_) descend(j + 1, prefix_sum + val, zero);

            for (Vertex i : g_.neighbors(j)) known_[i] -= delta;
        }
        x_[j] = lo_[j];
    }

    const Graph& g_;
    const Divisor& c_;
    std::vector<Chips> lo_;
    const CosetOptions& options_;
    std::size_t n_;

    std::vector<Chips> x_;
    std::vector<Chips> known_;
    std::vector<Chips> suffix_lo_;
    std::vector<bool> zero_after_;
    FiringVector best_vector_;
    Chips best_norm_ = 0;
    std::int64_t nodes_ = 0;
};

} // namespace

std::vector<Move> moves_from_firing(const FiringVector& v) {
    std::vector<Move> moves;
    for (Vertex i = 0; i < v.size(); ++i)
        for (Chips t = 0; t < v[i]; ++t) moves.push_back({i, MoveKind::lend});
    for (Vertex i = 0; i < v.size(); ++i)
        for (Chips t = 0; t < -v[i]; ++t) moves.push_back({i, MoveKind::borrow});
    return moves;
}

CosetResult coset_min_moves(const Graph& g, const Divisor& c, const CosetOptions& options) {
    check_dimension(g, c.size(), "divisor");
    const RunResult greedy = greedy_stabilize(g, c, RunOptions{{}, 1'000'000, false});
    if (!greedy.succeeded())
        throw Error(ErrorCode::GreedyFailed, std::string("greedy stabilization ended with status ") +
                                                 std::string(to_string(greedy.status)));

    CosetResult out;
    out.greedy_aggregate = greedy.trace.aggregate;
    const FiringVector& v0 = out.greedy_aggregate;

    if (g.num_vertices() < 2) {
        out.status = SearchStatus::found;
        out.witness_firing = v0;
    } else {
        CosetSearch search(g, c, v0, options);
        try {
            search.run();
            out.status = SearchStatus::found;
        } catch (const BudgetExhausted&) {
            out.status = SearchStatus::budget_exceeded;
        }
        out.nodes = search.nodes();
        out.witness_firing = search.best_vector();
    }
    out.shift = minimal_representative(out.witness_firing);
    out.m_min = out.shift.minimal_norm;
    out.witness_target = apply_firing(g, c, out.witness_firing);
    return out;
}

} // namespace chipfire
