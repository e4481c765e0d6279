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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "chipfire/engine.hpp"
#include "chipfire/families.hpp"
#include "chipfire/renorm.hpp"
#include "chipfire/solver.hpp"
#include "oracles.hpp"

using namespace chipfire;

namespace {

// Collects violations; keeps only the first few messages.
class Tally {
public:
    void expect(bool ok, const std::function<std::string()>& what) {
        ++checks_;
        if (ok) return;
        if (failures_++ < 5) messages_.push_back(what());
    }
    bool ok() const { return failures_ == 0; }
    std::string summary() const {
        std::ostringstream os;
        os << checks_ << " checks, " << failures_ << " violations";
        for (const auto& m : messages_) os << "\n    " << m;
        return os.str();
    }

private:
    long checks_ = 0;
    long failures_ = 0;
    std::vector<std::string> messages_;
};

std::string show(const std::vector<Chips>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

struct Corpus {
    std::vector<Instance> all;       // every generated instance
    std::vector<Instance> winnable;  // binge succeeds
};

Corpus build_corpus() {
    Corpus c;
    for (std::uint64_t seed = 0; c.winnable.size() < 200; ++seed) {
        const auto n = static_cast<std::int64_t>(2 + seed % 5);
        Instance inst = random_instance(n, Rational(1, 2), {-3, 3}, 1000 + seed);
        if (borrowing_binge(inst.graph, inst.divisor).succeeded()) c.winnable.push_back(inst);
        c.all.push_back(std::move(inst));
    }
    return c;
}

void criterion_intro(Tally& t) {
    const Instance inst = intro_example();
    const RunResult r = borrowing_binge(inst.graph, inst.divisor);
    t.expect(r.status == RunStatus::won, [] { return std::string("binge did not win"); });
    t.expect(r.trace.move_count == 4, [&] { return "M0 = " + std::to_string(r.trace.move_count); });
    t.expect(r.trace.final_state == Divisor{0, 1, 2, 1, 1, 1}, [&] { return "final " + show(r.trace.final_state.values); });

    BfsOptions o;
    o.radius_cap = 4;
    const BfsResult b = bfs_min_moves(inst.graph, inst.divisor, Target::effective, o);
    t.expect(b.found() && b.m_min == 1, [&] { return "bfs m_min = " + std::to_string(b.m_min); });
    const bool witness_ok = b.witness.size() == 1 && b.witness[0].kind == MoveKind::lend &&
                            inst.graph.degree(b.witness[0].vertex) == 2;
    t.expect(witness_ok, [] { return std::string("witness is not a lend at the degree-2 vertex"); });

    const SolveReport rep = verify_theorem(inst.graph, inst.divisor, Side::dollar);
    t.expect(rep.bound_rational == Rational(4, 5), [&] { return "bound " + rep.bound_rational.str(); });
    t.expect(rep.holds && !rep.tight, [] { return std::string("expected holds and not tight"); });
}

void criterion_star(Tally& t) {
    for (std::int64_t n = 3; n <= 8; ++n) {
        for (std::int64_t k = 1; k <= 4; ++k) {
            const Instance inst = star_example(n, k);
            const std::string tag = "star(" + std::to_string(n) + "," + std::to_string(k) + ")";
            const RunResult g = greedy_stabilize(inst.graph, inst.divisor);
            const std::int64_t m0 = g.trace.move_count;
            t.expect(g.succeeded() && m0 == (n - 1) * k, [&] { return tag + " M0 = " + std::to_string(m0); });
            SolveOptions so;
            so.method = m0 <= 12 ? Method::bfs : Method::coset;
            const SolveReport rep = verify_theorem(inst.graph, inst.divisor, Side::chip, so);
            t.expect(rep.status == ReportStatus::ok && rep.m_min == k,
                     [&] { return tag + " M_min = " + std::to_string(rep.m_min); });
            t.expect(rep.m_min * (static_cast<std::int64_t>(inst.graph.num_vertices()) - 1) == rep.m0 && rep.tight,
                     [&] { return tag + " not tight"; });
        }
    }
}

void criterion_hybrid(Tally& t) {
    for (std::int64_t n : {4, 6, 8}) {
        for (std::int64_t k : {1, 2}) {
            const Instance inst = hybrid_example(n, k);
            const std::string tag = "hybrid(" + std::to_string(n) + "," + std::to_string(k) + ")";
            const RunResult g = greedy_stabilize(inst.graph, inst.divisor);
            t.expect(g.succeeded() && g.trace.move_count == (n / 2) * k,
                     [&] { return tag + " M0 = " + std::to_string(g.trace.move_count); });
            t.expect(is_coset_minimal(g.trace.aggregate), [&] { return tag + " greedy aggregate not coset-minimal"; });
            t.expect(g.trace.aggregate.l1_norm() == oracle::brute_min_shift_norm(g.trace.aggregate.counts),
                     [&] { return tag + " brute force disagrees on coset minimality"; });
            const SolveReport rep = verify_theorem(inst.graph, inst.divisor, Side::chip);
            t.expect(rep.status == ReportStatus::ok && rep.m_min == k,
                     [&] { return tag + " M_min = " + std::to_string(rep.m_min); });
            t.expect(is_stable(inst.graph, rep.witness_target) && rep.witness_target != g.trace.final_state,
                     [&] { return tag + " witness target " + show(rep.witness_target.values); });
        }
    }
}

void criterion_properties(Tally& t, const Corpus& corpus) {
    const std::vector<TieBreakPolicy> policies{TieBreakPolicy::lowest_index(), TieBreakPolicy::highest_index(),
                                               TieBreakPolicy::extreme_first(), TieBreakPolicy::seeded_random(1),
                                               TieBreakPolicy::seeded_random(2)};
    for (const Instance& inst : corpus.winnable) {
        const Graph& g = inst.graph;
        const auto n = static_cast<std::int64_t>(g.num_vertices());
        const std::string tag = inst.name;

        // (a) the bound, with a BFS minimum
        const SolveReport rep = verify_theorem(g, inst.divisor, Side::dollar);
        t.expect(rep.status == ReportStatus::ok, [&] { return tag + " solver status " + std::string(to_string(rep.status)); });
        t.expect(static_cast<__int128>(rep.m_min) * (n - 1) >= rep.m0,
                 [&] { return tag + " bound violated: M_min " + std::to_string(rep.m_min); });
        if (n <= 4 && rep.m0 <= 6) {
            const auto brute = oracle::brute_min_moves(g, inst.divisor, rep.m0, is_effective);
            t.expect(brute && *brute == rep.m_min, [&] { return tag + " brute-force minimum disagrees"; });
        }

        // (b) confluence
        RunOptions ro;
        ro.keep_states = false;
        ro.policy = policies[0];
        const RunResult base = borrowing_binge(g, inst.divisor, ro);
        for (std::size_t p = 1; p < policies.size(); ++p) {
            ro.policy = policies[p];
            const RunResult other = borrowing_binge(g, inst.divisor, ro);
            t.expect(other.succeeded() && other.trace.move_count == base.trace.move_count &&
                         other.trace.aggregate == base.trace.aggregate &&
                         other.trace.final_state == base.trace.final_state,
                     [&] { return tag + " policy " + policies[p].name() + " disagrees"; });
        }

        // (c) least action, on the chip side of the dual instance
        const Divisor dual = dualize(g, inst.divisor);
        const FiringVector v0 = greedy_stabilize(g, dual, ro).trace.aggregate;
        CosetOptions co;
        std::size_t seen = 0;
        co.on_stabilizing = [&](const FiringVector& v1) {
            ++seen;
            t.expect(is_stable(g, oracle::dense_firing(g, dual, v1)), [&] { return tag + " reported vector does not stabilize"; });
            const Chips lowest = *std::min_element(v1.counts.begin(), v1.counts.end());
            t.expect(lowest == 0, [&] { return tag + " reported vector is not normalized"; });
            bool dominates = true;
            for (std::size_t i = 0; i < v1.size(); ++i) dominates = dominates && v1[i] >= v0[i];
            t.expect(dominates, [&] { return tag + " least action fails for " + show(v1.counts); });
        };
        const CosetResult cr = coset_min_moves(g, dual, co);
        t.expect(seen > 0, [&] { return tag + " coset search reported nothing"; });

        // (d) methods agree
        t.expect(cr.found() && cr.m_min == rep.m_min,
                 [&] { return tag + " coset " + std::to_string(cr.m_min) + " vs bfs " + std::to_string(rep.m_min); });
    }
}

void criterion_lemma(Tally& t) {
    auto check = [&t](const std::vector<Chips>& values) {
        const FiringVector v(values);
        const std::size_t n = values.size();
        const ShiftAnalysis a = minimal_representative(v);
        const Chips brute = oracle::brute_min_shift_norm(values);
        t.expect(a.minimal_norm == brute && a.minimal.l1_norm() == brute,
                 [&] { return show(values) + " norm " + std::to_string(a.minimal_norm) + " vs " + std::to_string(brute); });
        t.expect(oracle::norm_after_shift(values, a.shift) == a.minimal_norm, [&] { return show(values) + " shift"; });
        t.expect(a.positives <= n / 2 && a.negatives <= n / 2, [&] { return show(values) + " count bound"; });
        const Chips lo = *std::min_element(values.begin(), values.end());
        const auto zeros = std::count(values.begin(), values.end(), 0);
        if (n >= 2 && lo >= 0 && zeros >= 1) {
            const Chips total = v.l1_norm();
            t.expect(static_cast<__int128>(a.minimal_norm) * static_cast<Chips>(n - 1) >= total,
                     [&] { return show(values) + " below |v|/(n-1)"; });
        }
    };
    for (std::size_t n = 1; n <= 4; ++n) {
        std::vector<Chips> v(n, -4);
        while (true) {
            check(v);
            std::size_t i = 0;
            while (i < n && v[i] == 4) v[i++] = -4;
            if (i == n) break;
            ++v[i];
        }
    }
    std::mt19937_64 rng(20);
    for (int i = 0; i < 1000; ++i) {
        const std::size_t n = 1 + rng() % 8;
        check(oracle::random_vector(rng, n, -10, 10));
    }
    // eligible vectors need a zero, which random draws rarely give for n = 8
    for (int i = 0; i < 1000; ++i) {
        const std::size_t n = 2 + rng() % 7;
        auto v = oracle::random_vector(rng, n, 0, 10);
        v[rng() % n] = 0;
        check(v);
    }
}

void criterion_duality(Tally& t, const Corpus& corpus) {
    RunOptions ro;
    ro.keep_states = false;
    for (const Instance& inst : corpus.all) {
        const Graph& g = inst.graph;
        const RunResult b = borrowing_binge(g, inst.divisor, ro);
        const RunResult s = greedy_stabilize(g, dualize(g, inst.divisor), ro);
        t.expect(b.succeeded() == s.succeeded() && b.reason == s.reason, [&] { return inst.name + " outcome differs across duality"; });
        if (!b.succeeded()) continue;
        bool counts = true;
        for (Vertex i = 0; i < g.num_vertices(); ++i) counts = counts && -b.trace.aggregate[i] == s.trace.aggregate[i];
        t.expect(counts, [&] { return inst.name + " per-vertex counts differ"; });
        t.expect(s.trace.final_state == dualize(g, b.trace.final_state), [&] { return inst.name + " finals not dual"; });
    }
    const Graph g = Graph::build(2, {{0, 1}});
    const Divisor c{-1, -1};
    const RunResult b = borrowing_binge(g, c);
    const RunResult s = greedy_stabilize(g, dualize(g, c));
    t.expect(b.status == RunStatus::unwinnable && b.reason == UnwinnableReason::cycle && b.cycle_witness.has_value(),
             [] { return std::string("(-1,-1) binge gave no cycle witness"); });
    t.expect(s.status == RunStatus::unwinnable && s.cycle_witness.has_value(),
             [] { return std::string("dual (1,1) gave no cycle witness"); });
    if (b.cycle_witness && s.cycle_witness)
        t.expect(*s.cycle_witness == dualize(g, *b.cycle_witness), [] { return std::string("cycle witnesses not dual"); });
}

} // namespace

int main() {
    using Clock = std::chrono::steady_clock;
    const Corpus corpus = build_corpus();
    struct Criterion {
        int id;
        const char* name;
        double limit_seconds;
        std::function<void(Tally&)> run;
    };
    const std::vector<Criterion> criteria{
        {1, "intro example reproduction", 1.0, criterion_intro},
        {2, "star tightness sweep", 30.0, criterion_star},
        {3, "hybrid ratio sweep", 30.0, criterion_hybrid},
        {4, "random property suite", 120.0, [&](Tally& t) { criterion_properties(t, corpus); }},
        {5, "median-shift oracle suite", 30.0, criterion_lemma},
        {6, "duality suite", 120.0, [&](Tally& t) { criterion_duality(t, corpus); }},
    };
    std::cout << "corpus: " << corpus.winnable.size() << " winnable of " << corpus.all.size() << " generated\n";
    int failed = 0;
    for (const auto& c : criteria) {
        Tally t;
        const auto start = Clock::now();
        try {
            c.run(t);
        } catch (const std::exception& e) {
            t.expect(false, [&] { return std::string("exception: ") + e.what(); });
        }
        const double secs = std::chrono::duration<double>(Clock::now() - start).count();
        const bool in_time = secs < c.limit_seconds;
        const bool pass = t.ok() && in_time;
        failed += pass ? 0 : 1;
        char timing[64];
        std::snprintf(timing, sizeof timing, "%.3f s, limit %.0f s", secs, c.limit_seconds);
        std::cout << (pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name << " (" << timing << ") "
                  << t.summary() << (in_time ? "" : "\n    time limit exceeded") << "\n";
    }
    return failed == 0 ? 0 : 1;
}
