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

// Serial reference vs OpenMP kernels: BFS frontier expansion and batch
// lower-bound verification.

#include <benchmark/benchmark.h>

#include <vector>

#include "chipfire/families.hpp"
#include "chipfire/solver.hpp"

namespace {

using namespace chipfire;

// A dollar-game instance whose optimum sits a few levels deep.
Instance deep_instance(std::int64_t n) {
    Instance inst = hybrid_example(n, 2);
    return inst;
}

void BM_BfsSerial(benchmark::State& state) {
    const Instance inst = deep_instance(state.range(0));
    BfsOptions options;
    options.radius_cap = inst.expected->m0;
    for (auto _ : state) {
        auto r = bfs_min_moves_serial(inst.graph, inst.divisor, Target::stable, options);
        benchmark::DoNotOptimize(r.m_min);
        state.counters["states"] = static_cast<double>(r.states_visited);
    }
}

void BM_BfsParallel(benchmark::State& state) {
    const Instance inst = deep_instance(state.range(0));
    BfsOptions options;
    options.radius_cap = inst.expected->m0;
    for (auto _ : state) {
        auto r = bfs_min_moves(inst.graph, inst.divisor, Target::stable, options);
        benchmark::DoNotOptimize(r.m_min);
        state.counters["states"] = static_cast<double>(r.states_visited);
    }
}

struct Corpus {
    std::vector<Instance> instances;
    std::vector<BatchItem> items;
};

Corpus make_corpus(std::size_t count) {
    Corpus c;
    c.instances.reserve(count);
    for (std::uint64_t seed = 0; c.instances.size() < count; ++seed) {
        Instance inst = random_instance(2 + static_cast<std::int64_t>(seed % 5), Rational(1, 2), {-3, 3}, seed);
        if (borrowing_binge(inst.graph, inst.divisor, RunOptions{{}, 100'000, false}).succeeded())
            c.instances.push_back(std::move(inst));
    }
    for (const Instance& inst : c.instances) c.items.push_back({&inst.graph, inst.divisor, Side::dollar});
    return c;
}

void BM_BatchSerial(benchmark::State& state) {
    const Corpus corpus = make_corpus(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(analyze_batch_serial(corpus.items));
}

void BM_BatchParallel(benchmark::State& state) {
    const Corpus corpus = make_corpus(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(analyze_batch(corpus.items));
}

} // namespace

BENCHMARK(BM_BfsSerial)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BfsParallel)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BatchSerial)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BatchParallel)->Arg(200)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
