// Copyright 2026 The qgraph Authors
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

#include <benchmark/benchmark.h>

#include <random>

#include "qgraph/dense_sim.h"
#include "qgraph/graph_state.h"
#include "qgraph/protocols.h"

namespace {

using qgraph::Gate;
using qgraph::dense::StateVector;

qgraph::Graph random_graph(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    qgraph::Graph g(n);
    for (std::size_t u = 0; u < n; u++) {
        for (std::size_t v = u + 1; v < n; v++) {
            if (rng() & 1) {
                g.toggle_edge(u, v);
            }
        }
    }
    return g;
}

template <bool Parallel>
void BM_DenseLayer(benchmark::State &state) {
    std::size_t n = static_cast<std::size_t>(state.range(0));
    StateVector v = qgraph::dense::graph_state_vector(random_graph(n, 7));
    for (auto _ : state) {
        for (std::size_t q = 0; q < n; q++) {
            if constexpr (Parallel) {
                qgraph::dense::apply_gate(v, Gate::H, q);
                qgraph::dense::apply_gate(v, Gate::CZ, q, (q + 1) % n);
            } else {
                qgraph::dense::apply_gate_serial(v, Gate::H, q);
                qgraph::dense::apply_gate_serial(v, Gate::CZ, q, (q + 1) % n);
            }
        }
        benchmark::DoNotOptimize(v.amplitudes().data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(2 * n));
}

template <bool Parallel>
void BM_DenseOverlap(benchmark::State &state) {
    std::size_t n = static_cast<std::size_t>(state.range(0));
    StateVector a = qgraph::dense::graph_state_vector(random_graph(n, 1));
    StateVector b = qgraph::dense::graph_state_vector(random_graph(n, 2));
    for (auto _ : state) {
        auto ov = Parallel ? qgraph::dense::overlap(a, b) : qgraph::dense::overlap_serial(a, b);
        benchmark::DoNotOptimize(ov);
    }
}

template <bool Parallel>
void BM_VertexCompareTrials(benchmark::State &state) {
    std::size_t n = static_cast<std::size_t>(state.range(0));
    auto reg = qgraph::GraphRegister::prepare(random_graph(n, 3), 3);
    std::function<qgraph::TrialRecord(std::uint64_t)> trial = [&reg](std::uint64_t s) {
        qgraph::GraphRegister copy = reg;
        return qgraph::vertex_compare(copy, 0, 1, s);
    };
    for (auto _ : state) {
        auto records = Parallel ? qgraph::run_trials(256, 11, trial) : qgraph::run_trials_serial(256, 11, trial);
        benchmark::DoNotOptimize(records.data());
    }
}

}  // namespace

BENCHMARK(BM_DenseLayer<false>)->Arg(8)->Arg(10)->Arg(12);
BENCHMARK(BM_DenseLayer<true>)->Arg(8)->Arg(10)->Arg(12);
BENCHMARK(BM_DenseOverlap<false>)->Arg(10)->Arg(12);
BENCHMARK(BM_DenseOverlap<true>)->Arg(10)->Arg(12);
BENCHMARK(BM_VertexCompareTrials<false>)->Arg(16)->Arg(64);
BENCHMARK(BM_VertexCompareTrials<true>)->Arg(16)->Arg(64);

BENCHMARK_MAIN();
