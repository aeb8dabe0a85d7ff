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

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qgraph/dyadic.h"
#include "qgraph/graph_state.h"

namespace qgraph {

/// One run of a probabilistic protocol: what was sampled and the exact law it
/// was sampled from.
struct TrialRecord {
    std::string protocol;
    std::string outcome;
    /// Every possible outcome with its exact probability, in a fixed order.
    std::vector<std::pair<std::string, Dyadic>> probabilities;
    bool deterministic = false;
    std::uint64_t seed = 0;
    std::size_t copies = 0;

    /// Zero for outcomes not listed.
    Dyadic probability_of(std::string_view outcome_name) const;
};

struct OverlapResult {
    Dyadic mag2;
    /// The registers hold different numbers of vertices; mag2 is then 0.
    bool size_mismatch = false;
};

/// |<G1|G2>|^2 from the two tableaus.
OverlapResult overlap_mag2(const GraphRegister &r1, const GraphRegister &r2);

/// The same quantity for two graphs computed independently of any tableau:
/// <G1|G2> = 2^-n sum_x (-1)^{q(x)} with q the cut form of the symmetric difference.
Dyadic overlap_via_char_sum(const Graph &g1, const Graph &g2);

/// Draws true with probability p exactly, consuming ceil(k / 64) words for p = m / 2^k.
bool sample_bernoulli(const Dyadic &p, std::mt19937_64 &rng);

/// Swap-test outcome law: "Different" with probability (1 - |<G1|G2>|^2) / 2.
/// Neither register is disturbed; unequal sizes give "Different" outright.
TrialRecord equality_test(const GraphRegister &r1, const GraphRegister &r2, std::uint64_t seed);

/// Controlled-permutation outcome law: "-1" with probability (1 - |<G|PG>|^2) / 2.
TrialRecord automorphism_test(const GraphRegister &r, std::span<const std::size_t> perm, std::uint64_t seed);

/// Measures X_a X_b, or Y_a Y_b when a and b are adjacent in the shadow.
/// Outcomes "+1" and "-1".
TrialRecord vertex_compare(GraphRegister &r, std::size_t a, std::size_t b, std::uint64_t seed);

enum class ParityKind {
    /// Every degree even: measures the product of X over all qubits.
    kEven,
    /// Every degree odd: measures the product of Y over all qubits.
    kOdd,
};

/// Measures the parity observable on both copies. Outcomes "Consistent(+1)",
/// "Consistent(-1)" and "Mismatch".
TrialRecord degree_parity_test(GraphRegister &r1, GraphRegister &r2, ParityKind kind, std::uint64_t seed);

/// Single-copy variant for callers that already know the sign the observable
/// takes on a passing graph (see parity_sign). A different outcome is
/// reported as "Mismatch".
TrialRecord degree_parity_single(GraphRegister &r, ParityKind kind, int expected_sign, std::uint64_t seed);

/// The eigenvalue the parity observable has on a graph that passes the test:
/// (-1)^{|E| + s} for an Euler graph, and (-1)^{s + #{v : deg v = 1 mod 4}}
/// for an all-odd graph.
int parity_sign(const Graph &g, ParityKind kind);

/// Runs `trial(seed + i)` for i in [0, trials). The OpenMP version returns the
/// same records in the same order and rethrows the lowest-index exception.
std::vector<TrialRecord> run_trials(std::size_t trials, std::uint64_t seed,
                                    const std::function<TrialRecord(std::uint64_t)> &trial);
std::vector<TrialRecord> run_trials_serial(std::size_t trials, std::uint64_t seed,
                                           const std::function<TrialRecord(std::uint64_t)> &trial);

}  // namespace qgraph
