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
#include <span>

#include "qgraph/graph_model.h"
#include "qgraph/tableau.h"

namespace qgraph {

/// Elementary-gate accounting in the circuit model. Measurements are counted
/// apart from gates; ancillas counts qubits borrowed and returned.
struct GateCounters {
    std::size_t one_qubit_gates = 0;
    std::size_t two_qubit_gates = 0;
    std::size_t measurements = 0;
    std::size_t ancillas_used = 0;

    GateCounters operator+(const GateCounters &other) const;
    GateCounters operator-(const GateCounters &other) const;
    bool operator==(const GateCounters &other) const = default;
};

enum class DeleteMode {
    /// Measure and drop; an outcome of 1 leaves loops on the former neighbours.
    kBlind,
    /// Also undo the residue with Z gates on the former neighbours.
    kCorrected,
};

/// K_G^v for a graph with self-loops: (-1)^{loop(v)} X_v prod_{u in N(v)\v} Z_u.
PauliString graph_stabilizer(const Graph &g, std::size_t v);

/// A graph held as a simulated graph state.
///
/// The register pairs a stabilizer tableau with a classical shadow of the graph
/// it encodes and keeps them in lock-step: every operation applies its gate
/// sequence to the tableau and the matching rewrite rule to the shadow. The
/// shadow is also what lets the register apply operations whose circuit depends
/// on a neighbourhood (local complementation, corrected deletion).
class GraphRegister {
   public:
    GraphRegister() = default;

    /// |+>^n, then Z on each looped vertex and CZ along each edge.
    static GraphRegister prepare(const Graph &g, std::uint64_t seed);
    /// K_n through one intraset complementation: 2n two-qubit gates instead of n(n-1)/2.
    static GraphRegister prepare_complete(std::size_t n, std::uint64_t seed);

    std::size_t num_vertices() const {
        return shadow_.num_vertices();
    }
    const Tableau &tableau() const {
        return tableau_;
    }
    /// Direct tableau access, for fault injection and measurement protocols.
    Tableau &mutable_tableau() {
        return tableau_;
    }
    const Graph &shadow() const {
        return shadow_;
    }
    const GateCounters &counters() const {
        return counters_;
    }

    /// Appends an isolated vertex (a fresh |+> qubit) and returns its id.
    std::size_t add_vertex();

    void apply_pauli(PauliKind p, std::size_t a);
    /// u == v means Z on u, a loop toggle.
    void cz(std::size_t u, std::size_t v);
    void cnot(std::size_t control, std::size_t target);
    /// H_a H_b CZ H_a H_b. Requires a and b non-adjacent in the shadow.
    void fx(std::size_t a, std::size_t b);
    /// CZ FX CZ when {a, b} is an edge, plain FX otherwise.
    void fx_wrapped(std::size_t a, std::size_t b);
    void local_complement(std::size_t a);
    void interset_complement(std::span<const std::size_t> s1, std::span<const std::size_t> s2);
    void intraset_complement(std::span<const std::size_t> s);

    /// Z-measures v and removes it; vertices above v shift down by one.
    /// Returns the outcome bit (0 for eigenvalue +1).
    int delete_vertex(std::size_t v, DeleteMode mode);

    /// Every shadow-derived K_G^v is a +1 stabilizer of the tableau.
    bool verify() const;

    friend GraphRegister tensor(const GraphRegister &a, const GraphRegister &b);

   private:
    void gate(Gate g, std::size_t q);
    void gate(Gate g, std::size_t a, std::size_t b);
    void fx_gates(std::size_t a, std::size_t b);
    void release_ancilla(std::size_t q);

    Tableau tableau_;
    Graph shadow_;
    GateCounters counters_;
};

/// Disjoint union of the two graphs; counters add up.
GraphRegister tensor(const GraphRegister &a, const GraphRegister &b);

}  // namespace qgraph
