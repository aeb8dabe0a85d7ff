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

#include "qgraph/graph_state.h"

#include <numeric>
#include <string>
#include <vector>

#include "qgraph/errors.h"

namespace qgraph {

GateCounters GateCounters::operator+(const GateCounters &other) const {
    return {one_qubit_gates + other.one_qubit_gates, two_qubit_gates + other.two_qubit_gates,
            measurements + other.measurements, ancillas_used + other.ancillas_used};
}

GateCounters GateCounters::operator-(const GateCounters &other) const {
    return {one_qubit_gates - other.one_qubit_gates, two_qubit_gates - other.two_qubit_gates,
            measurements - other.measurements, ancillas_used - other.ancillas_used};
}

PauliString graph_stabilizer(const Graph &g, std::size_t v) {
    g.check_vertex(v);
    PauliString k(g.num_vertices());
    k.xs.set(v, true);
    k.zs = g.neighbors(v);
    k.negative = g.has_loop(v);
    return k;
}

GraphRegister GraphRegister::prepare(const Graph &g, std::uint64_t seed) {
    GraphRegister r;
    r.tableau_ = Tableau::new_plus(g.num_vertices(), seed);
    r.shadow_ = Graph(g.num_vertices());
    for (std::size_t v = 0; v < g.num_vertices(); v++) {
        if (g.has_loop(v)) {
            r.cz(v, v);
        }
    }
    for (std::size_t u = 0; u < g.num_vertices(); u++) {
        for (std::size_t v : g.neighbor_list(u)) {
            if (v > u) {
                r.cz(u, v);
            }
        }
    }
    return r;
}

GraphRegister GraphRegister::prepare_complete(std::size_t n, std::uint64_t seed) {
    if (n == 0) {
        throw PreconditionError("prepare_complete needs at least one vertex");
    }
    GraphRegister r = prepare(Graph(n), seed);
    std::vector<std::size_t> all(n);
    std::iota(all.begin(), all.end(), std::size_t{0});
    r.intraset_complement(all);
    return r;
}

void GraphRegister::gate(Gate g, std::size_t q) {
    tableau_.apply(g, q);
    counters_.one_qubit_gates++;
}

void GraphRegister::gate(Gate g, std::size_t a, std::size_t b) {
    tableau_.apply(g, a, b);
    counters_.two_qubit_gates++;
}

std::size_t GraphRegister::add_vertex() {
    tableau_.add_qubit_plus();
    return shadow_.add_vertex();
}

void GraphRegister::apply_pauli(PauliKind p, std::size_t a) {
    shadow_.check_vertex(a);
    gate(p == PauliKind::X ? Gate::X : p == PauliKind::Y ? Gate::Y : Gate::Z, a);
    pauli_rule(shadow_, p, a);
}

void GraphRegister::cz(std::size_t u, std::size_t v) {
    shadow_.check_vertex(u);
    shadow_.check_vertex(v);
    if (u == v) {
        gate(Gate::Z, u);
    } else {
        gate(Gate::CZ, u, v);
    }
    shadow_.toggle_edge(u, v);
}

void GraphRegister::cnot(std::size_t control, std::size_t target) {
    shadow_.check_vertex(control);
    shadow_.check_vertex(target);
    if (control == target) {
        throw PreconditionError("cnot requires distinct control and target");
    }
    gate(Gate::CNOT, control, target);
    cnot_rule(shadow_, control, target);
}

void GraphRegister::fx_gates(std::size_t a, std::size_t b) {
    gate(Gate::H, a);
    gate(Gate::H, b);
    gate(Gate::CZ, a, b);
    gate(Gate::H, a);
    gate(Gate::H, b);
}

void GraphRegister::fx(std::size_t a, std::size_t b) {
    shadow_.check_vertex(a);
    shadow_.check_vertex(b);
    if (a == b) {
        throw PreconditionError("fx requires distinct vertices");
    }
    if (shadow_.has_edge(a, b)) {
        throw PreconditionError("fx is undefined on adjacent vertices " + std::to_string(a) + " and " +
                                std::to_string(b) + "; use fx_wrapped (fxw)");
    }
    fx_gates(a, b);
    fx_rule(shadow_, a, b);
}

void GraphRegister::fx_wrapped(std::size_t a, std::size_t b) {
    shadow_.check_vertex(a);
    shadow_.check_vertex(b);
    if (a == b) {
        throw PreconditionError("fx requires distinct vertices");
    }
    if (!shadow_.has_edge(a, b)) {
        fx(a, b);
        return;
    }
    cz(a, b);
    fx(a, b);
    cz(a, b);
}

void GraphRegister::local_complement(std::size_t a) {
    std::vector<std::size_t> nbrs = shadow_.neighbor_list(a);
    gate(Gate::SQRT_MINUS_IX, a);
    for (std::size_t b : nbrs) {
        gate(Gate::SQRT_IZ, b);
    }
    local_comp_rule(shadow_, a);
}

void GraphRegister::release_ancilla(std::size_t q) {
    if (tableau_.contains(PauliString::single(tableau_.num_qubits(), q, 'X')) != Membership::kPlus) {
        throw IntegrityError("ancilla qubit " + std::to_string(q) + " is not back in |+>");
    }
    tableau_.discard_qubit(q, 'X');
}

void GraphRegister::interset_complement(std::span<const std::size_t> s1, std::span<const std::size_t> s2) {
    // Validates before touching the tableau.
    Graph next = shadow_;
    iac_rule(next, s1, s2);

    std::size_t a = tableau_.add_qubit_plus();
    std::size_t b = tableau_.add_qubit_plus();
    counters_.ancillas_used += 2;
    for (std::size_t v : s1) {
        gate(Gate::CZ, a, v);
    }
    for (std::size_t v : s2) {
        gate(Gate::CZ, b, v);
    }
    fx_gates(a, b);
    for (std::size_t v : s1) {
        gate(Gate::CZ, a, v);
    }
    for (std::size_t v : s2) {
        gate(Gate::CZ, b, v);
    }
    release_ancilla(b);
    release_ancilla(a);
    shadow_ = std::move(next);
}

void GraphRegister::intraset_complement(std::span<const std::size_t> s) {
    Graph next = shadow_;
    iec_rule(next, s);

    std::size_t a = tableau_.add_qubit_plus();
    counters_.ancillas_used += 1;
    for (std::size_t v : s) {
        gate(Gate::CZ, a, v);
    }
    // Local complementation about a, whose neighbourhood is exactly s.
    gate(Gate::SQRT_MINUS_IX, a);
    for (std::size_t v : s) {
        gate(Gate::SQRT_IZ, v);
    }
    for (std::size_t v : s) {
        gate(Gate::CZ, a, v);
    }
    release_ancilla(a);
    shadow_ = std::move(next);
}

int GraphRegister::delete_vertex(std::size_t v, DeleteMode mode) {
    shadow_.check_vertex(v);
    MeasureResult m = tableau_.measure(PauliString::single(tableau_.num_qubits(), v, 'Z'));
    counters_.measurements++;
    int bit = m.outcome == 1 ? 0 : 1;
    int residue = bit;
    if (mode == DeleteMode::kCorrected && bit == 1) {
        for (std::size_t u : shadow_.neighbor_list(v)) {
            gate(Gate::Z, u);
        }
        residue = 0;
    }
    tableau_.discard_qubit(v, 'Z');
    shadow_ = z_delete_rule(shadow_, v, residue);
    return bit;
}

bool GraphRegister::verify() const {
    if (tableau_.num_qubits() != shadow_.num_vertices()) {
        return false;
    }
    StabilizerBasis basis(tableau_.generators());
    for (std::size_t v = 0; v < shadow_.num_vertices(); v++) {
        if (basis.test(graph_stabilizer(shadow_, v)) != Membership::kPlus) {
            return false;
        }
    }
    return true;
}

GraphRegister tensor(const GraphRegister &a, const GraphRegister &b) {
    GraphRegister r;
    r.tableau_ = tensor(a.tableau_, b.tableau_);
    r.shadow_ = disjoint_union(a.shadow_, b.shadow_);
    r.counters_ = a.counters_ + b.counters_;
    return r;
}

}  // namespace qgraph
