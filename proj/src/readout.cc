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

#include "qgraph/readout.h"

#include <random>
#include <string>

#include "qgraph/errors.h"

namespace qgraph {

namespace {

int x_bit(Tableau &t, std::size_t q) {
    return t.measure(PauliString::single(t.num_qubits(), q, 'X')).outcome == 1 ? 0 : 1;
}

}  // namespace

PreparedCopies::PreparedCopies(Graph g, std::uint64_t seed, std::size_t max_copies)
    : graph_(std::move(g)), seed_(seed), max_copies_(max_copies) {
}

GraphRegister PreparedCopies::take() {
    if (taken_ >= max_copies_) {
        throw ResourceExhausted("copy budget of " + std::to_string(max_copies_) + " exhausted");
    }
    return GraphRegister::prepare(graph_, seed_ + taken_++);
}

RegisterCopies::RegisterCopies(GraphRegister source, std::uint64_t seed, std::size_t max_copies)
    : source_(std::move(source)), seed_(seed), max_copies_(max_copies) {
}

GraphRegister RegisterCopies::take() {
    if (taken_ >= max_copies_) {
        throw ResourceExhausted("copy budget of " + std::to_string(max_copies_) + " exhausted");
    }
    GraphRegister copy = source_;
    copy.mutable_tableau().reseed(seed_ + taken_++);
    return copy;
}

ReadoutRound linked_round(CopySource &source, std::uint64_t seed) {
    std::size_t n = source.num_vertices();
    GraphRegister a = source.take();
    GraphRegister c = source.take();
    Tableau t = tensor(a.tableau(), tensor(Tableau::new_plus(n, 0), c.tableau()));
    t.reseed(seed);

    ReadoutRound r{gf2::BitVector(n), gf2::BitVector(n), gf2::BitVector(n)};
    for (std::size_t i = 0; i < n; i++) {
        t.apply(Gate::CZ, i, n + i);
        t.apply(Gate::CZ, n + i, 2 * n + i);
        r.a.set(i, x_bit(t, i));
        r.b.set(i, x_bit(t, n + i));
        r.c.set(i, x_bit(t, 2 * n + i));
    }
    return r;
}

gf2::BitMatrix recover_lambda(std::span<const ReadoutRound> rounds) {
    std::size_t n = rounds.size();
    gf2::BitMatrix b(n, n);
    for (std::size_t k = 0; k < n; k++) {
        if (rounds[k].b.size() != n) {
            throw ShapeError("need one round per vertex");
        }
        b.row(k) = rounds[k].b;
    }
    if (gf2::rank(b) != n) {
        throw IntegrityError("readout rounds do not determine the adjacency matrix");
    }
    gf2::BitMatrix lambda(n, n);
    for (std::size_t i = 0; i < n; i++) {
        gf2::BitVector rhs(n);
        for (std::size_t k = 0; k < n; k++) {
            rhs.set(k, rounds[k].a.get(i) != rounds[k].c.get(i));
        }
        auto x = gf2::solve(b, rhs);
        if (!x) {
            throw IntegrityError("readout equations are inconsistent");
        }
        for (std::size_t j = 0; j < n; j++) {
            lambda.set(j, i, x->get(j));
        }
    }
    if (!lambda.is_symmetric()) {
        throw IntegrityError("recovered adjacency matrix is not symmetric");
    }
    for (std::size_t i = 0; i < n; i++) {
        if (lambda.get(i, i)) {
            throw IntegrityError("recovered adjacency matrix has a nonzero diagonal");
        }
    }
    return lambda;
}

ReadoutRun readout(CopySource &source, std::uint64_t seed, std::size_t max_rounds) {
    std::size_t n = source.num_vertices();
    if (max_rounds == 0) {
        max_rounds = 50 * n;
    }
    std::mt19937_64 seeds(seed);
    ReadoutRun run;

    while (run.rounds.size() < n) {
        if (run.iterations >= max_rounds) {
            throw ResourceExhausted("readout did not reach full rank within " + std::to_string(max_rounds) +
                                    " rounds");
        }
        ReadoutRound r = linked_round(source, seeds());
        run.iterations++;
        run.copies_used += 2;
        run.counters.two_qubit_gates += 2 * n;
        run.counters.measurements += 3 * n;
        std::vector<gf2::BitVector> rows;
        for (const auto &kept : run.rounds) {
            rows.push_back(kept.b);
        }
        rows.push_back(r.b);
        if (gf2::rank(gf2::BitMatrix::from_rows(std::move(rows))) == run.rounds.size() + 1) {
            run.rounds.push_back(std::move(r));
        }
    }
    gf2::BitMatrix lambda = recover_lambda(run.rounds);

    GraphRegister last = source.take();
    run.copies_used++;
    Tableau &t = last.mutable_tableau();
    t.reseed(seeds());
    run.recovered = Graph(n);
    for (std::size_t i = 0; i < n; i++) {
        for (std::size_t j = i + 1; j < n; j++) {
            if (lambda.get(i, j)) {
                t.apply(Gate::CZ, i, j);
                run.counters.two_qubit_gates++;
                run.recovered.toggle_edge(i, j);
            }
        }
    }
    run.d = gf2::BitVector(n);
    for (std::size_t i = 0; i < n; i++) {
        MeasureResult m = t.measure(PauliString::single(n, i, 'X'));
        run.counters.measurements++;
        if (!m.deterministic) {
            throw IntegrityError("final readout copy is not a product of X eigenstates at qubit " +
                                 std::to_string(i));
        }
        if (m.outcome == -1) {
            run.d.set(i, true);
            run.recovered.toggle_loop(i);
        }
    }
    return run;
}

}  // namespace qgraph
