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
#include <span>
#include <utility>
#include <vector>

#include "qgraph/gf2.h"

namespace qgraph {

/// Undirected graph with optional single self-loops and no multi-edges.
/// Off-diagonal edges live in a symmetric, zero-diagonal adjacency matrix;
/// self-loops live in their own bit vector.
class Graph {
   public:
    Graph() = default;
    explicit Graph(std::size_t n);
    static Graph from_edges(std::size_t n, std::span<const std::pair<std::size_t, std::size_t>> edges,
                            std::span<const std::size_t> loops = {});
    static Graph complete(std::size_t n);

    std::size_t num_vertices() const {
        return loops_.size();
    }
    std::size_t num_edges() const;
    std::size_t num_loops() const {
        return loops_.popcount();
    }
    bool has_edge(std::size_t u, std::size_t v) const;
    bool has_loop(std::size_t v) const;
    const gf2::BitMatrix &adjacency() const {
        return adj_;
    }
    const gf2::BitVector &loops() const {
        return loops_;
    }
    /// N(v) without v itself.
    const gf2::BitVector &neighbors(std::size_t v) const;
    std::vector<std::size_t> neighbor_list(std::size_t v) const;
    /// Off-diagonal degree; a self-loop would add two and is left out.
    std::size_t degree(std::size_t v) const;

    std::size_t add_vertex();
    /// u != v flips the edge; u == v flips the self-loop.
    void toggle_edge(std::size_t u, std::size_t v);
    void toggle_loop(std::size_t v);

    void check_vertex(std::size_t v) const;
    bool operator==(const Graph &other) const = default;

   private:
    gf2::BitMatrix adj_;
    gf2::BitVector loops_;
};

enum class PauliKind { X, Y, Z };

/// X_a: loops toggled on N(a)\a.  Y_a: on N(a) and a.  Z_a: on a.
void pauli_rule(Graph &g, PauliKind p, std::size_t a);

/// CNOT with control a and target b: toggles (a, v) for every v in N(b)\b, where
/// v == a toggles a's loop, and toggles a's loop again when b carries one.
void cnot_rule(Graph &g, std::size_t a, std::size_t b);

/// FX on non-adjacent a, b. With C = N(a) only, D = N(b) only, F = common
/// neighbours, toggles {v, u} for every ordered pair in (C u F) x (D u F); a pair
/// (f, f) toggles f's loop once while distinct F-F pairs cancel. A loop on b
/// toggles loops over C u F; a loop on a toggles loops over D u F.
void fx_rule(Graph &g, std::size_t a, std::size_t b);

/// Complements the edges among N(a)\a; if a has a loop, also toggles the loops of N(a)\a.
void local_comp_rule(Graph &g, std::size_t a);

/// Toggles every edge between the disjoint sets s1 and s2.
void iac_rule(Graph &g, std::span<const std::size_t> s1, std::span<const std::size_t> s2);

/// Toggles every edge between distinct members of s.
void iec_rule(Graph &g, std::span<const std::size_t> s);

/// Graph after a Z measurement of v with outcome bit `outcome` and no
/// correction: v and its edges vanish, vertices above v shift down by one, and
/// outcome 1 leaves toggled loops on the former N(v)\v.
Graph z_delete_rule(const Graph &g, std::size_t v, int outcome);

Graph disjoint_union(const Graph &a, const Graph &b);

/// Vertex v of `g` becomes vertex perm[v] of the result.
Graph permute(const Graph &g, std::span<const std::size_t> perm);
bool is_automorphism(const Graph &g, std::span<const std::size_t> perm);

struct DegreeParity {
    bool all_even;
    bool all_odd;
    bool loop_parity;  // parity of the number of self-loops
};
DegreeParity degree_parity(const Graph &g);

/// Throws PreconditionError unless `perm` is a bijection on [0, n).
void check_permutation(std::span<const std::size_t> perm, std::size_t n);

}  // namespace qgraph
