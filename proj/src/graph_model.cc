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

#include "qgraph/graph_model.h"

#include <string>

#include "qgraph/errors.h"

namespace qgraph {

namespace {

void check_set(const Graph &g, std::span<const std::size_t> s, std::vector<bool> &seen) {
    for (std::size_t v : s) {
        g.check_vertex(v);
        if (seen[v]) {
            throw PreconditionError("vertex " + std::to_string(v) + " appears twice across the given sets");
        }
        seen[v] = true;
    }
}

}  // namespace

Graph::Graph(std::size_t n) : adj_(n, n), loops_(n) {
}

Graph Graph::from_edges(std::size_t n, std::span<const std::pair<std::size_t, std::size_t>> edges,
                        std::span<const std::size_t> loops) {
    Graph g(n);
    for (auto [u, v] : edges) {
        g.toggle_edge(u, v);
    }
    for (std::size_t v : loops) {
        g.toggle_loop(v);
    }
    return g;
}

Graph Graph::complete(std::size_t n) {
    Graph g(n);
    for (std::size_t u = 0; u < n; u++) {
        for (std::size_t v = u + 1; v < n; v++) {
            g.toggle_edge(u, v);
        }
    }
    return g;
}

void Graph::check_vertex(std::size_t v) const {
    if (v >= num_vertices()) {
        throw IndexError("vertex " + std::to_string(v) + " out of range for graph with " +
                         std::to_string(num_vertices()) + " vertices");
    }
}

std::size_t Graph::num_edges() const {
    std::size_t twice = 0;
    for (std::size_t v = 0; v < num_vertices(); v++) {
        twice += adj_.row(v).popcount();
    }
    return twice / 2;
}

bool Graph::has_edge(std::size_t u, std::size_t v) const {
    check_vertex(u);
    check_vertex(v);
    return u == v ? loops_.get(u) : adj_.get(u, v);
}

bool Graph::has_loop(std::size_t v) const {
    check_vertex(v);
    return loops_.get(v);
}

const gf2::BitVector &Graph::neighbors(std::size_t v) const {
    check_vertex(v);
    return adj_.row(v);
}

std::vector<std::size_t> Graph::neighbor_list(std::size_t v) const {
    const auto &row = neighbors(v);
    std::vector<std::size_t> out;
    for (std::size_t u = row.find_next(0); u < num_vertices(); u = row.find_next(u + 1)) {
        out.push_back(u);
    }
    return out;
}

std::size_t Graph::degree(std::size_t v) const {
    return neighbors(v).popcount();
}

std::size_t Graph::add_vertex() {
    std::size_t n = num_vertices();
    gf2::BitMatrix grown(n + 1, n + 1);
    for (std::size_t u = 0; u < n; u++) {
        const auto &row = adj_.row(u);
        for (std::size_t v = row.find_next(0); v < n; v = row.find_next(v + 1)) {
            grown.set(u, v, true);
        }
    }
    adj_ = std::move(grown);
    loops_.push_back(false);
    return n;
}

void Graph::toggle_edge(std::size_t u, std::size_t v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) {
        loops_.flip(u);
        return;
    }
    adj_.flip(u, v);
    adj_.flip(v, u);
}

void Graph::toggle_loop(std::size_t v) {
    check_vertex(v);
    loops_.flip(v);
}

void pauli_rule(Graph &g, PauliKind p, std::size_t a) {
    g.check_vertex(a);
    if (p == PauliKind::Z || p == PauliKind::Y) {
        g.toggle_loop(a);
    }
    if (p == PauliKind::X || p == PauliKind::Y) {
        for (std::size_t v : g.neighbor_list(a)) {
            g.toggle_loop(v);
        }
    }
}

void cnot_rule(Graph &g, std::size_t a, std::size_t b) {
    g.check_vertex(a);
    g.check_vertex(b);
    if (a == b) {
        throw PreconditionError("cnot requires distinct control and target");
    }
    for (std::size_t v : g.neighbor_list(b)) {
        g.toggle_edge(a, v);
    }
    if (g.has_loop(b)) {
        g.toggle_loop(a);
    }
}

void fx_rule(Graph &g, std::size_t a, std::size_t b) {
    g.check_vertex(a);
    g.check_vertex(b);
    if (a == b) {
        throw PreconditionError("fx requires distinct vertices");
    }
    if (g.has_edge(a, b)) {
        throw PreconditionError("fx is undefined on adjacent vertices " + std::to_string(a) + " and " +
                                std::to_string(b) + "; use the wrapped form (fxw)");
    }
    std::size_t n = g.num_vertices();
    gf2::BitVector na = g.neighbors(a);
    gf2::BitVector nb = g.neighbors(b);
    // C u F = N(a) and D u F = N(b), since a and b are not neighbours.
    for (std::size_t v = na.find_next(0); v < n; v = na.find_next(v + 1)) {
        for (std::size_t u = nb.find_next(0); u < n; u = nb.find_next(u + 1)) {
            g.toggle_edge(v, u);
        }
    }
    if (g.has_loop(b)) {
        for (std::size_t v = na.find_next(0); v < n; v = na.find_next(v + 1)) {
            g.toggle_loop(v);
        }
    }
    if (g.has_loop(a)) {
        for (std::size_t u = nb.find_next(0); u < n; u = nb.find_next(u + 1)) {
            g.toggle_loop(u);
        }
    }
}

void local_comp_rule(Graph &g, std::size_t a) {
    std::vector<std::size_t> nbrs = g.neighbor_list(a);
    for (std::size_t i = 0; i < nbrs.size(); i++) {
        for (std::size_t j = i + 1; j < nbrs.size(); j++) {
            g.toggle_edge(nbrs[i], nbrs[j]);
        }
    }
    if (g.has_loop(a)) {
        for (std::size_t v : nbrs) {
            g.toggle_loop(v);
        }
    }
}

void iac_rule(Graph &g, std::span<const std::size_t> s1, std::span<const std::size_t> s2) {
    std::vector<bool> seen(g.num_vertices(), false);
    check_set(g, s1, seen);
    check_set(g, s2, seen);
    for (std::size_t v : s1) {
        for (std::size_t u : s2) {
            g.toggle_edge(v, u);
        }
    }
}

void iec_rule(Graph &g, std::span<const std::size_t> s) {
    std::vector<bool> seen(g.num_vertices(), false);
    check_set(g, s, seen);
    for (std::size_t i = 0; i < s.size(); i++) {
        for (std::size_t j = i + 1; j < s.size(); j++) {
            g.toggle_edge(s[i], s[j]);
        }
    }
}

Graph z_delete_rule(const Graph &g, std::size_t v, int outcome) {
    g.check_vertex(v);
    if (outcome != 0 && outcome != 1) {
        throw PreconditionError("z_delete_rule: outcome must be 0 or 1");
    }
    std::size_t n = g.num_vertices();
    Graph residue = g;
    if (outcome == 1) {
        for (std::size_t u : g.neighbor_list(v)) {
            residue.toggle_loop(u);
        }
    }
    auto shift = [v](std::size_t u) { return u < v ? u : u - 1; };
    Graph out(n - 1);
    for (std::size_t u = 0; u < n; u++) {
        if (u == v) {
            continue;
        }
        if (residue.has_loop(u)) {
            out.toggle_loop(shift(u));
        }
        for (std::size_t w = u + 1; w < n; w++) {
            if (w != v && residue.has_edge(u, w)) {
                out.toggle_edge(shift(u), shift(w));
            }
        }
    }
    return out;
}

Graph disjoint_union(const Graph &a, const Graph &b) {
    std::size_t na = a.num_vertices();
    Graph out(na + b.num_vertices());
    for (int side = 0; side < 2; side++) {
        const Graph *part = side == 0 ? &a : &b;
        std::size_t offset = side == 0 ? 0 : na;
        for (std::size_t u = 0; u < part->num_vertices(); u++) {
            if (part->has_loop(u)) {
                out.toggle_loop(u + offset);
            }
            for (std::size_t w : part->neighbor_list(u)) {
                if (w > u) {
                    out.toggle_edge(u + offset, w + offset);
                }
            }
        }
    }
    return out;
}

void check_permutation(std::span<const std::size_t> perm, std::size_t n) {
    if (perm.size() != n) {
        throw PreconditionError("permutation has " + std::to_string(perm.size()) + " entries, expected " +
                                std::to_string(n));
    }
    std::vector<bool> seen(n, false);
    for (std::size_t v : perm) {
        if (v >= n || seen[v]) {
            throw PreconditionError("malformed permutation");
        }
        seen[v] = true;
    }
}

Graph permute(const Graph &g, std::span<const std::size_t> perm) {
    std::size_t n = g.num_vertices();
    check_permutation(perm, n);
    Graph out(n);
    for (std::size_t u = 0; u < n; u++) {
        if (g.has_loop(u)) {
            out.toggle_loop(perm[u]);
        }
        for (std::size_t w : g.neighbor_list(u)) {
            if (w > u) {
                out.toggle_edge(perm[u], perm[w]);
            }
        }
    }
    return out;
}

bool is_automorphism(const Graph &g, std::span<const std::size_t> perm) {
    return permute(g, perm) == g;
}

DegreeParity degree_parity(const Graph &g) {
    DegreeParity p{true, true, (g.num_loops() & 1) != 0};
    for (std::size_t v = 0; v < g.num_vertices(); v++) {
        if (g.degree(v) & 1) {
            p.all_even = false;
        } else {
            p.all_odd = false;
        }
    }
    return p;
}

}  // namespace qgraph
