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
#include <optional>
#include <random>
#include <span>
#include <string_view>
#include <vector>

#include "qgraph/dyadic.h"
#include "qgraph/gf2.h"
#include "qgraph/pauli_string.h"

namespace qgraph {

/// The Clifford gates the tableau understands. Heisenberg actions (P -> U P U^dag):
///   H:             X <-> Z
///   S:             X -> Y,  Z -> Z
///   X, Y, Z:       the Pauli itself
///   CZ(a,b):       X_a -> X_a Z_b, X_b -> Z_a X_b
///   CNOT(a->b):    X_a -> X_a X_b, Z_b -> Z_a Z_b
///   SQRT_MINUS_IX: (I - iX)/sqrt2;  Z -> -Y, X -> X
///   SQRT_IZ:       (I + iZ)/sqrt2;  X -> -Y, Z -> Z
enum class Gate { H, S, X, Y, Z, CZ, CNOT, SQRT_MINUS_IX, SQRT_IZ };

bool is_two_qubit(Gate g);
std::string_view gate_name(Gate g);

enum class Membership { kPlus, kMinus, kNo };

struct MeasureResult {
    int outcome;  // +1 or -1
    bool deterministic;
};

/// Generator-only stabilizer tableau: n commuting, independent signed Pauli
/// strings whose joint +1 eigenspace is the represented state.
///
/// Randomness for measurements comes from a per-tableau mt19937_64 stream, so
/// a tableau replays identically from the same seed and gate sequence.
class Tableau {
   public:
    Tableau() : Tableau(0, 0) {
    }
    /// |+>^n: generators X_0 .. X_{n-1}.
    static Tableau new_plus(std::size_t n, std::uint64_t seed);
    /// Wraps explicit generators. Throws if they fail to commute or are dependent.
    static Tableau from_generators(std::vector<PauliString> generators, std::uint64_t seed);

    std::size_t num_qubits() const {
        return generators_.size();
    }
    const std::vector<PauliString> &generators() const {
        return generators_;
    }
    /// Raw access for fault-injection tests; callers own the invariants.
    PauliString &mutable_generator(std::size_t i) {
        return generators_.at(i);
    }

    void apply(Gate gate, std::size_t target);
    /// CZ(a, a) is routed to Z(a). CNOT requires distinct qubits.
    void apply(Gate gate, std::size_t a, std::size_t b);

    /// Measures the observable `p`. Deterministic outcomes leave the tableau
    /// untouched; random ones draw from the tableau's stream and install +-p.
    MeasureResult measure(const PauliString &p);

    /// Whether +p, -p, or neither belongs to the stabilizer group. Read-only.
    Membership contains(const PauliString &p) const;

    /// Appends a qubit in |+> (generator X on the new qubit).
    std::size_t add_qubit_plus();

    /// Removes qubit `q`, which must be in an eigenstate of the single-qubit
    /// `axis` Pauli ('X' or 'Z'). Returns that eigenvalue.
    int discard_qubit(std::size_t q, char axis);

    /// Qubit q's content moves to perm[q].
    Tableau permuted(std::span<const std::size_t> perm) const;

    void reseed(std::uint64_t seed) {
        rng_.seed(seed);
    }
    std::mt19937_64 &rng() {
        return rng_;
    }

    /// Generators pairwise commute and stack to full rank.
    bool is_valid() const;

    friend Tableau tensor(const Tableau &a, const Tableau &b);

   private:
    Tableau(std::size_t n, std::uint64_t seed);
    void check_qubit(std::size_t q) const;
    std::optional<gf2::BitVector> combination_for(const PauliString &p) const;

    std::vector<PauliString> generators_;
    std::mt19937_64 rng_;
};

/// Disjoint union: a's qubits first, then b's. The result continues a's stream.
Tableau tensor(const Tableau &a, const Tableau &b);

/// |<psi_a|psi_b>|^2, exactly: 0 or 2^(k - n) with k the dimension of the
/// intersection of the two stabilizer groups.
Dyadic inner_product_mag2(const Tableau &a, const Tableau &b);

/// Row-reduced copy of a stabilizer group for repeated membership queries.
/// Each reduced row is an exact group element (signs tracked), so a query
/// costs one pass over the pivots instead of a fresh elimination.
class StabilizerBasis {
   public:
    explicit StabilizerBasis(std::span<const PauliString> generators);
    Membership test(const PauliString &p) const;

   private:
    std::size_t num_qubits_ = 0;
    std::vector<PauliString> rows_;
    std::vector<std::size_t> pivots_;  // column in the (x | z) layout
};

}  // namespace qgraph
