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

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "qgraph/graph_model.h"
#include "qgraph/pauli_string.h"
#include "qgraph/tableau.h"

namespace qgraph::dense {

using Amplitude = std::complex<double>;

inline constexpr std::size_t kMaxQubits = 12;

/// A dense n-qubit state with n <= kMaxQubits. Qubit q is bit q of the basis index.
class StateVector {
   public:
    StateVector() : StateVector(0) {
    }
    /// |0...0>.
    explicit StateVector(std::size_t num_qubits);
    static StateVector plus(std::size_t num_qubits);
    static StateVector from_amplitudes(std::size_t num_qubits, std::vector<Amplitude> amplitudes);

    std::size_t num_qubits() const {
        return num_qubits_;
    }
    std::size_t dim() const {
        return amplitudes_.size();
    }
    const std::vector<Amplitude> &amplitudes() const {
        return amplitudes_;
    }
    std::vector<Amplitude> &amplitudes() {
        return amplitudes_;
    }
    Amplitude operator[](std::size_t k) const {
        return amplitudes_[k];
    }

    double norm2() const;
    void normalize();

   private:
    std::size_t num_qubits_;
    std::vector<Amplitude> amplitudes_;
};

/// Amplitude of S is 2^{-n/2} (-1)^{edges inside S + loops in S}.
StateVector graph_state_vector(const Graph &g);

/// Runs the phase oracle |S, y> -> |S, y + |E_S| mod 2> on |+>^n |->, with
/// loops counted in |E_S|. The result has n + 1 qubits, the ancilla last.
/// Throws IntegrityError if the ancilla does not come back as exactly |->.
StateVector oracle_prepare(const Graph &g);

/// a on the low qubits, b on the high ones.
StateVector tensor_product(const StateVector &a, const StateVector &b);

/// OpenMP kernels; the `_serial` twins are the reference implementations.
void apply_gate(StateVector &v, Gate g, std::size_t q);
void apply_gate(StateVector &v, Gate g, std::size_t a, std::size_t b);
void apply_gate_serial(StateVector &v, Gate g, std::size_t q);
void apply_gate_serial(StateVector &v, Gate g, std::size_t a, std::size_t b);

/// Applies the Pauli operator including its sign.
void apply_pauli(StateVector &v, const PauliString &p);

/// <a|b>.
Amplitude overlap(const StateVector &a, const StateVector &b);
Amplitude overlap_serial(const StateVector &a, const StateVector &b);

/// <v|P|v>, real for Hermitian P.
double expectation(const StateVector &v, const PauliString &p);

bool equal_up_to_phase(const StateVector &a, const StateVector &b, double tol = 1e-9);

/// The unique state fixed by n independent commuting generators, found by
/// projecting a computational basis state inside its support.
StateVector from_stabilizers(std::span<const PauliString> generators);
StateVector tableau_state(const Tableau &t);

/// Projects qubit q onto Z = (-1)^bit, removes it, and renormalizes. Returns
/// the Born probability of that outcome; the state is left unchanged if it is 0.
double project_and_remove(StateVector &v, std::size_t q, int bit);

}  // namespace qgraph::dense
