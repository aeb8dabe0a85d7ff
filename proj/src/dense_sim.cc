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

#include "qgraph/dense_sim.h"

#include <array>
#include <bit>
#include <cmath>
#include <string>

#include "qgraph/errors.h"
#include "qgraph/gf2.h"

namespace qgraph::dense {

namespace {

using Matrix2 = std::array<Amplitude, 4>;  // row major

constexpr std::size_t kParallelDim = std::size_t{1} << 10;

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

void check_size(std::size_t n, std::size_t cap) {
    if (n > cap) {
        throw PreconditionError("dense simulation is capped at " + std::to_string(cap) + " qubits, got " +
                                std::to_string(n));
    }
}

void check_qubit(const StateVector &v, std::size_t q) {
    if (q >= v.num_qubits()) {
        throw IndexError("qubit " + std::to_string(q) + " out of range for " + std::to_string(v.num_qubits()) +
                         "-qubit state");
    }
}

void check_same_shape(const StateVector &a, const StateVector &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw ShapeError("state vectors have " + std::to_string(a.num_qubits()) + " and " +
                         std::to_string(b.num_qubits()) + " qubits");
    }
}

Matrix2 single_qubit_matrix(Gate g) {
    const Amplitude i(0, 1);
    const double h = kInvSqrt2;
    switch (g) {
        case Gate::H:
            return {h, h, h, -h};
        case Gate::S:
            return {1, 0, 0, i};
        case Gate::X:
            return {0, 1, 1, 0};
        case Gate::Y:
            return {0, -i, i, 0};
        case Gate::Z:
            return {1, 0, 0, -1};
        case Gate::SQRT_MINUS_IX:  // (I - iX)/sqrt2
            return {h, -i * h, -i * h, h};
        case Gate::SQRT_IZ:  // (I + iZ)/sqrt2
            return {(1.0 + i) * h, 0, 0, (1.0 - i) * h};
        default:
            throw PreconditionError("gate " + std::string(gate_name(g)) + " acts on two qubits");
    }
}

template <bool Parallel>
void apply_single(StateVector &v, Gate g, std::size_t q) {
    check_qubit(v, q);
    Matrix2 m = single_qubit_matrix(g);
    auto &amp = v.amplitudes();
    const std::int64_t half = static_cast<std::int64_t>(v.dim() / 2);
    const std::size_t bit = std::size_t{1} << q;
    const std::size_t low = bit - 1;
#pragma omp parallel for if (Parallel && v.dim() >= kParallelDim)
    for (std::int64_t j = 0; j < half; j++) {
        std::size_t k = static_cast<std::size_t>(j);
        std::size_t i0 = ((k & ~low) << 1) | (k & low);
        std::size_t i1 = i0 | bit;
        Amplitude a0 = amp[i0];
        Amplitude a1 = amp[i1];
        amp[i0] = m[0] * a0 + m[1] * a1;
        amp[i1] = m[2] * a0 + m[3] * a1;
    }
}

template <bool Parallel>
void apply_double(StateVector &v, Gate g, std::size_t a, std::size_t b) {
    check_qubit(v, a);
    check_qubit(v, b);
    if (g == Gate::CZ && a == b) {
        apply_single<Parallel>(v, Gate::Z, a);
        return;
    }
    if (a == b) {
        throw PreconditionError("two-qubit gate needs distinct qubits");
    }
    auto &amp = v.amplitudes();
    const std::int64_t dim = static_cast<std::int64_t>(v.dim());
    const std::size_t ma = std::size_t{1} << a;
    const std::size_t mb = std::size_t{1} << b;
    if (g == Gate::CZ) {
#pragma omp parallel for if (Parallel && v.dim() >= kParallelDim)
        for (std::int64_t j = 0; j < dim; j++) {
            std::size_t k = static_cast<std::size_t>(j);
            if ((k & ma) && (k & mb)) {
                amp[k] = -amp[k];
            }
        }
    } else if (g == Gate::CNOT) {
#pragma omp parallel for if (Parallel && v.dim() >= kParallelDim)
        for (std::int64_t j = 0; j < dim; j++) {
            std::size_t k = static_cast<std::size_t>(j);
            if ((k & ma) && !(k & mb)) {
                std::swap(amp[k], amp[k | mb]);
            }
        }
    } else {
        throw PreconditionError("gate " + std::string(gate_name(g)) + " acts on one qubit");
    }
}

template <bool Parallel>
Amplitude overlap_impl(const StateVector &a, const StateVector &b) {
    check_same_shape(a, b);
    const auto &x = a.amplitudes();
    const auto &y = b.amplitudes();
    const std::int64_t dim = static_cast<std::int64_t>(a.dim());
    double re = 0;
    double im = 0;
#pragma omp parallel for reduction(+ : re, im) if (Parallel && a.dim() >= kParallelDim)
    for (std::int64_t k = 0; k < dim; k++) {
        Amplitude t = std::conj(x[k]) * y[k];
        re += t.real();
        im += t.imag();
    }
    return {re, im};
}

// A basis state with nonzero amplitude: solves z.k = sign for every Z-type
// group element +-Z^z, found from the left kernel of the X block.
std::size_t support_index(std::span<const PauliString> gens, std::size_t n) {
    gf2::BitMatrix xs(gens.size(), n);
    for (std::size_t i = 0; i < gens.size(); i++) {
        xs.row(i) = gens[i].xs;
    }
    gf2::BitMatrix kernel = left_kernel(xs);
    gf2::BitMatrix constraints(kernel.rows(), n);
    gf2::BitVector rhs(kernel.rows());
    for (std::size_t r = 0; r < kernel.rows(); r++) {
        PauliString prod(n);
        const auto &c = kernel.row(r);
        for (std::size_t i = c.find_next(0); i < gens.size(); i = c.find_next(i + 1)) {
            prod = multiply_commuting(prod, gens[i]);
        }
        constraints.row(r) = prod.zs;
        rhs.set(r, prod.negative);
    }
    auto k = gf2::solve(constraints, rhs);
    if (!k) {
        throw IntegrityError("generators stabilize no state (contradictory Z-type elements)");
    }
    std::size_t index = 0;
    for (std::size_t q = 0; q < n; q++) {
        if (k->get(q)) {
            index |= std::size_t{1} << q;
        }
    }
    return index;
}

}  // namespace

StateVector::StateVector(std::size_t num_qubits) : num_qubits_(num_qubits) {
    check_size(num_qubits, kMaxQubits);
    amplitudes_.assign(std::size_t{1} << num_qubits, Amplitude(0));
    amplitudes_[0] = 1;
}

StateVector StateVector::plus(std::size_t num_qubits) {
    StateVector v(num_qubits);
    double a = std::pow(2.0, -0.5 * static_cast<double>(num_qubits));
    v.amplitudes_.assign(v.dim(), Amplitude(a));
    return v;
}

StateVector StateVector::from_amplitudes(std::size_t num_qubits, std::vector<Amplitude> amplitudes) {
    StateVector v(num_qubits);
    if (amplitudes.size() != v.dim()) {
        throw ShapeError("expected " + std::to_string(v.dim()) + " amplitudes, got " +
                         std::to_string(amplitudes.size()));
    }
    v.amplitudes_ = std::move(amplitudes);
    return v;
}

double StateVector::norm2() const {
    double s = 0;
    for (const auto &a : amplitudes_) {
        s += std::norm(a);
    }
    return s;
}

void StateVector::normalize() {
    double n = std::sqrt(norm2());
    if (n == 0) {
        throw PreconditionError("cannot normalize the zero vector");
    }
    for (auto &a : amplitudes_) {
        a /= n;
    }
}

StateVector graph_state_vector(const Graph &g) {
    std::size_t n = g.num_vertices();
    StateVector v = StateVector::plus(n);
    for (std::size_t k = 0; k < v.dim(); k++) {
        int parity = 0;
        for (std::size_t u = 0; u < n; u++) {
            if (!((k >> u) & 1)) {
                continue;
            }
            parity ^= g.has_loop(u);
            for (std::size_t w : g.neighbor_list(u)) {
                if (w > u && ((k >> w) & 1)) {
                    parity ^= 1;
                }
            }
        }
        if (parity) {
            v.amplitudes()[k] = -v.amplitudes()[k];
        }
    }
    return v;
}

StateVector oracle_prepare(const Graph &g) {
    std::size_t n = g.num_vertices();
    check_size(n, kMaxQubits - 1);
    StateVector v = StateVector::plus(n + 1);
    apply_gate(v, Gate::Z, n);

    const std::size_t anc = std::size_t{1} << n;
    auto &amp = v.amplitudes();
    for (std::size_t s = 0; s < anc; s++) {
        std::size_t edges = 0;
        for (std::size_t u = 0; u < n; u++) {
            if (!((s >> u) & 1)) {
                continue;
            }
            edges += g.has_loop(u);
            for (std::size_t w : g.neighbor_list(u)) {
                edges += w > u && ((s >> w) & 1);
            }
        }
        if (edges & 1) {
            std::swap(amp[s], amp[s | anc]);
        }
    }

    StateVector minus = StateVector::plus(1);
    apply_gate(minus, Gate::Z, 0);
    if (!equal_up_to_phase(v, tensor_product(graph_state_vector(g), minus))) {
        throw IntegrityError("oracle preparation did not factor as |G> (x) |->");
    }
    return v;
}

StateVector tensor_product(const StateVector &a, const StateVector &b) {
    StateVector out(a.num_qubits() + b.num_qubits());
    for (std::size_t j = 0; j < b.dim(); j++) {
        for (std::size_t i = 0; i < a.dim(); i++) {
            out.amplitudes()[(j << a.num_qubits()) | i] = a[i] * b[j];
        }
    }
    return out;
}

void apply_gate(StateVector &v, Gate g, std::size_t q) {
    apply_single<true>(v, g, q);
}

void apply_gate(StateVector &v, Gate g, std::size_t a, std::size_t b) {
    apply_double<true>(v, g, a, b);
}

void apply_gate_serial(StateVector &v, Gate g, std::size_t q) {
    apply_single<false>(v, g, q);
}

void apply_gate_serial(StateVector &v, Gate g, std::size_t a, std::size_t b) {
    apply_double<false>(v, g, a, b);
}

void apply_pauli(StateVector &v, const PauliString &p) {
    if (p.num_qubits() != v.num_qubits()) {
        throw ShapeError("Pauli string size does not match the state");
    }
    for (std::size_t q = 0; q < v.num_qubits(); q++) {
        switch (p.pauli_at(q)) {
            case 'X':
                apply_gate(v, Gate::X, q);
                break;
            case 'Y':
                apply_gate(v, Gate::Y, q);
                break;
            case 'Z':
                apply_gate(v, Gate::Z, q);
                break;
            default:
                break;
        }
    }
    if (p.negative) {
        for (auto &a : v.amplitudes()) {
            a = -a;
        }
    }
}

Amplitude overlap(const StateVector &a, const StateVector &b) {
    return overlap_impl<true>(a, b);
}

Amplitude overlap_serial(const StateVector &a, const StateVector &b) {
    return overlap_impl<false>(a, b);
}

double expectation(const StateVector &v, const PauliString &p) {
    StateVector w = v;
    apply_pauli(w, p);
    return overlap(v, w).real();
}

bool equal_up_to_phase(const StateVector &a, const StateVector &b, double tol) {
    check_same_shape(a, b);
    Amplitude ov = overlap(a, b);
    double mag = std::abs(ov);
    if (mag < tol) {
        return false;
    }
    Amplitude phase = ov / mag;  // b ~ phase * a
    for (std::size_t k = 0; k < a.dim(); k++) {
        if (std::abs(phase * a[k] - b[k]) > tol) {
            return false;
        }
    }
    return true;
}

StateVector from_stabilizers(std::span<const PauliString> generators) {
    std::size_t n = generators.size();
    for (const auto &g : generators) {
        if (g.num_qubits() != n) {
            throw ShapeError("need exactly one generator per qubit");
        }
    }
    StateVector v(n);
    v.amplitudes()[0] = 0;
    v.amplitudes()[support_index(generators, n)] = 1;
    for (const auto &g : generators) {
        StateVector gv = v;
        apply_pauli(gv, g);
        for (std::size_t k = 0; k < v.dim(); k++) {
            v.amplitudes()[k] = 0.5 * (v[k] + gv[k]);
        }
    }
    if (v.norm2() < 1e-12) {
        throw IntegrityError("stabilizer projection vanished; generators are not independent");
    }
    v.normalize();
    return v;
}

StateVector tableau_state(const Tableau &t) {
    return from_stabilizers(t.generators());
}

double project_and_remove(StateVector &v, std::size_t q, int bit) {
    check_qubit(v, q);
    std::size_t n = v.num_qubits();
    std::size_t low = (std::size_t{1} << q) - 1;
    std::vector<Amplitude> out(v.dim() / 2);
    for (std::size_t k = 0; k < out.size(); k++) {
        std::size_t full = ((k & ~low) << 1) | (k & low) | (static_cast<std::size_t>(bit & 1) << q);
        out[k] = v[full];
    }
    double p = 0;
    for (const auto &a : out) {
        p += std::norm(a);
    }
    if (p == 0) {
        return 0;
    }
    v = StateVector::from_amplitudes(n - 1, std::move(out));
    v.normalize();
    return p;
}

}  // namespace qgraph::dense
