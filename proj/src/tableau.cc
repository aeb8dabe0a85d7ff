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

#include "qgraph/tableau.h"

#include <algorithm>
#include <string>
#include <utility>

#include "qgraph/errors.h"

namespace qgraph {

bool is_two_qubit(Gate g) {
    return g == Gate::CZ || g == Gate::CNOT;
}

std::string_view gate_name(Gate g) {
    switch (g) {
        case Gate::H:
            return "H";
        case Gate::S:
            return "S";
        case Gate::X:
            return "X";
        case Gate::Y:
            return "Y";
        case Gate::Z:
            return "Z";
        case Gate::CZ:
            return "CZ";
        case Gate::CNOT:
            return "CNOT";
        case Gate::SQRT_MINUS_IX:
            return "SQRT_MINUS_IX";
        case Gate::SQRT_IZ:
            return "SQRT_IZ";
    }
    return "?";
}

Tableau::Tableau(std::size_t n, std::uint64_t seed) : generators_(n, PauliString(n)), rng_(seed) {
}

Tableau Tableau::new_plus(std::size_t n, std::uint64_t seed) {
    Tableau t(n, seed);
    for (std::size_t q = 0; q < n; q++) {
        t.generators_[q].xs.set(q, true);
    }
    return t;
}

Tableau Tableau::from_generators(std::vector<PauliString> generators, std::uint64_t seed) {
    Tableau t(0, seed);
    for (const auto &g : generators) {
        if (g.num_qubits() != generators.size()) {
            throw ShapeError("Tableau::from_generators: need n generators on n qubits");
        }
    }
    t.generators_ = std::move(generators);
    if (!t.is_valid()) {
        throw PreconditionError("Tableau::from_generators: generators must commute and be independent");
    }
    return t;
}

void Tableau::check_qubit(std::size_t q) const {
    if (q >= num_qubits()) {
        throw IndexError("qubit " + std::to_string(q) + " out of range for " + std::to_string(num_qubits()) +
                         "-qubit tableau");
    }
}

void Tableau::apply(Gate gate, std::size_t q) {
    check_qubit(q);
    if (is_two_qubit(gate)) {
        throw PreconditionError(std::string(gate_name(gate)) + " needs two qubits");
    }
    for (auto &g : generators_) {
        bool x = g.xs.get(q);
        bool z = g.zs.get(q);
        switch (gate) {
            case Gate::H:
                g.negative ^= x && z;
                g.xs.set(q, z);
                g.zs.set(q, x);
                break;
            case Gate::S:
                g.negative ^= x && z;
                g.zs.set(q, z ^ x);
                break;
            case Gate::X:
                g.negative ^= z;
                break;
            case Gate::Y:
                g.negative ^= x ^ z;
                break;
            case Gate::Z:
                g.negative ^= x;
                break;
            case Gate::SQRT_MINUS_IX:
                g.negative ^= z && !x;
                g.xs.set(q, x ^ z);
                break;
            case Gate::SQRT_IZ:
                g.negative ^= x && !z;
                g.zs.set(q, z ^ x);
                break;
            default:
                break;
        }
    }
}

void Tableau::apply(Gate gate, std::size_t a, std::size_t b) {
    check_qubit(a);
    check_qubit(b);
    if (!is_two_qubit(gate)) {
        throw PreconditionError(std::string(gate_name(gate)) + " is a single-qubit gate");
    }
    if (a == b) {
        if (gate == Gate::CZ) {
            apply(Gate::Z, a);
            return;
        }
        throw PreconditionError("CNOT requires distinct control and target");
    }
    for (auto &g : generators_) {
        bool xa = g.xs.get(a), za = g.zs.get(a);
        bool xb = g.xs.get(b), zb = g.zs.get(b);
        if (gate == Gate::CZ) {
            g.negative ^= xa && xb && (za ^ zb);
            g.zs.set(a, za ^ xb);
            g.zs.set(b, zb ^ xa);
        } else {
            g.negative ^= xa && zb && !(xb ^ za);
            g.xs.set(b, xb ^ xa);
            g.zs.set(a, za ^ zb);
        }
    }
}

MeasureResult Tableau::measure(const PauliString &p) {
    if (p.num_qubits() != num_qubits()) {
        throw ShapeError("Tableau::measure: observable size mismatch");
    }
    std::size_t first = num_qubits();
    for (std::size_t i = 0; i < num_qubits(); i++) {
        if (!generators_[i].commutes(p)) {
            if (first == num_qubits()) {
                first = i;
            } else {
                generators_[i] = multiply_commuting(generators_[i], generators_[first]);
            }
        }
    }
    if (first == num_qubits()) {
        Membership m = StabilizerBasis(generators_).test(p);
        if (m == Membership::kNo) {
            throw IntegrityError("commuting observable missing from a full-rank stabilizer group");
        }
        return {m == Membership::kPlus ? 1 : -1, true};
    }
    int outcome = (rng_() >> 63) ? -1 : 1;
    generators_[first] = p;
    generators_[first].negative ^= (outcome == -1);
    return {outcome, false};
}

std::optional<gf2::BitVector> Tableau::combination_for(const PauliString &p) const {
    std::size_t n = num_qubits();
    gf2::BitMatrix a(2 * n, n);
    for (std::size_t g = 0; g < n; g++) {
        const auto &gen = generators_[g];
        for (std::size_t q = gen.xs.find_next(0); q < n; q = gen.xs.find_next(q + 1)) {
            a.set(q, g, true);
        }
        for (std::size_t q = gen.zs.find_next(0); q < n; q = gen.zs.find_next(q + 1)) {
            a.set(n + q, g, true);
        }
    }
    return gf2::solve(a, p.symplectic());
}

Membership Tableau::contains(const PauliString &p) const {
    if (p.num_qubits() != num_qubits()) {
        throw ShapeError("Tableau::contains: observable size mismatch");
    }
    auto combo = combination_for(p);
    if (!combo) {
        return Membership::kNo;
    }
    PauliString product(num_qubits());
    for (std::size_t g = combo->find_next(0); g < num_qubits(); g = combo->find_next(g + 1)) {
        product = multiply_commuting(product, generators_[g]);
    }
    return product.negative == p.negative ? Membership::kPlus : Membership::kMinus;
}

std::size_t Tableau::add_qubit_plus() {
    std::size_t q = num_qubits();
    for (auto &g : generators_) {
        g.xs.push_back(false);
        g.zs.push_back(false);
    }
    PauliString x(q + 1);
    x.xs.set(q, true);
    generators_.push_back(std::move(x));
    return q;
}

int Tableau::discard_qubit(std::size_t q, char axis) {
    check_qubit(q);
    PauliString target = PauliString::single(num_qubits(), q, axis);
    auto combo = combination_for(target);
    if (!combo) {
        throw PreconditionError("qubit " + std::to_string(q) + " is entangled; cannot discard it");
    }
    PauliString product(num_qubits());
    for (std::size_t g = combo->find_next(0); g < num_qubits(); g = combo->find_next(g + 1)) {
        product = multiply_commuting(product, generators_[g]);
    }
    std::size_t pivot = combo->find_next(0);
    generators_[pivot] = product;
    for (std::size_t j = 0; j < num_qubits(); j++) {
        auto &g = generators_[j];
        if (j != pivot && (g.xs.get(q) || g.zs.get(q))) {
            g = multiply_commuting(g, product);
        }
    }
    generators_.erase(generators_.begin() + static_cast<std::ptrdiff_t>(pivot));
    for (auto &g : generators_) {
        g.xs.erase(q);
        g.zs.erase(q);
    }
    return product.sign();
}

Tableau Tableau::permuted(std::span<const std::size_t> perm) const {
    std::size_t n = num_qubits();
    if (perm.size() != n) {
        throw PreconditionError("permutation size does not match qubit count");
    }
    std::vector<bool> seen(n, false);
    for (std::size_t v : perm) {
        if (v >= n || seen[v]) {
            throw PreconditionError("not a permutation");
        }
        seen[v] = true;
    }
    Tableau result = *this;
    for (std::size_t i = 0; i < n; i++) {
        const auto &src = generators_[i];
        auto &dst = result.generators_[i];
        dst.xs = gf2::BitVector(n);
        dst.zs = gf2::BitVector(n);
        for (std::size_t q = 0; q < n; q++) {
            dst.xs.set(perm[q], src.xs.get(q));
            dst.zs.set(perm[q], src.zs.get(q));
        }
    }
    return result;
}

bool Tableau::is_valid() const {
    std::size_t n = num_qubits();
    std::vector<gf2::BitVector> rows;
    rows.reserve(n);
    for (std::size_t i = 0; i < n; i++) {
        if (generators_[i].num_qubits() != n) {
            return false;
        }
        for (std::size_t j = i + 1; j < n; j++) {
            if (!generators_[i].commutes(generators_[j])) {
                return false;
            }
        }
        rows.push_back(generators_[i].symplectic());
    }
    if (n == 0) {
        return true;
    }
    return gf2::rank(gf2::BitMatrix::from_rows(std::move(rows))) == n;
}

Tableau tensor(const Tableau &a, const Tableau &b) {
    std::size_t na = a.num_qubits();
    std::size_t nb = b.num_qubits();
    Tableau result = a;
    result.generators_.clear();
    for (const auto &g : a.generators_) {
        PauliString p;
        p.xs = g.xs.concat(gf2::BitVector(nb));
        p.zs = g.zs.concat(gf2::BitVector(nb));
        p.negative = g.negative;
        result.generators_.push_back(std::move(p));
    }
    for (const auto &g : b.generators_) {
        PauliString p;
        p.xs = gf2::BitVector(na).concat(g.xs);
        p.zs = gf2::BitVector(na).concat(g.zs);
        p.negative = g.negative;
        result.generators_.push_back(std::move(p));
    }
    return result;
}

Dyadic inner_product_mag2(const Tableau &a, const Tableau &b) {
    std::size_t n = a.num_qubits();
    if (b.num_qubits() != n) {
        throw ShapeError("inner_product_mag2: qubit counts differ");
    }
    if (n == 0) {
        return Dyadic(1);
    }
    std::vector<gf2::BitVector> rows;
    rows.reserve(2 * n);
    for (const auto &g : a.generators()) {
        rows.push_back(g.symplectic());
    }
    for (const auto &g : b.generators()) {
        rows.push_back(g.symplectic());
    }
    gf2::BitMatrix kernel = gf2::left_kernel(gf2::BitMatrix::from_rows(std::move(rows)));
    for (std::size_t k = 0; k < kernel.rows(); k++) {
        const auto &c = kernel.row(k);
        PauliString pa(n), pb(n);
        for (std::size_t i = c.find_next(0); i < 2 * n; i = c.find_next(i + 1)) {
            if (i < n) {
                pa = multiply_commuting(pa, a.generators()[i]);
            } else {
                pb = multiply_commuting(pb, b.generators()[i - n]);
            }
        }
        if (pa.negative != pb.negative) {
            return Dyadic(0);
        }
    }
    return Dyadic::inverse_pow2(static_cast<std::uint32_t>(n - kernel.rows()));
}

namespace {

bool symplectic_bit(const PauliString &p, std::size_t col) {
    std::size_t n = p.num_qubits();
    return col < n ? p.xs.get(col) : p.zs.get(col - n);
}

}  // namespace

StabilizerBasis::StabilizerBasis(std::span<const PauliString> generators)
    : num_qubits_(generators.empty() ? 0 : generators[0].num_qubits()), rows_(generators.begin(), generators.end()) {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < 2 * num_qubits_ && rank < rows_.size(); col++) {
        std::size_t pivot = rank;
        while (pivot < rows_.size() && !symplectic_bit(rows_[pivot], col)) {
            pivot++;
        }
        if (pivot == rows_.size()) {
            continue;
        }
        std::swap(rows_[rank], rows_[pivot]);
        for (std::size_t r = 0; r < rows_.size(); r++) {
            if (r != rank && symplectic_bit(rows_[r], col)) {
                rows_[r] = multiply_commuting(rows_[r], rows_[rank]);
            }
        }
        pivots_.push_back(col);
        rank++;
    }
    rows_.resize(rank);
}

Membership StabilizerBasis::test(const PauliString &p) const {
    if (p.num_qubits() != num_qubits_) {
        throw ShapeError("StabilizerBasis::test: observable size mismatch");
    }
    PauliString residual = p;
    int log_i = 0;
    for (std::size_t i = 0; i < rows_.size(); i++) {
        if (symplectic_bit(residual, pivots_[i])) {
            log_i += residual.inplace_right_mul(rows_[i]);
        }
    }
    if (!residual.is_identity()) {
        return Membership::kNo;
    }
    log_i %= 4;
    if (log_i & 1) {
        throw IntegrityError("StabilizerBasis: imaginary phase for a group member");
    }
    bool negative = residual.negative ^ (log_i == 2);
    return negative ? Membership::kMinus : Membership::kPlus;
}

}  // namespace qgraph
